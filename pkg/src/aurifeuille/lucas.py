"""The Lucas/Aurifeuille factor pair (C_n, D_n) of F_n for square-free n.

For every square-free n >= 2 there are palindromic monic integer
polynomials C_n (degree d = phi(n')/2) and D_n (degree d - 1) with

    F_n(x) = C_n(x)^2 - n * x * D_n(x)^2,

so F_n(x) splits as (C_n - sqrt(n*x) D_n)(C_n + sqrt(n*x) D_n) whenever
n*x is a perfect square — in particular at x = m^2 * n.  This is the
classical Aurifeuillian factorization of m^(2n) * n^n +- 1.

`algorithm_l` computes the pair by an integer-only recurrence driven by
the power sums

    q_k = (n|k)                                  for odd k,
    q_k = mu(n'/g) * phi(g) * cos((n-1)*k*pi/4)  for even k, g = gcd(k, n'),

where the cosine is 1, 0, -1, 0 as (n-1)*(k/2) is 0, 1, 2, 3 (mod 4).
Writing C_n = sum gamma_j x^(d-j) and D_n = sum delta_j x^(d-1-j):

    gamma_0 = delta_0 = 1,
    2k * gamma_k     = sum_{j<k} ( n * q_{2k-2j-1} * delta_j - q_{2k-2j} * gamma_j ),
    (2k+1) * delta_k = gamma_k + sum_{j<k} ( q_{2k+1-2j} * gamma_j - q_{2k-2j} * delta_j ).

All divisions are exact for consistent inputs (`NonIntegerStep`
otherwise).  Both polynomials are palindromic, so by default only the
first halves are recurred (gamma up to floor(d/2), delta up to
floor((d-1)/2)) and the rest mirrored; ``use_symmetry=False`` recurs
everything directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import NonIntegerStep, NotAurifeuillianPoint
from .numthy import (
    _require_squarefree,
    euler_phi,
    gcd,
    jacobi,
    make_context,
    moebius,
)
from .poly import IntPolynomial
from .cyclotomic import f_poly

_COS_QUARTER = (1, 0, -1, 0)  # cos(t*pi/2) for t = 0, 1, 2, 3 (mod 4)


@dataclass(frozen=True)
class LucasPair:
    """C_n and D_n held as descending coefficient tuples.

    ``gamma[j]`` multiplies x^(d-j) in C_n; ``delta[j]`` multiplies
    x^(d-1-j) in D_n.  Both tuples are palindromes starting with 1.
    """

    n: int
    n_prime: int
    s_prime: int
    gamma: tuple[int, ...]
    delta: tuple[int, ...]
    d: int

    def poly_c(self) -> IntPolynomial:
        return IntPolynomial.from_descending(self.gamma)

    def poly_d(self) -> IntPolynomial:
        return IntPolynomial.from_descending(self.delta)


def lucas_q(n: int, k: int) -> int:
    """The k-th power sum q_k driving the C_n/D_n recurrence."""
    _require_squarefree(n)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k % 2:
        return jacobi(n, k)
    n_prime = n if n % 4 == 1 else 2 * n
    c = _COS_QUARTER[((n - 1) * (k // 2)) % 4]
    if c == 0:
        return 0
    g = gcd(k, n_prime)
    return moebius(n_prime // g) * euler_phi(g) * c


def algorithm_l(n: int, use_symmetry: bool = True) -> LucasPair:
    """Compute the Lucas pair (C_n, D_n) for square-free n >= 2."""
    ctx = make_context(n)
    d = ctx.d_lucas
    gamma_direct = d // 2 if use_symmetry else d
    delta_direct = (d - 1) // 2 if use_symmetry else d - 1
    q = [0] * (2 * max(gamma_direct, delta_direct) + 2)
    for k in range(1, len(q)):
        q[k] = lucas_q(n, k)
    gamma = [1]
    delta = [1]
    for k in range(1, max(gamma_direct, delta_direct) + 1):
        if k <= gamma_direct:
            acc = 0
            for j in range(k):
                acc += n * q[2 * k - 2 * j - 1] * delta[j] - q[2 * k - 2 * j] * gamma[j]
            if acc % (2 * k):
                raise NonIntegerStep(
                    f"n={n}, gamma step k={k}: {acc} not divisible by 2k"
                )
            gamma.append(acc // (2 * k))
        if k <= delta_direct:
            acc = gamma[k]
            for j in range(k):
                acc += q[2 * k + 1 - 2 * j] * gamma[j] - q[2 * k - 2 * j] * delta[j]
            if acc % (2 * k + 1):
                raise NonIntegerStep(
                    f"n={n}, delta step k={k}: {acc} not divisible by 2k+1"
                )
            delta.append(acc // (2 * k + 1))
    if use_symmetry:
        for k in range(gamma_direct + 1, d + 1):
            gamma.append(gamma[d - k])
        for k in range(delta_direct + 1, d):
            delta.append(delta[d - 1 - k])
    return LucasPair(
        n=n,
        n_prime=ctx.n_prime,
        s_prime=ctx.s_prime,
        gamma=tuple(gamma),
        delta=tuple(delta),
        d=d,
    )


def verify_lucas(n: int) -> bool:
    """Exact check of F_n = C_n^2 - n*x*D_n^2 for square-free n >= 2."""
    pair = algorithm_l(n)
    c = pair.poly_c()
    dd = pair.poly_d()
    shift = IntPolynomial([0, 1])  # x
    return f_poly(n) == c * c - n * (shift * dd * dd)


def aurifeuillian_polys_eval(
    n: int, x: Fraction | int
) -> tuple[Fraction, Fraction]:
    """Evaluate the split F_n(x) = (C_n -+ sqrt(n*x) D_n) at x = m^2 * n.

    The point must make n*x a perfect rational square, i.e. x = (p/q)^2 * n
    with p, q positive integers; then sqrt(n*x) = p*n/q is rational and the
    two exact rational factors are returned, smaller first.  Any other x
    raises `NotAurifeuillianPoint`.
    """
    x = Fraction(x)
    if x <= 0:
        raise NotAurifeuillianPoint(f"need x > 0, got {x}")
    msq = x / n
    p = isqrt(msq.numerator)
    q = isqrt(msq.denominator)
    if p * p != msq.numerator or q * q != msq.denominator:
        raise NotAurifeuillianPoint(
            f"x = {x} is not m^2 * {n} for rational m"
        )
    pair = algorithm_l(n)
    c_val = pair.poly_c().evaluate(x)
    d_val = pair.poly_d().evaluate(x)
    root = Fraction(p * n, q)  # sqrt(n*x)
    lo = c_val - root * d_val
    hi = c_val + root * d_val
    if lo > hi:
        lo, hi = hi, lo
    return lo, hi


__all__ = [
    "LucasPair",
    "algorithm_l",
    "aurifeuillian_polys_eval",
    "lucas_q",
    "verify_lucas",
]
