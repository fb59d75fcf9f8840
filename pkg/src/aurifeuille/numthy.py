"""Elementary number theory: multiplicative functions, Jacobi/Kronecker
symbols, and the small derived quantities the factor-pair algorithms need.

Everything is exact integer arithmetic.  Factoring is plain trial division,
which is ample for the desk-scale n this library targets (a few hundred).

Conventions used throughout the package, all attached to a square-free
n >= 2 by `make_context`:

    n'  = n when n = 1 (mod 4), else 2n
    s   = -1 when n = 3 (mod 4), else +1
    s'  = -1 when n = 5 (mod 8), else +1
    D   = s*n  (odd n only; D = 1 mod 4)

The Gauss pair (A_n, B_n) has degree d_gauss = phi(n)/2 (odd n); the Lucas
pair (C_n, D_n) has degree d_lucas = phi(n')/2, which equals
lambda = phi(2n)/2 for every square-free n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import (
    BadResidueClass,
    InternalInconsistency,
    NotSquareFree,
    NTooSmall,
    SearchCapExceeded,
)

PELL_SEARCH_CAP = 10**6


def factorize(n: int) -> list[tuple[int, int]]:
    """Factor n >= 1 into a list of (prime, exponent) pairs, ascending."""
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    """Ascending list of the positive divisors of n >= 1."""
    if n < 1:
        raise ValueError(f"divisors expects n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large


def moebius(n: int) -> int:
    """Moebius function: 0 on a repeated prime factor, else (-1)^#primes."""
    result = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        result = -result
    return result


def euler_phi(n: int) -> int:
    """Euler's totient, the count of 1 <= k <= n coprime to n."""
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def is_squarefree(n: int) -> bool:
    """True when n >= 1 has no repeated prime factor."""
    return all(e == 1 for _, e in factorize(n))


def jacobi(m: int, k: int) -> int:
    """Jacobi symbol (m|k) for odd k >= 1, zero whenever gcd(m, k) > 1.

    Computed by the usual quadratic-reciprocity reduction; m may be any
    integer, including negative.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError(f"jacobi needs an odd modulus k >= 1, got k={k}")
    m %= k
    t = 1
    while m:
        while m % 2 == 0:
            m //= 2
            if k % 8 in (3, 5):
                t = -t
        m, k = k, m
        if m % 4 == 3 and k % 4 == 3:
            t = -t
        m %= k
    return t if k == 1 else 0


def kronecker(m: int, k: int) -> int:
    """The symbol (m|k) for k >= 1: Jacobi for odd k, extended to even k.

    For even k the first argument must be odd, and the factor of two in k
    contributes (m|2) = +1 for m = +-1 (mod 8) and -1 for m = +-3 (mod 8).
    Both arguments even is rejected: the symbol would be identically zero
    and asking for it is always a caller bug in this library.
    """
    if k < 1:
        raise ValueError(f"kronecker needs k >= 1, got k={k}")
    if k % 2:
        return jacobi(m, k)
    if m % 2 == 0:
        raise ValueError(
            f"kronecker({m}, {k}): both arguments even is not supported"
        )
    e = 0
    while k % 2 == 0:
        k //= 2
        e += 1
    sym2 = 1 if m % 8 in (1, 7) else -1
    return (sym2**e) * jacobi(m, k)


def _require_squarefree(n: int, minimum: int = 2) -> None:
    if n < minimum:
        raise NTooSmall(f"n must be at least {minimum}, got {n}")
    if not is_squarefree(n):
        raise NotSquareFree(f"n must be square-free, got {n}")


@dataclass(frozen=True)
class NumTheoryContext:
    """The bundle of derived quantities attached to a square-free n >= 2.

    `d_gauss` and `discriminant` only make sense for odd n and are None
    otherwise.  `lam` is phi(2n)/2, which always equals `d_lucas`.
    """

    n: int
    n_prime: int
    s: int
    s_prime: int
    d_gauss: int | None
    d_lucas: int
    lam: int
    discriminant: int | None


def make_context(n: int) -> NumTheoryContext:
    """Build the `NumTheoryContext` for square-free n >= 2."""
    _require_squarefree(n)
    n_prime = n if n % 4 == 1 else 2 * n
    s = -1 if n % 4 == 3 else 1
    s_prime = -1 if n % 8 == 5 else 1
    d_lucas = euler_phi(n_prime) // 2
    lam = euler_phi(2 * n) // 2
    if lam != d_lucas:
        raise InternalInconsistency(
            f"phi(2n)/2 = {lam} disagrees with phi(n')/2 = {d_lucas} for n={n}"
        )
    if n % 2:
        d_gauss = euler_phi(n) // 2
        discriminant = s * n
    else:
        d_gauss = None
        discriminant = None
    return NumTheoryContext(
        n=n,
        n_prime=n_prime,
        s=s,
        s_prime=s_prime,
        d_gauss=d_gauss,
        d_lucas=d_lucas,
        lam=lam,
        discriminant=discriminant,
    )


@dataclass(frozen=True)
class ClassNumberData:
    """Class number of the imaginary quadratic field of discriminant -n.

    `sigma` is the weighted character sum over a period,
    sigma = sum_{j=1}^{n-1} (j|n) * j, from which h = -sigma/n for n > 3.
    `w` counts the units in the field: 6 for n = 3, else 2 here.
    """

    n: int
    sigma: int
    h: int
    w: int


def class_number_neg(n: int) -> ClassNumberData:
    """Class number h(-n) for square-free n = 3 (mod 4), via the character sum.

    For n > 3 the sum sigma = sum (j|n)*j over 0 < j < n equals -n*h(-n);
    n = 3 is the one case with extra units (w = 6), where sigma = -1 and
    h = 1.
    """
    _require_squarefree(n, minimum=3)
    if n % 4 != 3:
        raise BadResidueClass(
            f"class_number_neg needs n = 3 (mod 4), got n={n}"
        )
    sigma = sum(jacobi(j, n) * j for j in range(1, n))
    if n == 3:
        if sigma != -1:
            raise InternalInconsistency(f"sigma({n}) = {sigma}, expected -1")
        return ClassNumberData(n=n, sigma=sigma, h=1, w=6)
    if sigma % n:
        raise InternalInconsistency(
            f"sigma({n}) = {sigma} is not divisible by n"
        )
    h = -sigma // n
    if h < 1:
        raise InternalInconsistency(f"h(-{n}) computed as {h} < 1")
    return ClassNumberData(n=n, sigma=sigma, h=h, w=2)


@dataclass(frozen=True)
class PellUnit:
    """Fundamental unit (u + v*sqrt(n))/2 of the real field, u^2 - n*v^2 = 4."""

    n: int
    u: int
    v: int


def fundamental_unit(n: int, search_cap: int = PELL_SEARCH_CAP) -> PellUnit:
    """Smallest-v solution of u^2 - n*v^2 = 4 for square-free n = 1 (mod 4).

    Searches v = 1, 2, ... and stops at the first v with n*v^2 + 4 a
    perfect square; raises SearchCapExceeded past `search_cap`.
    """
    _require_squarefree(n)
    if n % 4 != 1:
        raise BadResidueClass(
            f"fundamental_unit needs n = 1 (mod 4), got n={n}"
        )
    for v in range(1, search_cap + 1):
        t = n * v * v + 4
        u = isqrt(t)
        if u * u == t:
            return PellUnit(n=n, u=u, v=v)
    raise SearchCapExceeded(
        f"no unit with v <= {search_cap} for n={n}"
    )


__all__ = [
    "PELL_SEARCH_CAP",
    "ClassNumberData",
    "NumTheoryContext",
    "PellUnit",
    "class_number_neg",
    "divisors",
    "euler_phi",
    "factorize",
    "fundamental_unit",
    "gcd",
    "is_squarefree",
    "jacobi",
    "kronecker",
    "make_context",
    "moebius",
]
