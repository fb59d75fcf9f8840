"""The Gauss factor pair (A_n, B_n) of 4*Phi_n for odd square-free n.

For odd square-free n >= 3, with s = +1 for n = 1 (mod 4) and -1 for
n = 3 (mod 4), there are integer polynomials A_n (degree d = phi(n)/2,
leading coefficient 2) and B_n (degree d - 1, monic) with

    4 * Phi_n(x) = A_n(x)^2 - s * n * B_n(x)^2.

`algorithm_d` computes them by an integer-only recurrence on the
coefficients, driven by the split power sums of the roots: writing
g = gcd(k, n),

    q_k = mu(n/g) * phi(g),      r_k = (k|n)  (Jacobi symbol),

the descending coefficients alpha_k of A_n and beta_k of B_n satisfy

    alpha_0 = 2,  beta_0 = 0,
    2k * alpha_k = sum_{j<k} ( s*n*r_{k-j}*beta_j - q_{k-j}*alpha_j ),
    2k * beta_k  = sum_{j<k} ( r_{k-j}*alpha_j   - q_{k-j}*beta_j  ).

Every division by 2k is exact when the inputs are consistent; a failed
division is reported as `NonIntegerStep` and means corrupted inputs or an
implementation bug (it doubles as an overflow canary in ports to bounded
integer types).

Both halves of each pair are symmetric up to sign, so only the first half
is recurred by default and the rest mirrored: alpha_k = (-1)^d
alpha_{d-k} (n > 3), and beta_k = -beta_{d-k} when n is composite with
n = 3 (mod 4), beta_k = beta_{d-k} otherwise.  Passing
``use_symmetry=False`` runs the recurrence all the way to k = d, which is
how the mirror rule itself is tested.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonIntegerStep, NotOddSquareFree
from .numthy import euler_phi, factorize, gcd, is_squarefree, jacobi, moebius
from .poly import IntPolynomial
from .cyclotomic import phi_moebius


@dataclass(frozen=True)
class GaussPair:
    """A_n and B_n held as descending coefficient tuples.

    ``alpha[j]`` multiplies x^(d-j) in A_n; ``beta[j]`` likewise in B_n
    (so beta[0] = 0 and B_n has degree d - 1).
    """

    n: int
    s: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    d: int

    def poly_a(self) -> IntPolynomial:
        return IntPolynomial.from_descending(self.alpha)

    def poly_b(self) -> IntPolynomial:
        return IntPolynomial.from_descending(self.beta)


def gauss_power_parts(n: int, k: int) -> tuple[int, int]:
    """The split power-sum parts (q_k, r_k) for odd square-free n.

    q_k = mu(n/g)*phi(g) with g = gcd(k, n), and r_k = (k|n); the k-th
    power sum of the roots of Phi_n(s*x) is (q_k + r_k*sqrt(s*n)) / 2.
    """
    _require_odd_squarefree(n)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    g = gcd(k, n)
    return moebius(n // g) * euler_phi(g), jacobi(k, n)


def algorithm_d(n: int, use_symmetry: bool = True) -> GaussPair:
    """Compute the Gauss pair (A_n, B_n) for odd square-free n >= 3."""
    _require_odd_squarefree(n)
    d = euler_phi(n) // 2
    s = 1 if n % 4 == 1 else -1
    sn = s * n
    direct = max(1, d // 2) if use_symmetry else d
    q = [0] * (direct + 1)
    r = [0] * (direct + 1)
    for k in range(1, direct + 1):
        q[k], r[k] = gauss_power_parts(n, k)
    alpha = [2]
    beta = [0]
    for k in range(1, direct + 1):
        acc_a = 0
        acc_b = 0
        for j in range(k):
            acc_a += sn * r[k - j] * beta[j] - q[k - j] * alpha[j]
            acc_b += r[k - j] * alpha[j] - q[k - j] * beta[j]
        if acc_a % (2 * k) or acc_b % (2 * k):
            raise NonIntegerStep(
                f"n={n}, k={k}: sums ({acc_a}, {acc_b}) not divisible by 2k"
            )
        alpha.append(acc_a // (2 * k))
        beta.append(acc_b // (2 * k))
    if use_symmetry and direct < d:
        sign_a = -1 if d % 2 else 1
        sign_b = -1 if (n % 4 == 3 and len(factorize(n)) > 1) else 1
        for k in range(direct + 1, d + 1):
            alpha.append(sign_a * alpha[d - k])
            beta.append(sign_b * beta[d - k])
    return GaussPair(n=n, s=s, alpha=tuple(alpha), beta=tuple(beta), d=d)


def verify_gauss(n: int) -> bool:
    """Exact check of 4*Phi_n = A_n^2 - s*n*B_n^2 for odd square-free n."""
    pair = algorithm_d(n)
    a = pair.poly_a()
    b = pair.poly_b()
    return 4 * phi_moebius(n) == a * a - (pair.s * n) * (b * b)


def _require_odd_squarefree(n: int) -> None:
    if n < 3 or n % 2 == 0 or not is_squarefree(n):
        raise NotOddSquareFree(
            f"need odd square-free n >= 3, got {n}"
        )


__all__ = ["GaussPair", "algorithm_d", "gauss_power_parts", "verify_gauss"]
