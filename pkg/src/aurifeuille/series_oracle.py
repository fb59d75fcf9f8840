"""Truncated rational power series, and the generating-function route to
the Gauss and Lucas pairs — an oracle that is independent of the
coefficient recurrences.

The route rests on the exponential generating identity for a monic P of
degree d with root power sums p_j:

    x^d * P(1/x) = exp( - sum_{j>=1} p_j x^j / j ),

applied to Phi_n and F_n.  Splitting the power sums into rational and
sqrt-of-n parts turns the exponentials into hyperbolic ones:

    A_n = 2 sqrt(Phi_n) cosh( sqrt(s*n)/2 * f_n ),
    B_n = 2 sqrt(Phi_n) * [ sinh( sqrt(s*n)/2 * f_n ) / sqrt(s*n) ],
    C_n(x)          = sqrt(F_n(x)) cosh( sqrt(n) * g_n(sqrt(x)) ),
    sqrt(x) D_n(x)  = sqrt(F_n(x)) * [ sinh( sqrt(n) * g_n(sqrt(x)) ) / sqrt(n) ],

with the Dirichlet-series-like logarithms

    f_n(x) = sum_{j>=1} (j|n) x^j / j        (odd square-free n),
    g_n(x) = sum_{j>=0} (n|2j+1) x^(2j+1) / (2j+1).

Expanded in even/odd powers of the hyperbolic argument, every coefficient
is rational — the square roots never materialize — so the whole
computation runs in exact `Fraction` arithmetic.  The half-integer powers
of the C_n/D_n case are handled by working in y = sqrt(x): all series
there are built to order 2K in y and the x-coefficients read off the even
(resp. odd) positions, with the complementary positions checked to vanish.

Truncation orders are explicit and never silently extended: combining two
series truncates to the shorter order.
"""

from __future__ import annotations

from fractions import Fraction
from math import exp, sqrt
from typing import Iterable, Union

from .errors import BadConstantTerm, NonIntegralOracle, NotOddSquareFree
from .numthy import _require_squarefree, is_squarefree, jacobi, make_context
from .cyclotomic import f_poly, phi_moebius
from .gauss import GaussPair
from .lucas import LucasPair, algorithm_l

_Coeff = Union[int, Fraction]


class RationalSeries:
    """A power series over Q truncated at a fixed order K.

    Stores exactly K+1 coefficients (constant term first).  Arithmetic
    keeps track of truncation: the result of combining two series has the
    smaller of the two orders, and nothing ever extends an order
    implicitly.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[_Coeff], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            del cs[order + 1 :]
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        elif not cs:
            raise ValueError("empty series needs an explicit order")
        object.__setattr__(self, "_coeffs", tuple(cs))

    @classmethod
    def zero(cls, order: int) -> "RationalSeries":
        return cls([], order=order)

    @classmethod
    def one(cls, order: int) -> "RationalSeries":
        return cls([1], order=order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, j: int) -> Fraction:
        return self._coeffs[j]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("RationalSeries", self._coeffs))

    def __repr__(self) -> str:
        return f"RationalSeries({list(self._coeffs)!r})"

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def truncate(self, order: int) -> "RationalSeries":
        if order > self.order:
            raise ValueError(
                f"cannot extend a series of order {self.order} to {order}"
            )
        return RationalSeries(self._coeffs[: order + 1])

    def __neg__(self) -> "RationalSeries":
        return RationalSeries([-c for c in self._coeffs])

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        if not isinstance(other, RationalSeries):
            return NotImplemented
        k = min(self.order, other.order)
        return RationalSeries(
            [self._coeffs[j] + other._coeffs[j] for j in range(k + 1)]
        )

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "RationalSeries | int | Fraction"):
        if isinstance(other, (int, Fraction)):
            return RationalSeries([c * other for c in self._coeffs])
        if not isinstance(other, RationalSeries):
            return NotImplemented
        k = min(self.order, other.order)
        out = [Fraction(0)] * (k + 1)
        for i, a in enumerate(self._coeffs[: k + 1]):
            if not a:
                continue
            for j in range(k + 1 - i):
                b = other._coeffs[j]
                if b:
                    out[i + j] += a * b
        return RationalSeries(out)

    __rmul__ = __mul__

    def valuation_at_least(self, v: int) -> bool:
        """True when the first v coefficients (x^0 .. x^(v-1)) vanish."""
        return not any(self._coeffs[: min(v, self.order + 1)])


def f_series(n: int, order: int) -> RationalSeries:
    """f_n truncated at `order`: coefficient of x^j is (j|n)/j, j >= 1."""
    _require_squarefree(n)
    if n % 2 == 0:
        raise NotOddSquareFree(f"f_series needs odd n, got {n}")
    return RationalSeries(
        [0] + [Fraction(jacobi(j, n), j) for j in range(1, order + 1)]
    )


def g_series(n: int, order: int) -> RationalSeries:
    """g_n truncated at `order`: odd series with (n|2j+1)/(2j+1) at x^(2j+1)."""
    _require_squarefree(n)
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(1, order + 1, 2):
        coeffs[k] = Fraction(jacobi(n, k), k)
    return RationalSeries(coeffs)


def series_sqrt(series: RationalSeries, order: int | None = None) -> RationalSeries:
    """The square root with constant term 1, by the standard recurrence.

    Requires the input's constant term to be exactly 1
    (`BadConstantTerm` otherwise).
    """
    if order is None:
        order = series.order
    c = series.truncate(order).coeffs
    if c[0] != 1:
        raise BadConstantTerm(
            f"series sqrt needs constant term 1, got {c[0]}"
        )
    b = [Fraction(1)]
    for k in range(1, order + 1):
        acc = c[k] - sum(b[j] * b[k - j] for j in range(1, k))
        b.append(acc / 2)
    return RationalSeries(b)


def series_exp_like(
    f: RationalSeries,
    t: _Coeff,
    mode: str,
    order: int | None = None,
) -> RationalSeries:
    """Hyperbolic series in a root scalar, kept rational.

    With t the squared scalar (t = s*n or t = n; any sign), returns

      mode "cosh":           cosh(sqrt(t)*f/2)          = sum_k t^k f^(2k) / (4^k (2k)!)
      mode "sinh_over_root": sinh(sqrt(t)*f/2)/sqrt(t)  = sum_k t^k f^(2k+1) / (2^(4k+?)...)

    concretely sum_k t^k f^(2k+1) / (2^(2k+1) (2k+1)!).  Since only even
    powers of sqrt(t) survive, every coefficient is rational.  `f` must
    have zero constant term.
    """
    if order is None:
        order = f.order
    f = f.truncate(order)
    if f[0] != 0:
        raise ValueError("series_exp_like needs a zero constant term")
    tf2 = (f * f) * Fraction(t)
    if mode == "cosh":
        term = RationalSeries.one(order)
        ratio = lambda k: Fraction(1, 4 * (2 * k - 1) * (2 * k))
    elif mode == "sinh_over_root":
        term = f * Fraction(1, 2)
        ratio = lambda k: Fraction(1, 4 * (2 * k) * (2 * k + 1))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    acc = term
    k = 0
    while not term.is_zero():
        k += 1
        term = term * tf2 * ratio(k)
        acc = acc + term
    return acc


def gauss_via_series(n: int) -> GaussPair:
    """The Gauss pair by the generating-function route (odd square-free n > 3).

    Expands 2*sqrt(Phi_n)*cosh and 2*sqrt(Phi_n)*sinh/sqrt(s*n) to order
    d = phi(n)/2.  The expansion is the coefficient reversal x^d * A(1/x),
    so the coefficient of x^j is alpha_j (the multiplier of x^(d-j) in A)
    as-is; likewise for B.  All of them must be integers
    (`NonIntegralOracle` otherwise).
    """
    if n <= 3 or n % 2 == 0 or not is_squarefree(n):
        raise NotOddSquareFree(
            f"gauss_via_series needs odd square-free n > 3, got {n}"
        )
    ctx = make_context(n)
    d = ctx.d_gauss
    t = ctx.s * n
    root = series_sqrt(RationalSeries(phi_moebius(n).coeffs, order=d))
    f = f_series(n, d)
    a_series = 2 * (root * series_exp_like(f, t, "cosh"))
    b_series = 2 * (root * series_exp_like(f, t, "sinh_over_root"))
    alpha = _integer_coeffs(a_series, d, "A", n)
    beta = _integer_coeffs(b_series, d, "B", n)
    return GaussPair(n=n, s=ctx.s, alpha=alpha, beta=beta, d=d)


def lucas_via_series(n: int) -> LucasPair:
    """The Lucas pair by the generating-function route (square-free n >= 2).

    Works in y = sqrt(x): every series is expanded to order 2d in y, the
    even positions of sqrt(F_n(y^2))*cosh(sqrt(n)*g_n(y)) give C_n, and
    the odd positions of sqrt(F_n(y^2))*sinh(sqrt(n)*g_n(y))/sqrt(n) give
    D_n (shifted by the explicit factor y).  The complementary positions
    must vanish and all survivors must be integers.
    """
    ctx = make_context(n)
    d = ctx.d_lucas
    order = 2 * d
    fn = f_poly(n)
    spread = [Fraction(0)] * (order + 1)
    for i in range(d + 1):
        spread[2 * i] = Fraction(fn.coefficient(i))
    root_f = series_sqrt(RationalSeries(spread))
    two_g = 2 * g_series(n, order)
    c_y = root_f * series_exp_like(two_g, n, "cosh")
    d_y = root_f * series_exp_like(two_g, n, "sinh_over_root")
    c_asc = _even_ints(c_y, d, odd_must_vanish=True, label="C", n=n)
    d_asc = _odd_ints(d_y, d - 1, even_must_vanish=True, label="D", n=n)
    return LucasPair(
        n=n,
        n_prime=ctx.n_prime,
        s_prime=ctx.s_prime,
        gamma=tuple(reversed(c_asc)),
        delta=tuple(reversed(d_asc)),
        d=d,
    )


def check_ratio_identity(
    n: int, x0: Fraction | int, order: int = 60, tol: float = 1e-12
) -> bool:
    """Numerical spot-check of the exponential ratio identity.

    With L(x) = C_n(x^2) - s'*x*sqrt(n)*D_n(x^2) and its mirror
    L~(x) = L(-x), the identity L~(x)/L(x) = exp(2*s'*sqrt(n)*g_n(x))
    holds for |x| < 1.  Both sides are evaluated in double precision,
    g_n truncated at `order`; returns True when they agree within `tol`
    (relative to the larger magnitude, floored at 1).  x0 = 0 is allowed
    and trivially true.
    """
    x0 = Fraction(x0)
    if abs(x0) >= 1:
        raise ValueError(f"need |x0| < 1, got {x0}")
    pair = algorithm_l(n)
    sp = pair.s_prime
    root_n = sqrt(n)
    x2 = x0 * x0
    c_val = float(pair.poly_c().evaluate(x2))
    d_val = float(pair.poly_d().evaluate(x2))
    wing = sp * float(x0) * root_n * d_val
    denom = c_val - wing
    if denom == 0.0:
        return False
    lhs = (c_val + wing) / denom
    g_val = g_series(n, order).coeffs
    g_at = float(sum(c * x0**j for j, c in enumerate(g_val) if c))
    rhs = exp(2 * sp * root_n * g_at)
    scale = max(1.0, abs(lhs), abs(rhs))
    return abs(lhs - rhs) <= tol * scale


def _integer_coeffs(series, d, label, n):
    out = []
    for j in range(d + 1):
        c = series[j]
        if c.denominator != 1:
            raise NonIntegralOracle(
                f"{label}_{n}: coefficient of x^{j} is non-integer {c}"
            )
        out.append(int(c))
    return tuple(out)


def _even_ints(series, top, odd_must_vanish, label, n):
    if odd_must_vanish:
        for j in range(1, series.order + 1, 2):
            if series[j]:
                raise NonIntegralOracle(
                    f"{label}_{n}: stray odd power y^{j} = {series[j]}"
                )
    out = []
    for i in range(top + 1):
        c = series[2 * i]
        if c.denominator != 1:
            raise NonIntegralOracle(
                f"{label}_{n}: coefficient of x^{i} is non-integer {c}"
            )
        out.append(int(c))
    return out


def _odd_ints(series, top, even_must_vanish, label, n):
    if even_must_vanish:
        for j in range(0, series.order + 1, 2):
            if series[j]:
                raise NonIntegralOracle(
                    f"{label}_{n}: stray even power y^{j} = {series[j]}"
                )
    out = []
    for i in range(top + 1):
        c = series[2 * i + 1]
        if c.denominator != 1:
            raise NonIntegralOracle(
                f"{label}_{n}: coefficient of x^{i} is non-integer {c}"
            )
        out.append(int(c))
    return out


__all__ = [
    "RationalSeries",
    "check_ratio_identity",
    "f_series",
    "g_series",
    "gauss_via_series",
    "lucas_via_series",
    "series_exp_like",
    "series_sqrt",
]
