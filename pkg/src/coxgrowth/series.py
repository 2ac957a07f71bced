"""Exact growth series: rational normal form, coefficients, convergence.

The growth series of the system is reconstructed from the finite standard
subsystems through the alternating sum over spherical subsets J of
(-1)^|J| / W_J(t), which equals the reciprocal growth series evaluated at
1/t whenever the whole group is infinite.  Finite groups short-circuit to
the exponent-product polynomial.  Everything downstream (coefficients,
evaluation, root isolation) is exact integer/rational arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from . import polys
from .coxmatrix import (
    CoxeterMatrix,
    classify_subset,
    diagram_properties,
    poincare_polynomial,
    spherical_subsets,
)
from .errors import (
    ClassificationError,
    NegativeCoefficientError,
    RangeEmptyError,
    SingularAtZeroError,
)
from .stats import SphereStats, descent_ratio_floor


@dataclass(frozen=True)
class PoleAt:
    """Returned by evaluation when the point is a pole."""

    point: Fraction


class RationalFunction:
    """Quotient of integer polynomials, reduced, with denominator(0) > 0.

    Coefficients ascend; gcd(num, den) = 1 and both are primitive.  The
    normalization makes Taylor expansion at 0 well defined and the printed
    form unique.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num = tuple(Fraction(a) for a in polys.trim(num))
        den = tuple(Fraction(a) for a in polys.trim(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = (Fraction(1),)  # canonical zero
        else:
            g = polys.gcd_poly(num, den)
            if polys.degree(g) > 0:
                num, _ = polys.divmod_exact(num, g)
                den, _ = polys.divmod_exact(den, g)
        num = polys.clear_denominators(num)
        den = polys.clear_denominators(den)
        cn = polys.content(num)
        cd = polys.content(den)
        if cn and cd:
            from math import gcd as _gcd

            g = _gcd(cn, cd)
            num = tuple(a // g for a in num)
            den = tuple(a // g for a in den)
        if den[0] == 0:
            raise SingularAtZeroError("denominator vanishes at 0")
        if den[0] < 0:
            num = polys.neg(num)
            den = polys.neg(den)
        object.__setattr__(self, "num", tuple(num))
        object.__setattr__(self, "den", tuple(den))

    def __setattr__(self, *a):  # immutable by construction
        raise AttributeError("RationalFunction is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction(num={list(self.num)}, den={list(self.den)})"

    # -- arithmetic (used to assemble alternating sums) -------------------

    @staticmethod
    def _coerce(other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction((other,))

    def __add__(self, other):
        o = self._coerce(other)
        return RationalFunction(
            polys.add(polys.mul(self.num, o.den), polys.mul(o.num, self.den)),
            polys.mul(self.den, o.den),
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return RationalFunction(
            polys.sub(polys.mul(self.num, o.den), polys.mul(o.num, self.den)),
            polys.mul(self.den, o.den),
        )

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFunction(
            polys.mul(self.num, o.num), polys.mul(self.den, o.den)
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return RationalFunction(
            polys.mul(self.num, o.den), polys.mul(self.den, o.num)
        )

    def __rtruediv__(self, other):
        return self._coerce(other).__truediv__(self)

    # -- analysis ---------------------------------------------------------

    def evaluate(self, point) -> Fraction | PoleAt:
        t0 = Fraction(point)
        bottom = polys.eval_at(self.den, t0)
        if bottom == 0:
            return PoleAt(t0)
        return polys.eval_at(self.num, t0) / bottom

    def taylor(self, count: int) -> list:
        """First count+1 series coefficients at 0, exact (ints when integral)."""
        b0 = self.den[0]
        out = []
        for k in range(count + 1):
            acc = Fraction(self.num[k] if k < len(self.num) else 0)
            for j in range(1, min(k, len(self.den) - 1) + 1):
                acc -= self.den[j] * out[k - j]
            acc /= b0
            out.append(acc)
        return [int(a) if a.denominator == 1 else a for a in out]


def rational_growth_series(matrix: CoxeterMatrix) -> RationalFunction:
    """Length generating series of the whole system, as a reduced fraction.

    Finite systems return their exponent-product polynomial over 1.  For
    infinite systems the alternating sum G(t) over spherical subsets is
    formed exactly and the series is 1 / G(1/t), realized by reversing the
    coefficients of the reduced numerator and denominator (their degrees
    match because G tends to 1 at infinity).
    """
    full = classify_subset(matrix, tuple(matrix.generators()))
    if full.finite:
        return RationalFunction(poincare_polynomial(full))
    acc = RationalFunction((1,), (1,))  # the empty subset's term
    for subset, label in spherical_subsets(matrix):
        if not subset:
            continue
        term = RationalFunction((1,), poincare_polynomial(label))
        acc = acc + term if len(subset) % 2 == 0 else acc - term
    p, q = acc.num, acc.den
    if polys.degree(p) != polys.degree(q):
        raise ClassificationError(
            "alternating sum should tend to 1 at infinity; degrees differ"
        )
    series = RationalFunction(tuple(reversed(q)), tuple(reversed(p)))
    if series.taylor(0)[0] != 1:
        raise ClassificationError("reconstructed series does not start at 1")
    return series


def taylor_coefficients(f: RationalFunction, count: int) -> list:
    return f.taylor(count)


def evaluate_at_rational(f: RationalFunction, point) -> Fraction | PoleAt:
    return f.evaluate(point)


@dataclass(frozen=True)
class ConvergenceVerdict:
    """Whether the series converges at an exact point in (0, 1).

    finite=True carries the exact value; finite=False carries an interval
    around a denominator root at or below the point.  With nonnegative
    coefficients the smallest positive pole is the radius of convergence,
    so a pole at rho <= point forces divergence at the point itself.
    """

    point: Fraction
    finite: bool
    value: Fraction | None
    pole_interval: tuple[Fraction, Fraction] | None
    justification: str
    ratio_window: "QuotientReport | None" = None

    @property
    def verdict(self) -> str:
        return "finite" if self.finite else "infinite"

    def to_dict(self) -> dict:
        out = {"point": str(self.point), "verdict": self.verdict,
               "justification": self.justification}
        if self.finite:
            out["value"] = str(self.value)
        else:
            out["pole_interval"] = [str(self.pole_interval[0]), str(self.pole_interval[1])]
        if self.ratio_window is not None:
            out["ratio_window"] = self.ratio_window.to_dict()
        return out


_WIDTH = Fraction(1, 2**64)


def finiteness_verdict(
    f: RationalFunction, point, sample_depth: int = 64
) -> ConvergenceVerdict:
    """Exact convergence decision for a series with nonnegative coefficients.

    Nonnegativity is asserted on the first sample_depth coefficients.  The
    decision itself is exact: the denominator either has a real root in
    (0, point] or it does not, settled by sign-variation counts of a Sturm
    chain on the square-free part; the reported isolating interval is then
    narrowed below 2**-64 by bisection (the tolerance affects only the
    report, never the verdict).
    """
    t0 = Fraction(point)
    if not 0 < t0 < 1:
        raise ValueError(f"evaluation point must lie in (0, 1), got {t0}")
    for k, a in enumerate(f.taylor(sample_depth)):
        if a < 0:
            raise NegativeCoefficientError(f"coefficient {k} is negative: {a}")
    g = polys.square_free_part(f.den)
    chain = polys.sturm_chain(g)
    justification = (
        "nonnegative coefficients: the smallest positive denominator root "
        "is the radius of convergence, and divergence there propagates to "
        "every point at or beyond it"
    )
    if polys.eval_at(g, t0) == 0:
        return ConvergenceVerdict(t0, False, None, (t0, t0), justification)
    count = polys.count_roots_halfopen(chain, Fraction(0), t0)
    if count == 0:
        value = f.evaluate(t0)
        assert isinstance(value, Fraction)
        return ConvergenceVerdict(t0, True, value, None, justification)
    lo, hi = Fraction(0), t0
    while hi - lo > _WIDTH:
        mid = (lo + hi) / 2
        if polys.count_roots_halfopen(chain, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return ConvergenceVerdict(t0, False, None, (lo, hi), justification)


@dataclass(frozen=True)
class QuotientReport:
    """Consecutive-term ratios c_{i+1}*t0/c_i with an optional bound check."""

    point: Fraction
    i_min: int
    i_max: int
    ratios: tuple[tuple[int, Fraction], ...]
    mode: str | None  # "convergence", "divergence", or None
    bound: Fraction | None
    satisfied: bool | None

    @property
    def window(self) -> tuple[Fraction, Fraction]:
        values = [r for _, r in self.ratios]
        return (min(values), max(values))

    def to_dict(self) -> dict:
        lo, hi = self.window if self.ratios else (None, None)
        out = {
            "point": str(self.point),
            "range": [self.i_min, self.i_max],
            "mode": self.mode,
            "ratios": [[i, str(r)] for i, r in self.ratios],
            "window": [str(lo), str(hi)] if self.ratios else None,
        }
        if self.bound is not None:
            out["bound"] = str(self.bound)
        if self.satisfied is not None:
            out["satisfied"] = self.satisfied
        return out


def quotient_criterion(
    stats: SphereStats, point, i_min: int | None = None, mode: str | None = "auto"
) -> QuotientReport:
    """Ratio test data from enumerated sphere sizes.

    In convergence mode (uniform label m >= 4) every ratio from i_min on is
    compared against rho = 1 - (n-2)*k/(n-1)^m with k the exact descent
    ratio floor; in divergence mode (uniform label 3, rank >= 3) against 1.
    Default i_min: 2m for convergence, m+1 for divergence.  mode=None skips
    the bound and just reports the ratios.
    """
    t0 = Fraction(point)
    n, m = stats.n, stats.m
    if mode == "auto":
        if m is not None and m >= 4 and n >= 3:
            mode = "convergence"
        elif m == 3 and n >= 3:
            mode = "divergence"
        else:
            mode = None
    if i_min is None:
        if mode == "convergence":
            i_min = 2 * m
        elif mode == "divergence":
            i_min = m + 1
        else:
            raise RangeEmptyError("i_min is required when no mode applies")
    if stats.depth < i_min + 2:
        raise RangeEmptyError(
            f"need depth >= {i_min + 2} for ratios from {i_min}, have {stats.depth}"
        )
    ratios = []
    for i in range(i_min, stats.depth):
        if stats.c[i] == 0 or stats.c[i + 1] == 0:
            break
        ratios.append((i, Fraction(stats.c[i + 1], stats.c[i]) * t0))
    if not ratios:
        raise RangeEmptyError(f"spheres are empty from index {i_min}")
    bound = None
    satisfied = None
    if mode == "convergence":
        k = descent_ratio_floor(n, m)
        bound = 1 - Fraction(n - 2, (n - 1) ** m) * k
        satisfied = all(r <= bound for _, r in ratios)
    elif mode == "divergence":
        bound = Fraction(1)
        satisfied = all(r >= bound for _, r in ratios)
    return QuotientReport(
        t0, i_min, ratios[-1][0], tuple(ratios), mode, bound, satisfied
    )


def attach_ratio_window(
    verdict: ConvergenceVerdict, window: QuotientReport
) -> ConvergenceVerdict:
    return replace(verdict, ratio_window=window)
