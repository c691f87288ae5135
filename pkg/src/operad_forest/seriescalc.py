"""Truncated power-series calculus over exact rationals for the dimension
identities.

All series have zero constant term and a fixed truncation order; nothing
beyond the order is ever read.  Two generating-series conventions coexist:
exponential (coefficient = dim/n!, for families carrying symmetric-group
actions) and ordinary (coefficient = dim, for the planar families).  A
series may carry its convention as a tag and composing differently tagged
series is an error, because silently mixing the two is the likeliest bug
in this corner.

Reversion (compositional inverse) is computed by solving g(h) = t order by
order; the test suite re-derives the same coefficients through Lagrange
inversion as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import limits
from .treebases import catalan, double_factorial

EGS = "EGS"
OGS = "OGS"


class SeriesKindError(ValueError):
    """Exponential and ordinary generating series were mixed."""


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


class PowerSeries:
    """A truncated power series c_1 t + ... + c_N t^N over the rationals."""

    __slots__ = ("order", "coeffs", "kind")

    def __init__(self, order, coeffs=(), kind=None):
        if not isinstance(order, int) or order < 1:
            raise ValueError("series order must be >= 1, got %r" % (order,))
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > order:
            raise ValueError("more coefficients than the truncation order")
        cs.extend(Fraction(0) for _ in range(order - len(cs)))
        if kind not in (None, EGS, OGS):
            raise ValueError("kind must be %r, %r or None" % (EGS, OGS))
        self.order = order
        self.coeffs = tuple(cs)  # coeffs[i] multiplies t^(i+1)
        self.kind = kind

    @classmethod
    def zero(cls, order, kind=None):
        return cls(order, (), kind)

    @classmethod
    def identity(cls, order, kind=None):
        """The series t."""
        return cls(order, (1,), kind)

    def coefficient(self, n: int) -> Fraction:
        """The coefficient of t^n, 1 <= n <= order."""
        if not 1 <= n <= self.order:
            raise ValueError("coefficient index %d out of range 1..%d" % (n, self.order))
        return self.coeffs[n - 1]

    def _merge_kind(self, other):
        if self.kind is not None and other.kind is not None and self.kind != other.kind:
            raise SeriesKindError("cannot mix %s and %s series" % (self.kind, other.kind))
        return self.kind if self.kind is not None else other.kind

    def _check_order(self, other):
        if self.order != other.order:
            raise ValueError("series orders differ: %d vs %d" % (self.order, other.order))

    def __add__(self, other):
        self._check_order(other)
        kind = self._merge_kind(other)
        return PowerSeries(self.order,
                           [a + b for a, b in zip(self.coeffs, other.coeffs)], kind)

    def __sub__(self, other):
        self._check_order(other)
        kind = self._merge_kind(other)
        return PowerSeries(self.order,
                           [a - b for a, b in zip(self.coeffs, other.coeffs)], kind)

    def __neg__(self):
        return PowerSeries(self.order, [-a for a in self.coeffs], self.kind)

    def scale(self, scalar):
        scalar = Fraction(scalar)
        return PowerSeries(self.order, [scalar * a for a in self.coeffs], self.kind)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return self.scale(other)
        self._check_order(other)
        kind = self._merge_kind(other)
        n = self.order
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                k = i + j + 1  # t^(i+1) * t^(j+1)
                if k >= n:
                    break
                out[k] += a * b
        return PowerSeries(n, out, kind)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, PowerSeries) and self.order == other.order
                and self.coeffs == other.coeffs)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "t" if i == 0 else "t^%d" % (i + 1)
            if c == 1:
                parts.append("+" + mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(("+" if c > 0 else "-") + "%s*%s" % (abs(c), mono))
        if not parts:
            return "0"
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out

    def __repr__(self):
        return "PowerSeries(%d, %r, kind=%r)" % (self.order, [str(c) for c in self.coeffs], self.kind)


def ps_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """(f o g)(t) = f(g(t)), truncated; both series have zero constant term
    by construction, and orders must agree."""
    f._check_order(g)
    kind = f._merge_kind(g)
    n = f.order

    def times_g(acc, extra):
        # acc * g + extra, over dense lists indexed by power (constant kept)
        out = [Fraction(0)] * (n + 1)
        out[0] = extra
        for i, a in enumerate(acc):
            if a == 0:
                continue
            for j, b in enumerate(g.coeffs):
                k = i + j + 1
                if k > n:
                    break
                out[k] += a * b
        return out

    # Horner: f(g) = g*(f_1 + g*(f_2 + g*(...)))
    acc = [Fraction(0)] * (n + 1)
    for c in reversed(f.coeffs):
        acc = times_g(acc, c)
    acc = times_g(acc, Fraction(0))
    return PowerSeries(n, acc[1:], kind)


def ps_reverse(g: PowerSeries) -> PowerSeries:
    """Compositional inverse: the series h with g(h(t)) = t up to the
    truncation order.  Needs an invertible linear coefficient."""
    if g.coeffs[0] == 0:
        raise ValueError("reversion needs a nonzero linear coefficient")
    n = g.order
    c1 = g.coeffs[0]
    h = [Fraction(0)] * n
    h[0] = 1 / c1
    for k in range(2, n + 1):
        # with h_k still zero, the t^k coefficient of g(h) misses only c1*h_k
        partial = ps_compose(g, PowerSeries(n, h, None))
        h[k - 1] = -partial.coefficient(k) / c1
    return PowerSeries(n, h, g.kind)


# ---------------------------------------------------------------------------
# the dimension series of the players

def commag_series(order: int) -> PowerSeries:
    """Exponential series of the free commutative magma: (2n-3)!!/n!."""
    return PowerSeries(order, [Fraction(double_factorial(2 * n - 3), _factorial(n))
                               for n in range(1, order + 1)], EGS)


def prelie_series(order: int) -> PowerSeries:
    """Exponential series of labelled rooted trees: n^(n-1)/n!."""
    return PowerSeries(order, [Fraction(n ** (n - 1), _factorial(n))
                               for n in range(1, order + 1)], EGS)


def dend_series_egs(order: int) -> PowerSeries:
    """Exponential series of the two-operation family: dimension in arity n
    is n! * Catalan(n), so the exponential coefficient is Catalan(n)."""
    return PowerSeries(order, [catalan(n) for n in range(1, order + 1)], EGS)


def mag_series_ogs(order: int) -> PowerSeries:
    """Ordinary series of binary-tree shapes: Catalan(n-1)."""
    return PowerSeries(order, [catalan(n - 1) for n in range(1, order + 1)], OGS)


def assoc_series_ogs(order: int) -> PowerSeries:
    """Ordinary series of the associative family: every dimension 1."""
    return PowerSeries(order, [1] * order, OGS)


def catalan_series_ogs(order: int) -> PowerSeries:
    """Ordinary series with coefficients Catalan(n): t + 2t^2 + 5t^3 + ..."""
    return PowerSeries(order, [catalan(n) for n in range(1, order + 1)], OGS)


@dataclass(frozen=True)
class DimSeries:
    """A truncated sequence of per-arity dimensions with its generating-
    series convention.  ``dims`` holds ints when every dimension came out
    integral; a conjectural identity failing would leave Fractions behind,
    flagged by ``integral``."""

    kind: str
    dims: tuple

    @property
    def integral(self) -> bool:
        return all(isinstance(d, int) for d in self.dims)

    @property
    def nonnegative(self) -> bool:
        return all(d >= 0 for d in self.dims)

    @classmethod
    def from_series(cls, ps: PowerSeries) -> "DimSeries":
        if ps.kind not in (EGS, OGS):
            raise SeriesKindError("series has no generating-series convention tag")
        dims = []
        for n in range(1, ps.order + 1):
            c = ps.coefficient(n)
            if ps.kind == EGS:
                c = c * _factorial(n)
            dims.append(int(c) if c.denominator == 1 else c)
        return cls(kind=ps.kind, dims=tuple(dims))

    def to_series(self) -> PowerSeries:
        if self.kind == EGS:
            coeffs = [Fraction(d) / _factorial(n)
                      for n, d in enumerate(self.dims, start=1)]
        else:
            coeffs = [Fraction(d) for d in self.dims]
        return PowerSeries(len(self.dims), coeffs, self.kind)

    def to_json_obj(self):
        return {"kind": self.kind,
                "dims": [d if isinstance(d, int) else str(d) for d in self.dims]}


def x_dims(order: int) -> DimSeries:
    """Dimensions of the conjectural left factor splitting the rooted-tree
    family over the free commutative magma: the composition of the
    rooted-tree series with the reverted commutative-magma series."""
    limits.check_series_order(order)
    ps = ps_compose(prelie_series(order), ps_reverse(commag_series(order)))
    return DimSeries.from_series(ps)


def y_dims(order: int) -> DimSeries:
    """Same construction for the two-operation family."""
    limits.check_series_order(order)
    ps = ps_compose(dend_series_egs(order), ps_reverse(commag_series(order)))
    return DimSeries.from_series(ps)


def z_dims(order: int) -> DimSeries:
    """Dimensions of the conjectural second-level factor, read off from
    splitting the x-series itself over the commutative-magma series."""
    limits.check_series_order(order)
    x = x_dims(order).to_series()
    ps = ps_compose(ps_reverse(commag_series(order)), x)
    return DimSeries.from_series(ps)


def dup_split_check(order: int, perturb_at: int | None = None) -> bool:
    """Check, to the given order, that composing the associative series
    with the binary-shape series gives the Catalan series (the planar
    splitting identity).  ``perturb_at`` damages one input coefficient to
    exercise the negative control."""
    limits.check_series_order(order, bound=limits.DUP_SERIES_MAX_ORDER)
    mag = mag_series_ogs(order)
    if perturb_at is not None:
        coeffs = list(mag.coeffs)
        coeffs[perturb_at - 1] += 1
        mag = PowerSeries(order, coeffs, OGS)
    lhs = ps_compose(assoc_series_ogs(order), mag)
    return lhs == catalan_series_ogs(order)


def y_closed_form_report(order: int = 5) -> dict:
    """Compare the reversion-computed dimensions of the two-operation
    splitting against the coefficients of 1/(1 - 3t - t^3), under both
    series conventions and both index alignments, and report the outcome
    without asserting any of them: the stated closed form does not match
    the listed dimensions under any obvious normalization, so this is kept
    as a finding, not a check."""
    limits.check_series_order(order)
    computed = y_dims(order).dims
    # a_k = [t^k] 1/(1-3t-t^3):  a_k = 3 a_{k-1} + a_{k-3}
    a = [1]
    for k in range(1, order + 1):
        a.append(3 * a[k - 1] + (a[k - 3] if k >= 3 else 0))
    readings = {
        "ogs_shifted": tuple(a[n - 1] for n in range(1, order + 1)),
        "ogs_direct": tuple(a[n] for n in range(1, order + 1)),
        "egs_shifted": tuple(_factorial(n) * a[n - 1] for n in range(1, order + 1)),
        "egs_direct": tuple(_factorial(n) * a[n] for n in range(1, order + 1)),
    }
    return {
        "computed_dims": list(computed),
        "closed_form_coefficients": a[1:order + 1],
        "readings": {name: {"dims": list(vals), "matches": vals == computed}
                     for name, vals in readings.items()},
        "any_reading_matches": any(vals == computed for vals in readings.values()),
    }
