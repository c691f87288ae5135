"""Exact scalars, sparse formal linear combinations, and exact matrix rank.

Scalars are either arbitrary-precision rationals (``fractions.Fraction``,
re-exported as ``Rational``) or ``LambdaPoly``, polynomials in one
deformation parameter with rational coefficients.  Running the
two-operation tree products over ``LambdaPoly`` means a single exact
computation covers every value of the parameter at once.

No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Rational = Fraction


class MixedBasisError(ValueError):
    """Two linear combinations over different basis kinds were combined."""


class MixedScalarError(ValueError):
    """Rational and polynomial scalars were combined implicitly."""


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("expected a rational scalar, got %r" % (x,))


class LambdaPoly:
    """A polynomial in the deformation parameter, exact rational coefficients.

    Stored densely (index = power), trailing zeros trimmed, so the zero
    polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def param(cls):
        """The parameter itself."""
        return cls((0, 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def eval(self, value) -> Fraction:
        value = _as_fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def _coerce(self, other):
        if isinstance(other, LambdaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LambdaPoly((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LambdaPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return LambdaPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LambdaPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if power == 0:
                parts.append(_fraction_str(c))
            else:
                mon = "lam" if power == 1 else "lam^%d" % power
                if c == 1:
                    parts.append(mon)
                elif c == -1:
                    parts.append("-" + mon)
                else:
                    parts.append("%s*%s" % (_fraction_str(c), mon))
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        return "LambdaPoly(%r)" % (self.coeffs,)


LAMBDA = LambdaPoly.param()
ONE_POLY = LambdaPoly.const(1)


def eval_lambda(p, value) -> Fraction:
    """Evaluate a polynomial scalar at a rational parameter value, exactly."""
    if isinstance(p, LambdaPoly):
        return p.eval(value)
    return _as_fraction(p)


def _fraction_str(c) -> str:
    return str(c)


def _scalar_is_poly(c) -> bool:
    return isinstance(c, LambdaPoly)


def _coerce_coeff(c):
    if isinstance(c, LambdaPoly):
        return c
    return _as_fraction(c)


class LinComb:
    """A finite formal sum of basis elements with exact nonzero coefficients.

    Keys must all be canonical basis elements of one kind; coefficients are
    all ``Rational`` or all ``LambdaPoly``.  Iteration is sorted by the
    canonical text form, so printing and JSON output are deterministic.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for k, v in (terms.items() if hasattr(terms, "items") else terms):
                v = _coerce_coeff(v)
                if v == 0:
                    continue
                prev = data.get(k)
                if prev is None:
                    data[k] = v
                else:
                    s = prev + v
                    if s == 0:
                        del data[k]
                    else:
                        data[k] = s
        self._terms = data

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def single(cls, elem, coeff=1):
        return cls({elem: coeff})

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: str(kv[0]))

    def unsorted_items(self):
        """Raw (element, coefficient) view, insertion-ordered; cheaper than
        ``items`` when the caller does not need the canonical order."""
        return self._terms.items()

    def support(self):
        return sorted(self._terms, key=str)

    def coeff(self, elem):
        return self._terms.get(elem, 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self.support())

    def _check_compatible(self, other):
        if self._terms and other._terms:
            a = next(iter(self._terms))
            b = next(iter(other._terms))
            if type(a) is not type(b):
                raise MixedBasisError("mixed basis kinds: %s vs %s"
                                      % (type(a).__name__, type(b).__name__))
            ca = next(iter(self._terms.values()))
            cb = next(iter(other._terms.values()))
            if _scalar_is_poly(ca) != _scalar_is_poly(cb):
                raise MixedScalarError("mixed scalar kinds (rational vs polynomial)")

    def __add__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            prev = out.get(k)
            if prev is None:
                out[k] = v
            else:
                s = prev + v
                if s == 0:
                    del out[k]
                else:
                    out[k] = s
        res = LinComb.__new__(LinComb)
        res._terms = out
        return res

    def __sub__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        res = LinComb.__new__(LinComb)
        res._terms = {k: -v for k, v in self._terms.items()}
        return res

    def scale(self, scalar):
        scalar = _coerce_coeff(scalar)
        if scalar == 0:
            return LinComb.zero()
        out = {}
        for k, v in self._terms.items():
            s = scalar * v
            if s != 0:
                out[k] = s
        res = LinComb.__new__(LinComb)
        res._terms = out
        return res

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __mul__(self, scalar):
        return self.scale(scalar)

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def map_coeffs(self, fn):
        """Apply ``fn`` to every coefficient, pruning the zeros it creates."""
        out = {}
        for k, v in self._terms.items():
            s = fn(v)
            if s != 0:
                out[k] = s
        res = LinComb.__new__(LinComb)
        res._terms = out
        return res

    def eval_lambda(self, value):
        """Specialize polynomial coefficients at a parameter value."""
        return self.map_coeffs(lambda c: eval_lambda(c, value))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, v in self.items():
            if isinstance(v, LambdaPoly):
                if v == 1:
                    parts.append(("+", str(k)))
                else:
                    parts.append(("+", "(%s)*%s" % (v, k)))
            else:
                if v == 1:
                    parts.append(("+", str(k)))
                elif v == -1:
                    parts.append(("-", str(k)))
                elif v < 0:
                    parts.append(("-", "%s*%s" % (_fraction_str(-v), k)))
                else:
                    parts.append(("+", "%s*%s" % (_fraction_str(v), k)))
        sign, body = parts[0]
        out = body if sign == "+" else "-" + body
        for sign, body in parts[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "LinComb({%s})" % ", ".join("%r: %r" % kv for kv in self.items())

    def to_json_obj(self):
        """The interchange form: a list of {"basis": ..., "coeff": ...}."""
        out = []
        for k, v in self.items():
            if isinstance(v, LambdaPoly):
                out.append({"basis": str(k),
                            "coeff_lambda": [str(c) for c in v.coeffs]})
            else:
                out.append({"basis": str(k), "coeff": "%d/%d" % (v.numerator, v.denominator)})
        return out


def lincomb_add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


def lincomb_scale(scalar, a: LinComb) -> LinComb:
    return a.scale(scalar)


def lincomb_support(a: LinComb):
    return a.support()


# ---------------------------------------------------------------------------
# exact rank

class RationalMatrix:
    """A sparse matrix over the rationals, for exact rank certificates."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows, ncols, entries=None):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.nrows = nrows
        self.ncols = ncols
        data = {}
        if entries:
            for (r, c), v in (entries.items() if hasattr(entries, "items") else entries):
                if not (0 <= r < nrows and 0 <= c < ncols):
                    raise ValueError("entry (%d,%d) out of range" % (r, c))
                v = _as_fraction(v)
                if v != 0:
                    data[(r, c)] = v
        self.entries = data

    @classmethod
    def from_rows(cls, rows, ncols):
        """Build from an iterable of {column: coefficient} dictionaries."""
        rows = list(rows)
        entries = {}
        for r, row in enumerate(rows):
            for c, v in row.items():
                entries[(r, c)] = v
        return cls(len(rows), ncols, entries)

    def transpose(self):
        return RationalMatrix(self.ncols, self.nrows,
                              {(c, r): v for (r, c), v in self.entries.items()})

    def _integer_rows(self):
        """Rows as {col: int} dicts, each scaled to integers and divided by
        its content; row scaling by nonzero rationals preserves rank."""
        rows = [dict() for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        out = []
        for row in rows:
            if not row:
                continue
            mult = 1
            for v in row.values():
                d = v.denominator
                mult = mult // gcd(mult, d) * d
            ints = {c: int(v * mult) for c, v in row.items()}
            g = 0
            for v in ints.values():
                g = gcd(g, v)
            out.append({c: v // g for c, v in ints.items()})
        return out

    def rank(self) -> int:
        """Exact rank by fraction-free elimination on sparse integer rows.

        Pivot rows are taken sparsest first and the pivot column is the one
        hitting the fewest other rows (column incidence counts are kept
        incrementally), which keeps fill-in low on the {-1,0,1,2}-heavy
        matrices produced by the tree maps.  Every update is the
        cross-multiplication  a*row - b*pivot  followed by division by the
        row content, so no fractions ever appear.
        """
        rows = self._integer_rows()
        col_count = {}
        for row in rows:
            for c in row:
                col_count[c] = col_count.get(c, 0) + 1
        rank = 0
        while rows:
            pi = min(range(len(rows)), key=lambda i: (len(rows[i]), min(rows[i])))
            pivot = rows.pop(pi)
            for c in pivot:
                col_count[c] -= 1
            col = min(pivot, key=lambda c: (col_count[c], c))
            a = pivot[col]
            rank += 1
            if not rows:
                break
            nxt = []
            for row in rows:
                b = row.get(col)
                if b is None:
                    nxt.append(row)
                    continue
                for c in row:
                    col_count[c] -= 1
                new = {}
                for c, v in row.items():
                    new[c] = a * v
                for c, v in pivot.items():
                    w = new.get(c, 0) - b * v
                    if w:
                        new[c] = w
                    elif c in new:
                        del new[c]
                if new:
                    g = 0
                    for v in new.values():
                        g = gcd(g, v)
                    if g > 1:
                        new = {c: v // g for c, v in new.items()}
                    for c in new:
                        col_count[c] = col_count.get(c, 0) + 1
                    nxt.append(new)
            rows = nxt
        return rank

    def __eq__(self, other):
        return (isinstance(other, RationalMatrix)
                and (self.nrows, self.ncols) == (other.nrows, other.ncols)
                and self.entries == other.entries)

    def __repr__(self):
        return "RationalMatrix(%d, %d, <%d entries>)" % (self.nrows, self.ncols, len(self.entries))


def rank(matrix: RationalMatrix) -> int:
    return matrix.rank()
