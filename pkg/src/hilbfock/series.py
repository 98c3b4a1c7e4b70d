"""
Exact truncated power series in q with polynomial coefficients.

Coefficients are sparse polynomials over exact rationals in either one
variable (t) or two (x, y).  Integer values are kept as machine integers
and only promoted to Fraction when a denominator appears, so the common
all-integer computations stay fast.  Series carry a hard truncation
order; combining series of different orders is an error rather than a
silent re-truncation.

Infinite products of the shape prod_{m>=1} (1 +- t^(c*m+d) q^m)^(+-w) are
expanded by binomial / negative-binomial expansion of each factor; factors
with m > N cannot touch coefficients up to q^N, so the product is finite.
"""

from fractions import Fraction
from math import comb


class OrderMismatch(ValueError):
    """Arithmetic between series of different truncation orders."""


class IndexOutOfRange(IndexError):
    """Coefficient index outside 0..order."""


class UnknownVariable(KeyError):
    """Specialization mentions a variable the series does not have."""


_VARS = {1: ("t",), 2: ("x", "y")}


def _num(c):
    """Normalize an exact rational: int stays int, integral Fraction demotes."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    raise TypeError("coefficients must be int or Fraction, got %r" % (c,))


class CoeffPoly:
    """Sparse polynomial: map from exponent tuple to nonzero exact rational."""

    __slots__ = ("nvars", "terms")

    def __init__(self, terms=None, nvars=1):
        if nvars not in (1, 2):
            raise ValueError("nvars must be 1 or 2")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError("bad exponent tuple %r" % (exps,))
            c = _num(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("CoeffPoly is immutable")

    @classmethod
    def _make(cls, terms, nvars):
        # trusted constructor: terms already normalized and zero-free
        self = object.__new__(cls)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", terms)
        return self

    @classmethod
    def zero(cls, nvars=1):
        return cls._make({}, nvars)

    @classmethod
    def constant(cls, c, nvars=1):
        c = _num(c)
        return cls._make({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def one(cls, nvars=1):
        return cls.constant(1, nvars)

    @classmethod
    def monomial(cls, exps, coeff=1, nvars=None):
        exps = tuple(exps)
        return cls({exps: coeff}, nvars if nvars else len(exps))

    def coefficient(self, exps):
        return Fraction(self.terms.get(tuple(exps), 0))

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        return Fraction(self.terms.get((0,) * self.nvars, 0))

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("mixing polynomials in different variables")

    def __add__(self, other):
        if not isinstance(other, CoeffPoly):
            other = CoeffPoly.constant(other, self.nvars)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            elif e in terms:
                del terms[e]
        return CoeffPoly._make(terms, self.nvars)

    def __neg__(self):
        return CoeffPoly._make({e: -c for e, c in self.terms.items()},
                               self.nvars)

    def __sub__(self, other):
        if not isinstance(other, CoeffPoly):
            other = CoeffPoly.constant(other, self.nvars)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CoeffPoly):
            c = _num(other)
            if not c:
                return CoeffPoly.zero(self.nvars)
            return CoeffPoly._make({e: v * c for e, v in self.terms.items()},
                                   self.nvars)
        self._check(other)
        terms = {}
        if len(self.terms) > len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return CoeffPoly._make({e: c for e, c in terms.items() if c},
                               self.nvars)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CoeffPoly.constant(other, self.nvars)
        return (isinstance(other, CoeffPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def specialize(self, assignment):
        """
        Substitute each variable by an exact rational or by the single
        target variable "t".  Returns a polynomial in t (possibly constant).
        """
        names = _VARS[self.nvars]
        for k in assignment:
            if k not in names:
                raise UnknownVariable("no variable %r in %s" % (k, names))
        out = {}
        for exps, c in self.terms.items():
            t_exp = 0
            val = c
            for name, e in zip(names, exps):
                target = assignment.get(name, name if name == "t" else None)
                if target is None:
                    raise UnknownVariable("variable %r left unassigned" % (name,))
                if target == "t":
                    t_exp += e
                elif isinstance(target, str):
                    raise UnknownVariable("unknown target variable %r" % (target,))
                else:
                    val *= _num(target) ** e
            key = (t_exp,)
            out[key] = out.get(key, 0) + val
        return CoeffPoly(out, 1)

    def __str__(self):
        if not self.terms:
            return "0"
        names = _VARS[self.nvars]
        bits = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[exps]
            mono = "".join(
                "" if e == 0 else (name if e == 1 else "%s^%d" % (name, e))
                for name, e in zip(names, exps))
            if not mono:
                bits.append((c < 0, str(abs(c))))
            elif abs(c) == 1:
                bits.append((c < 0, mono))
            else:
                a = abs(c)
                cs = str(a) if isinstance(a, int) else "(%s)" % a
                bits.append((c < 0, "%s%s" % (cs, mono)))
        first_neg, first = bits[0]
        out = ("-" if first_neg else "") + first
        for neg, s in bits[1:]:
            out += (" - " if neg else " + ") + s
        return out

    __repr__ = __str__


class QTSeries:
    """Power series in q truncated at a fixed order, CoeffPoly coefficients."""

    __slots__ = ("order", "nvars", "coeffs")

    def __init__(self, order, coeffs, nvars=1):
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(coeffs) > order + 1:
            raise ValueError("%d coefficients exceed order %d"
                             % (len(coeffs), order))
        cs = []
        for i in range(order + 1):
            c = coeffs[i] if i < len(coeffs) else CoeffPoly.zero(nvars)
            if not isinstance(c, CoeffPoly):
                c = CoeffPoly.constant(c, nvars)
            if c.nvars != nvars:
                raise ValueError("coefficient in wrong variables")
            cs.append(c)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QTSeries is immutable")

    @classmethod
    def zero(cls, order, nvars=1):
        return cls(order, [], nvars)

    @classmethod
    def one(cls, order, nvars=1):
        return cls(order, [CoeffPoly.one(nvars)], nvars)

    def coeff(self, m):
        if not 0 <= m <= self.order:
            raise IndexOutOfRange("q-power %d outside 0..%d" % (m, self.order))
        return self.coeffs[m]

    def _check(self, other):
        if self.order != other.order:
            raise OrderMismatch(
                "orders differ: %d vs %d" % (self.order, other.order))
        if self.nvars != other.nvars:
            raise ValueError("mixing series in different variables")

    def __add__(self, other):
        if not isinstance(other, QTSeries):
            other = QTSeries(self.order, [other], self.nvars)
        self._check(other)
        return QTSeries(self.order,
                        [a + b for a, b in zip(self.coeffs, other.coeffs)],
                        self.nvars)

    def __sub__(self, other):
        if not isinstance(other, QTSeries):
            other = QTSeries(self.order, [other], self.nvars)
        self._check(other)
        return QTSeries(self.order,
                        [a - b for a, b in zip(self.coeffs, other.coeffs)],
                        self.nvars)

    def __mul__(self, other):
        if not isinstance(other, QTSeries):
            return QTSeries(self.order, [c * other for c in self.coeffs],
                            self.nvars)
        self._check(other)
        nvars = self.nvars
        acc = [{} for _ in range(self.order + 1)]
        for i, a in enumerate(self.coeffs):
            if not a.terms:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.terms:
                    continue
                bucket = acc[i + j]
                for e1, c1 in a.terms.items():
                    for e2, c2 in b.terms.items():
                        e = tuple(x + y for x, y in zip(e1, e2))
                        bucket[e] = bucket.get(e, 0) + c1 * c2
        coeffs = [CoeffPoly._make({e: c for e, c in d.items() if c}, nvars)
                  for d in acc]
        return QTSeries(self.order, coeffs, nvars)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, QTSeries) and self.order == other.order
                and self.nvars == other.nvars and self.coeffs == other.coeffs)

    def truncate(self, new_order):
        if new_order > self.order:
            raise OrderMismatch("cannot extend a truncated series")
        return QTSeries(new_order, self.coeffs[:new_order + 1], self.nvars)

    def specialize(self, assignment):
        return QTSeries(self.order,
                        [c.specialize(assignment) for c in self.coeffs], 1)


class FactorFamily:
    """
    One family of factors of an infinite product: for every m >= 1 the
    factor (1 + u_m q^m)^w when sign is +1, or (1 - u_m q^m)^(-w) when sign
    is -1, where u_m is the monomial with exponent c*m + d in each variable
    (affine forms given per variable).
    """

    __slots__ = ("sign", "weight", "exps")

    def __init__(self, sign, weight, exps):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if weight < 0:
            raise ValueError("weight must be non-negative")
        exps = tuple((int(c), int(d)) for c, d in exps)
        if len(exps) not in (1, 2):
            raise ValueError("one affine exponent form per variable")
        for c, d in exps:
            if c < 0 or c + d < 0:
                raise ValueError("exponent %d*m%+d negative for some m >= 1" % (c, d))
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "exps", exps)

    def __setattr__(self, name, value):
        raise AttributeError("FactorFamily is immutable")

    @property
    def nvars(self):
        return len(self.exps)

    def factor_series(self, m, order):
        """The single factor at product index m, expanded to the given order."""
        nvars = self.nvars
        if self.weight == 0 or m > order:
            return QTSeries.one(order, nvars)
        u = tuple(c * m + d for c, d in self.exps)
        coeffs = [CoeffPoly.zero(nvars) for _ in range(order + 1)]
        jmax = order // m
        if self.sign == 1:
            jmax = min(jmax, self.weight)
        for j in range(jmax + 1):
            if self.sign == 1:
                c = comb(self.weight, j)
            else:
                c = comb(self.weight + j - 1, j)
            exps = tuple(e * j for e in u)
            coeffs[j * m] = CoeffPoly.monomial(exps, c, nvars)
        return QTSeries(order, coeffs, nvars)


def product_expand(families, order, nvars=None):
    """
    Expand prod_{m>=1} prod_{f in families} f(m) exactly to the given order.
    The empty product is the constant series 1.
    """
    families = list(families)
    if nvars is None:
        nvars = families[0].nvars if families else 1
    out = QTSeries.one(order, nvars)
    for f in families:
        if f.nvars != nvars:
            raise ValueError("families in different variables")
        for m in range(1, order + 1):
            out = out * f.factor_series(m, order)
    return out
