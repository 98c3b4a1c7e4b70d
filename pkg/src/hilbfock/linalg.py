"""
Exact arithmetic over the Gaussian rationals and the small amount of
linear algebra the commuting-matrix model needs: products, powers,
echelon/kernel/inverse, characteristic polynomials, and a bounded root
search for polynomials that split over the Gaussian rationals.

Matrices are tuples of tuples of GaussianRational; everything is pure.
"""

from fractions import Fraction
from functools import lru_cache
from math import isqrt
import re


class SpectrumNotSplit(ArithmeticError):
    """A characteristic polynomial has no full Gaussian-rational root set
    discoverable by the configured root search."""


# Gaussian integers with norm above this bound are not searched for roots.
ROOT_SEARCH_NORM_BOUND = 10 ** 12


def _fr(x):
    # exact rational, kept as int when integral so arithmetic stays fast
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    raise TypeError("exact rational expected, got %r" % (x,))


class GaussianRational:
    """An exact complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _fr(re))
        object.__setattr__(self, "im", _fr(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __add__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        n = other.norm_sq()
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        inv = Fraction(1) / Fraction(n)
        return self * other.conjugate() * GaussianRational(inv)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm_sq(self):
        return self.re * self.re + self.im * self.im

    def is_zero(self):
        return not self.re and not self.im

    def is_gaussian_integer(self):
        return isinstance(self.re, int) and isinstance(self.im, int)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        return (isinstance(other, GaussianRational)
                and self.re == other.re and self.im == other.im)

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return scalar_to_str(self)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    raise TypeError("cannot coerce %r" % (x,))


_RAT = r"\d+(?:/\d+)?"
_IMAG_ONLY = re.compile(r"([+-]?(?:%s)?)i" % _RAT)
_FULL = re.compile(r"([+-]?%s)(?:([+-](?:%s)?)i)?" % (_RAT, _RAT))


def _parse_rat(s):
    if s in ("", "+"):
        return Fraction(1)
    if s == "-":
        return Fraction(-1)
    return Fraction(s)


def scalar_from_str(token):
    """Parse "a/b", "c/di" or "a/b+c/di" (no whitespace inside a token)."""
    m = _IMAG_ONLY.fullmatch(token)
    if m:
        return GaussianRational(0, _parse_rat(m.group(1)))
    m = _FULL.fullmatch(token)
    if m:
        im = _parse_rat(m.group(2)) if m.group(2) is not None else Fraction(0)
        return GaussianRational(Fraction(m.group(1)), im)
    raise ValueError("cannot parse scalar %r" % (token,))


def scalar_to_str(z):
    def rat(f):
        return str(f)

    if not z.im:
        return rat(z.re)
    im = ("" if abs(z.im) == 1 else rat(abs(z.im))) + "i"
    if not z.re:
        return ("-" if z.im < 0 else "") + im
    return rat(z.re) + ("-" if z.im < 0 else "+") + im


# ---------------------------------------------------------------------------
# matrices


def matrix(rows):
    return tuple(tuple(_coerce(v) for v in row) for row in rows)


def identity(n):
    return tuple(tuple(ONE if i == j else ZERO for j in range(n))
                 for i in range(n))


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a, c):
    c = _coerce(c)
    return tuple(tuple(x * c for x in row) for row in a)


def mat_mul(a, b):
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in bt)
        for row in a)


def mat_vec(a, v):
    return tuple(sum((x * y for x, y in zip(row, v)), ZERO) for row in a)


def mat_pow(a, k):
    n = len(a)
    out = identity(n)
    base = a
    while k:
        if k & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        k >>= 1
    return out


def trace(a):
    return sum((a[i][i] for i in range(len(a))), ZERO)


def _echelon(rows):
    # returns (echelon rows, pivot column list); rows is a list of lists
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero()),
                   None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return rows[:r], pivots


def rank(a):
    return len(_echelon(list(a))[0])


def kernel_basis(a):
    """Basis of the right kernel, as a list of column vectors."""
    n_rows = len(a)
    n_cols = len(a[0]) if n_rows else 0
    ech, pivots = _echelon(list(a))
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * n_cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -ech[r][fc]
        basis.append(tuple(v))
    return basis


def invert(a):
    n = len(a)
    aug = [list(a[i]) + [ONE if j == i else ZERO for j in range(n)]
           for i in range(n)]
    ech, pivots = _echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(ech[i][n:]) for i in range(n))


def solve_columns(v_cols, w_cols):
    """
    Solve V * M = W column by column, where V is given by columns and has
    full column rank.  Returns M (len(v_cols) x len(w_cols)).
    """
    n = len(v_cols[0]) if v_cols else 0
    k = len(v_cols)
    aug = [[v_cols[j][i] for j in range(k)] + [w[i] for w in w_cols]
           for i in range(n)]
    ech, pivots = _echelon(aug)
    if pivots[:k] != list(range(k)):
        raise ValueError("columns are not independent")
    for row in ech[k:]:
        if any(not x.is_zero() for x in row):
            raise ValueError("system is inconsistent")
    return tuple(tuple(ech[i][k:]) for i in range(k))


def char_poly(a):
    """
    Characteristic polynomial det(z*I - A), monic, coefficients ascending,
    by the trace recursion (exact division by the step index).
    """
    n = len(a)
    coeffs = [ZERO] * n + [ONE]
    m = identity(n)
    for k in range(1, n + 1):
        am = mat_mul(a, m)
        ck = -(trace(am) * GaussianRational(Fraction(1, k)))
        coeffs[n - k] = ck
        m = mat_add(am, mat_scale(identity(n), ck))
    return coeffs


# ---------------------------------------------------------------------------
# polynomials (coefficients ascending, GaussianRational)


def poly_eval(p, z):
    out = ZERO
    for c in reversed(p):
        out = out * z + c
    return out


def poly_deflate(p, r):
    """Divide p by (z - r) synthetically; returns (quotient, remainder)."""
    d = len(p) - 1
    q = [ZERO] * d
    acc = p[d]
    for i in range(d - 1, -1, -1):
        q[i] = acc
        acc = p[i] + acc * r
    return q, acc


@lru_cache(maxsize=None)
def _int_divisors(n):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return tuple(sorted(out))


def gaussian_integer_divisors(g):
    """
    Divisors of a nonzero Gaussian integer, one per associate class
    (normalized to the closed first quadrant minus the positive imaginary
    axis).  Found by norm divisibility: d | g forces N(d) | N(g).
    """
    n = int(g.norm_sq())
    if n == 0:
        raise ValueError("zero has no divisor list")
    if n > ROOT_SEARCH_NORM_BOUND:
        raise SpectrumNotSplit(
            "norm %d exceeds the root search bound %d"
            % (n, ROOT_SEARCH_NORM_BOUND))
    out = set()
    for dn in _int_divisors(n):
        a = 0
        while a * a <= dn:
            b2 = dn - a * a
            b = isqrt(b2)
            if b * b == b2:
                for cand in (GaussianRational(a, b), GaussianRational(b, a)):
                    cand = _canonical_associate(cand)
                    if cand is None:
                        continue
                    q = g * cand.conjugate()
                    nc = int(cand.norm_sq())
                    if q.re % nc == 0 and q.im % nc == 0:
                        out.add(cand)
            a += 1
    return sorted(out, key=lambda z: (z.norm_sq(), z.re, z.im))


def _canonical_associate(z):
    # the unique unit multiple with re > 0 and im >= 0; None for zero
    if z.is_zero():
        return None
    for u in _UNITS:
        w = z * u
        if w.re > 0 and w.im >= 0:
            return w
    raise AssertionError("unreachable")


_UNITS = (ONE, -ONE, I, -I)


def gaussian_rational_roots(p):
    """
    All roots of the polynomial with multiplicity, provided it splits over
    the Gaussian rationals within the configured search; otherwise raises
    SpectrumNotSplit.  Returns a list of (root, multiplicity).
    """
    # strip leading zeros (highest coefficients)
    while len(p) > 1 and p[-1].is_zero():
        p = p[:-1]
    degree = len(p) - 1
    if degree == 0:
        return []
    roots = []
    work = list(p)
    # factor out roots at zero
    while len(work) > 1 and work[0].is_zero():
        roots.append(ZERO)
        work = work[1:]
    candidates = _root_candidates(work)
    for cand in candidates:
        while len(work) > 1 and poly_eval(work, cand).is_zero():
            work, rem = poly_deflate(work, cand)
            assert rem.is_zero()
            roots.append(cand)
    if len(work) > 1:
        raise SpectrumNotSplit(
            "polynomial of degree %d has %d discoverable roots"
            % (degree, len(roots)))
    mult = {}
    for r in roots:
        mult[r] = mult.get(r, 0) + 1
    return sorted(mult.items(), key=lambda kv: (kv[0].re, kv[0].im))


def _root_candidates(p):
    # clear denominators to a Gaussian-integer polynomial
    lcm = 1
    for c in p:
        for f in (c.re, c.im):
            lcm = lcm * f.denominator // _gcd(lcm, f.denominator)
    ip = [c * GaussianRational(lcm) for c in p]
    lead, const = ip[-1], ip[0]
    if const.is_zero():
        # handled by the caller's zero-root stripping of the full poly; the
        # square-free part may still vanish at 0
        nonzero = next(c for c in ip if not c.is_zero())
        const = nonzero
    cands = set()
    for num in gaussian_integer_divisors(const):
        for den in gaussian_integer_divisors(lead):
            base = num / den
            for u in _UNITS:
                cands.add(base * u)
    return sorted(cands, key=lambda z: (z.norm_sq(), z.re, z.im))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
