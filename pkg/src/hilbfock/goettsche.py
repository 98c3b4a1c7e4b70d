"""
Closed-form invariants of the Hilbert schemes of points of a surface,
of its symmetric products and punctual fibers, each computed by two
independent routes wherever possible.

Routes for the Poincare polynomial of the n-th Hilbert scheme:

  * the product generating function over q (hilbert_poincare_series);
  * the stratum decomposition: a degree-shifted sum over partitions of n
    of the Poincare polynomials of products of symmetric products
    (hilbert_poincare_from_strata).

Their agreement, coefficient by coefficient, is the numerical content of
the decomposition of the direct image under the support morphism.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .partitions import partitions_of
from .series import CoeffPoly, FactorFamily, QTSeries, product_expand
from .surfaces import MissingHodgeData


def goettsche_families(model):
    """
    The five factor families of the product formula: numerator factors
    (1 + t^(2m-1) q^m)^b1 and (1 + t^(2m+1) q^m)^b3, denominator factors
    (1 - t^(2m-2) q^m)^-b0, (1 - t^(2m) q^m)^-b2, (1 - t^(2m+2) q^m)^-b4.
    """
    b = model.betti
    specs = [(-1, b[0], (2, -2)), (1, b[1], (2, -1)), (-1, b[2], (2, 0)),
             (1, b[3], (2, 1)), (-1, b[4], (2, 2))]
    return [FactorFamily(sign, w, (exp,)) for sign, w, exp in specs if w]


@lru_cache(maxsize=None)
def hilbert_poincare_series(model, order):
    """Generating function of Hilbert-scheme Poincare polynomials up to q^order."""
    return product_expand(goettsche_families(model), order, nvars=1)


@lru_cache(maxsize=None)
def sym_poincare(model, m):
    """
    Poincare polynomial of the m-th symmetric product: graded dimension of
    the m-th super-symmetric power of the cohomology of the surface.
    Computed by an exact one-generator-at-a-time expansion (even classes
    repeat freely, odd classes at most once), which enumerates the same
    multisets as the naive count without materializing them.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    table = [CoeffPoly.one()] + [CoeffPoly.zero()] * m
    for d in model.ordinary_degrees:
        td = CoeffPoly.monomial((d,))
        if d % 2 == 0:
            for j in range(1, m + 1):
                table[j] = table[j] + td * table[j - 1]
        else:
            for j in range(m, 0, -1):
                table[j] = table[j] + td * table[j - 1]
    return table[m]


def sym_poincare_product(model, m):
    """
    Independent route to sym_poincare: coefficient of q^m in the product
    over degrees d of (1 + t^d q)^(b_d) for odd d and (1 - t^d q)^(-b_d)
    for even d, expanded through the series layer.
    """
    out = QTSeries.one(m)
    for d in range(5):
        w = model.betti[d]
        if not w:
            continue
        fam = FactorFamily(1 if d % 2 else -1, w, ((0, d),))
        out = out * fam.factor_series(1, m)
    return out.coeff(m)


def stratum_poincare(model, a):
    """
    Poincare polynomial of the product of symmetric products attached to a
    partition in multiplicity notation: one factor per multiplicity a_i
    (zero multiplicities contribute a point factor).
    """
    out = CoeffPoly.one()
    for ai in a.multiplicities:
        if ai:
            out = out * sym_poincare(model, ai)
    return out


@lru_cache(maxsize=None)
def hilbert_poincare_from_strata(model, n):
    """
    Poincare polynomial of the n-th Hilbert scheme as the stratum sum
    sum_a t^(2 drop(a)) * P_t(stratum space of a) over partitions of n.
    """
    out = CoeffPoly.zero()
    for a in partitions_of(n):
        out = out + CoeffPoly.monomial((2 * a.drop,)) * stratum_poincare(model, a)
    return out


def punctual_poincare(n):
    """
    Poincare polynomial of the punctual fiber: sum over partitions of n of
    t^(2 drop).  Top coefficient sits at t^(2(n-1)) and equals 1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = CoeffPoly.zero()
    for p in partitions_of(n):
        out = out + CoeffPoly.monomial((2 * p.drop,))
    return out


def general_binomial(a, k):
    """Binomial coefficient with arbitrary integer top, exact integer."""
    num = 1
    for i in range(k):
        num *= a - i
    val = Fraction(num, factorial(k))
    assert val.denominator == 1
    return int(val)


def hilbert_euler(euler, n):
    """
    Euler number of the n-th Hilbert scheme: coefficient of q^n in
    prod_m (1 - q^m)^(-e) where e is the Euler number of the surface.
    Negative e is allowed (the factor becomes a positive power).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    co = [0] * (n + 1)
    co[0] = 1
    for m in range(1, n + 1):
        new = [0] * (n + 1)
        for i, c in enumerate(co):
            if not c:
                continue
            for j in range(0, (n - i) // m + 1):
                new[i + m * j] += c * general_binomial(euler + j - 1, j)
        co = new
    return co[n]


def orbifold_euler(euler, n):
    """
    Orbifold Euler number of the n-fold product modulo permutations:
    sum over partitions of n of the product over multiplicities a_i of
    C(e + a_i - 1, a_i), the Euler number of the a_i-th symmetric product.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    total = 0
    for a in partitions_of(n):
        term = 1
        for ai in a.multiplicities:
            if ai:
                term *= general_binomial(euler + ai - 1, ai)
        total += term
    return total


@lru_cache(maxsize=None)
def sym_total_dim(model, m):
    """
    Total cohomology dimension of the m-th symmetric product, by the closed
    multiset count: choose j of the odd classes (no repeats) and a multiset
    of m-j even classes.
    """
    b_even = model.betti[0] + model.betti[2] + model.betti[4]
    b_odd = model.betti[1] + model.betti[3]
    total = 0
    for j in range(min(b_odd, m) + 1):
        total += comb(b_odd, j) * comb(b_even + (m - j) - 1, m - j)
    return total


def equivariant_k_dim(model, n):
    """
    Dimension of the rational equivariant K-theory of the n-fold product
    under the permutation action: sum over partitions of n of the product
    of total cohomology dimensions of the attached symmetric products.
    Equals the total Betti number of the n-th Hilbert scheme.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    total = 0
    for a in partitions_of(n):
        term = 1
        for ai in a.multiplicities:
            if ai:
                term *= sym_total_dim(model, ai)
        total += term
    return total


@lru_cache(maxsize=None)
def hodge_sym(model, m):
    """
    Hodge polynomial of the m-th symmetric product: the bigraded
    super-symmetric power, classes of odd total degree used at most once.
    """
    if model.hodge is None:
        raise MissingHodgeData("model %r carries no Hodge data" % model.name)
    table = [CoeffPoly.one(2)] + [CoeffPoly.zero(2)] * m
    for (p, q) in model.class_bidegrees:
        xy = CoeffPoly.monomial((p, q))
        if (p + q) % 2 == 0:
            for j in range(1, m + 1):
                table[j] = table[j] + xy * table[j - 1]
        else:
            for j in range(m, 0, -1):
                table[j] = table[j] + xy * table[j - 1]
    return table[m]


def hilbert_hodge(model, n):
    """
    Hodge polynomial sum_{p,q} h^{p,q} x^p y^q of the n-th Hilbert scheme:
    stratum sum of bigraded symmetric powers, each stratum shifted by
    (xy)^drop (the weight-twist mismatch between the two sides).
    """
    if model.hodge is None:
        raise MissingHodgeData("model %r carries no Hodge data" % model.name)
    if n < 0:
        raise ValueError("n must be non-negative")
    out = CoeffPoly.zero(2)
    for a in partitions_of(n):
        term = CoeffPoly.monomial((a.drop, a.drop))
        for ai in a.multiplicities:
            if ai:
                term = term * hodge_sym(model, ai)
        out = out + term
    return out
