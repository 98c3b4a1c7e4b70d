"""
Stalk-level bookkeeping for the support morphism from the Hilbert scheme
to the symmetric product: which strata support the even direct images,
the stalk dimension table over a stratum, and the two dimension identities
(local, over a basic neighborhood; global, regrouping the stratum sum)
that express the degeneration of the associated spectral sequence.

Everything here is a dimension count over partitions; no sheaf data
structure exists, by design.
"""

from .goettsche import (hilbert_poincare_from_strata, punctual_poincare,
                        stratum_poincare)
from .partitions import partitions_of, splittings_with_drop
from .series import CoeffPoly


class StalkTable:
    """Stalk dimensions of the even direct images over one stratum."""

    __slots__ = ("nu", "rows")

    def __init__(self, nu, rows):
        rows = tuple(int(r) for r in rows)
        if len(rows) != nu.n:
            raise ValueError("need one row per half-degree 0..n-1")
        if rows and rows[0] != 1:
            raise ValueError("degree-0 stalk must be 1 (connected fibers)")
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("StalkTable is immutable")

    def poincare(self):
        """Sum of rows[h] t^(2h), the stalk Poincare polynomial."""
        out = CoeffPoly.zero()
        for h, r in enumerate(self.rows):
            if r:
                out = out + CoeffPoly.monomial((2 * h,), r)
        return out

    def __repr__(self):
        return "StalkTable(%r, rows=%r)" % (self.nu, self.rows)


def support_strata(n, h):
    """
    The strata supporting the direct image in degree 2h: all partitions of
    n with length at most n - h.  Empty when h >= n.  Odd degrees have no
    table at all: the odd direct images vanish.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if h < 0:
        raise ValueError("h must be non-negative")
    return [a for a in partitions_of(n) if a.length <= n - h]


def stalk_table(nu):
    """
    The stalk dimensions over the stratum of nu: in degree 2h, the number
    of partition tuples over nu whose merged partition has drop h.
    """
    if nu.n < 1:
        raise ValueError("partition must be non-empty")
    rows = [len(splittings_with_drop(h, nu)) for h in range(nu.n)]
    return StalkTable(nu, rows)


def local_fiber_check(nu):
    """
    The local dimension identity over a basic neighborhood of a point of
    the stratum of nu: the stalk Poincare polynomial must equal the
    product of the punctual polynomials of the parts.  Both sides are
    computed independently (tuple enumeration vs polynomial product).
    """
    lhs = stalk_table(nu).poincare()
    rhs = CoeffPoly.one()
    for part in nu:
        rhs = rhs * punctual_poincare(part)
    return lhs == rhs


def global_degeneration_check(model, n):
    """
    The global regrouping identity: the stratum-decomposition Poincare
    polynomial of the n-th Hilbert scheme equals the sum over h of
    t^(2h) times the total stratum polynomial in length n - h.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    lhs = hilbert_poincare_from_strata(model, n)
    rhs = CoeffPoly.zero()
    for h in range(n + 1):
        level = CoeffPoly.zero()
        for a in partitions_of(n):
            if a.length == n - h:
                level = level + stratum_poincare(model, a)
        rhs = rhs + CoeffPoly.monomial((2 * h,)) * level
    return lhs == rhs
