"""
Heisenberg/Clifford superalgebra acting on the direct sum of the
cohomologies of all Hilbert schemes of points, realized on its Fock model:
the free supercommutative algebra on creation generators (mode i >= 1,
ordinary class), with annihilation operators acting as super-derivations.

Conventions fixed here:

  * A monomial is stored with factors sorted by (mode, class index); the
    coefficient of a state absorbs the Koszul sign of sorting.  An odd
    class repeated at the same mode kills the monomial.
  * Creation multiplies on the left; the sign for moving the new factor
    into place is (-1) per odd factor it crosses (odd-odd crossings only).
  * Annihilation with compact class beta at mode i contracts each factor
    (i, alpha) to (-1)^(i-1) * i * <alpha, beta>, with the Koszul sign of
    the factors to its left; the normalization (-1)^(i-1) * i is kept
    exactly as in the defining bracket.
  * A factor (mode i, class of degree d) has cohomological degree
    d + 2(i-1); in Hodge mode, bidegree (p + i - 1, q + i - 1).
"""

from fractions import Fraction

from .partitions import multiplicity_factorial
from .series import CoeffPoly, QTSeries
from .surfaces import MissingHodgeData


class UnknownClass(IndexError):
    """Class index outside the model's basis."""


class ModeNonPositive(ValueError):
    """Operator mode must be a positive integer."""


class WrongModel(ValueError):
    """Operation requires the one-class degree-zero model."""


class _Mixed:
    def __repr__(self):
        return "Mixed"


MIXED = _Mixed()


class FockMonomial:
    """A normal-ordered product of creation factors (mode, class index)."""

    __slots__ = ("factors",)

    def __init__(self, factors):
        factors = tuple((int(m), int(c)) for m, c in factors)
        for i, (m, c) in enumerate(factors):
            if m < 1:
                raise ModeNonPositive("mode %d must be positive" % m)
            if c < 0:
                raise UnknownClass("negative class index %d" % c)
            if i and factors[i - 1] > (m, c):
                raise ValueError("factors must be sorted: %r" % (factors,))
        object.__setattr__(self, "factors", factors)

    def __setattr__(self, name, value):
        raise AttributeError("FockMonomial is immutable")

    @property
    def level(self):
        return sum(m for m, _ in self.factors)

    def degree(self, model):
        return sum(model.class_degree(c) + 2 * (m - 1) for m, c in self.factors)

    def bidegree(self, model):
        bidegs = model.class_bidegrees
        p = sum(bidegs[c][0] + m - 1 for m, c in self.factors)
        q = sum(bidegs[c][1] + m - 1 for m, c in self.factors)
        return (p, q)

    def __eq__(self, other):
        return isinstance(other, FockMonomial) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        if not self.factors:
            return "1"
        return "".join("a%d[%d]" % (m, c) for m, c in self.factors)


VACUUM_MONOMIAL = FockMonomial(())


class FockState:
    """Finite rational linear combination of Fock monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            if not isinstance(mono, FockMonomial):
                mono = FockMonomial(mono)
            c = c if isinstance(c, Fraction) else Fraction(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
        object.__setattr__(self, "terms",
                           {m: c for m, c in clean.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("FockState is immutable")

    @classmethod
    def vacuum(cls):
        return cls({VACUUM_MONOMIAL: Fraction(1)})

    @classmethod
    def zero(cls):
        return cls({})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return FockState(terms)

    def __sub__(self, other):
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) - c
        return FockState(terms)

    def scale(self, c):
        c = c if isinstance(c, Fraction) else Fraction(c)
        return FockState({m: v * c for m, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FockState) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("%s*%r" % (c, m) for m, c in sorted(
            self.terms.items(), key=lambda kv: kv[0].factors))


def _check_mode_class(mode, cls, n_classes):
    if mode < 1:
        raise ModeNonPositive("mode %d must be positive" % mode)
    if not 0 <= cls < n_classes:
        raise UnknownClass("class index %d outside 0..%d" % (cls, n_classes - 1))


class Create:
    """Creation operator: left multiplication by the generator (mode, class)."""

    __slots__ = ("mode", "cls")

    def __init__(self, mode, cls):
        object.__setattr__(self, "mode", int(mode))
        object.__setattr__(self, "cls", int(cls))

    def __setattr__(self, name, value):
        raise AttributeError("operator is immutable")

    def parity(self, model):
        return model.class_degree(self.cls) % 2

    def apply(self, state, model):
        _check_mode_class(self.mode, self.cls, len(model.ordinary_degrees))
        par = self.parity(model)
        key = (self.mode, self.cls)
        out = {}
        for mono, coeff in state.terms.items():
            if par and key in mono.factors:
                continue
            sign = 1
            pos = 0
            for m, c in mono.factors:
                if (m, c) < key:
                    pos += 1
                    if par and model.class_degree(c) % 2:
                        sign = -sign
                else:
                    break
            new = FockMonomial(mono.factors[:pos] + (key,) + mono.factors[pos:])
            out[new] = out.get(new, Fraction(0)) + sign * coeff
        return FockState(out)

    def __repr__(self):
        return "Create(%d, %d)" % (self.mode, self.cls)


class Annihilate:
    """Annihilation operator: contraction super-derivation for (mode, class)."""

    __slots__ = ("mode", "cls")

    def __init__(self, mode, cls):
        object.__setattr__(self, "mode", int(mode))
        object.__setattr__(self, "cls", int(cls))

    def __setattr__(self, name, value):
        raise AttributeError("operator is immutable")

    def parity(self, model):
        return model.compact_class_degree(self.cls) % 2

    def apply(self, state, model):
        _check_mode_class(self.mode, self.cls, len(model.compact_degrees))
        par = self.parity(model)
        i = self.mode
        norm = Fraction((-1) ** (i - 1) * i)
        out = {}
        for mono, coeff in state.terms.items():
            sign = 1
            for s, (m, c) in enumerate(mono.factors):
                if m == i:
                    pair = model.pairing_value(c, self.cls)
                    if pair:
                        new = FockMonomial(mono.factors[:s] + mono.factors[s + 1:])
                        val = sign * norm * pair * coeff
                        out[new] = out.get(new, Fraction(0)) + val
                if par and model.class_degree(c) % 2:
                    sign = -sign
        return FockState(out)

    def __repr__(self):
        return "Annihilate(%d, %d)" % (self.mode, self.cls)


class Central:
    """The central element; acts as the identity."""

    __slots__ = ()

    def parity(self, model):
        return 0

    def apply(self, state, model):
        return state

    def __repr__(self):
        return "Central()"


def apply(op, state, model):
    """Apply an operator to a state; free-function form of op.apply."""
    return op.apply(state, model)


def commutator(op1, op2, state, model):
    """Supercommutator op1 op2 - (-1)^(|op1||op2|) op2 op1 applied to state."""
    a = op1.apply(op2.apply(state, model), model)
    b = op2.apply(op1.apply(state, model), model)
    if op1.parity(model) * op2.parity(model) % 2:
        return a + b
    return a - b


def stratum_class(nu, model=None):
    """
    The Fock representative of the closure of the stratum of a partition
    on the one-class model: the product of creation operators at the parts
    applied to the vacuum, divided by the multiplicity factorial.  Lives in
    level n and degree 2*drop.
    """
    if model is None:
        from .surfaces import DELTA
        model = DELTA
    degs = model.ordinary_degrees
    if len(degs) != 1 or degs[0] != 0:
        raise WrongModel(
            "stratum classes need the single degree-0 class model, got %r"
            % (model.name,))
    st = FockState.vacuum()
    for part in nu:
        st = Create(part, 0).apply(st, model)
    return st.scale(Fraction(1, multiplicity_factorial(nu)))


def degree_of(state, model, hodge=False):
    """
    The common cohomological degree of all monomials of the state, or the
    MIXED marker; with hodge=True, the common bidegree instead.
    """
    if hodge and model.hodge is None:
        raise MissingHodgeData("model %r carries no Hodge data" % model.name)
    seen = None
    for mono in state.terms:
        d = mono.bidegree(model) if hodge else mono.degree(model)
        if seen is None:
            seen = d
        elif seen != d:
            return MIXED
    return seen


def graded_character(model, order):
    """
    Character of the Fock space: the coefficient of q^n is the sum of
    t^degree over all level-n monomials.  Evaluated generator by generator
    (geometric step for even classes, two-term step for odd ones), which
    sums over exactly the admissible monomials without listing them.
    """
    coeffs = [CoeffPoly.one()] + [CoeffPoly.zero()] * order
    for mode in range(1, order + 1):
        for cls, d in enumerate(model.ordinary_degrees):
            td = CoeffPoly.monomial((d + 2 * (mode - 1),))
            if d % 2 == 0:
                for lvl in range(mode, order + 1):
                    coeffs[lvl] = coeffs[lvl] + td * coeffs[lvl - mode]
            else:
                for lvl in range(order, mode - 1, -1):
                    coeffs[lvl] = coeffs[lvl] + td * coeffs[lvl - mode]
    return QTSeries(order, coeffs)


def level_dim(model, n):
    """Number of level-n monomials, by the same stepping with plain counts."""
    b_even = model.betti[0] + model.betti[2] + model.betti[4]
    b_odd = model.betti[1] + model.betti[3]
    counts = [1] + [0] * n
    for mode in range(1, n + 1):
        for _ in range(b_even):
            for lvl in range(mode, n + 1):
                counts[lvl] += counts[lvl - mode]
        for _ in range(b_odd):
            for lvl in range(n, mode - 1, -1):
                counts[lvl] += counts[lvl - mode]
    return counts[n]


def enumerate_monomials(model, n):
    """
    All level-n monomials, listed explicitly.  Exponential in n; meant for
    small levels (cross-checks and sampling), not for production counts.
    """
    degs = model.ordinary_degrees
    gens = [(mode, cls) for mode in range(1, n + 1) for cls in range(len(degs))]

    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(FockMonomial(acc))
            return
        for gi in range(start, len(gens)):
            mode, cls = gens[gi]
            if mode > remaining:
                continue
            odd = degs[cls] % 2
            nxt = gi if not odd else gi + 1
            rec(nxt, remaining - mode, acc + ((mode, cls),))

    rec(0, n, ())
    return out


def random_state(model, level, rng, n_terms=3):
    """
    A random exact state of the given level: a few random admissible
    monomials with small random rational coefficients.  Sampling is by
    random walk over generators; it need not be uniform.
    """
    degs = model.ordinary_degrees
    terms = {}
    for _ in range(n_terms):
        for _attempt in range(50):
            remaining = level
            factors = []
            ok = True
            while remaining:
                mode = rng.randint(1, remaining)
                cls = rng.randrange(len(degs))
                if degs[cls] % 2 and (mode, cls) in factors:
                    ok = False
                    break
                factors.append((mode, cls))
                remaining -= mode
            if ok:
                mono = FockMonomial(sorted(factors))
                num = rng.choice([-5, -3, -2, -1, 1, 2, 3, 5])
                den = rng.choice([1, 2, 3])
                terms[mono] = terms.get(mono, Fraction(0)) + Fraction(num, den)
                break
    return FockState(terms)
