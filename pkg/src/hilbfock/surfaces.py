"""
Graded super vector-space data of a surface.

A SurfaceModel records the ordinary and compact-support Betti numbers in
degrees 0..4, the pairing between degree d and compact degree 4-d, and an
optional Hodge bigrading.  Cohomology classes get flat indices: ordinary
classes are numbered degree by degree, compact-support classes likewise.
The parity of a class is its degree mod 2.

Shipped presets: the open bidisk/affine-plane model ("delta"), the
projective plane, the quadric, a K3 and an abelian surface.  All pairings
are identity blocks in the chosen bases.
"""

from fractions import Fraction


class MissingHodgeData(ValueError):
    """Hodge-mode operation on a model without a Hodge bigrading."""


def _rank(rows):
    # exact Gaussian elimination over Fraction
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


class SurfaceModel:
    __slots__ = ("name", "betti", "betti_c", "pairing", "hodge", "euler",
                 "_ord_degrees", "_com_degrees", "_bidegrees")

    def __init__(self, name, betti, betti_c=None, pairing=None, hodge=None,
                 euler=None):
        betti = tuple(int(b) for b in betti)
        if len(betti) != 5 or any(b < 0 for b in betti):
            raise ValueError("betti must be 5 non-negative integers")
        betti_c = betti if betti_c is None else tuple(int(b) for b in betti_c)
        if len(betti_c) != 5 or any(b < 0 for b in betti_c):
            raise ValueError("betti_c must be 5 non-negative integers")
        for d in range(5):
            if betti[d] != betti_c[4 - d]:
                raise ValueError(
                    "pairing block %d cannot be square: b_%d=%d vs b^c_%d=%d"
                    % (d, d, betti[d], 4 - d, betti_c[4 - d]))
        if pairing is None:
            pairing = tuple(
                tuple(tuple(Fraction(1 if i == j else 0)
                            for j in range(betti_c[4 - d]))
                      for i in range(betti[d]))
                for d in range(5))
        else:
            pairing = tuple(
                tuple(tuple(Fraction(v) for v in row) for row in block)
                for block in pairing)
            for d, block in enumerate(pairing):
                if len(block) != betti[d] or any(
                        len(row) != betti_c[4 - d] for row in block):
                    raise ValueError("pairing block %d has wrong shape" % d)
                if betti[d] and _rank(block) != betti[d]:
                    raise ValueError("pairing block %d is degenerate" % d)
        if hodge is not None:
            hodge = {(int(p), int(q)): int(h) for (p, q), h in dict(hodge).items()
                     if int(h)}
            for (p, q), h in hodge.items():
                if h < 0 or p < 0 or q < 0:
                    raise ValueError("bad hodge entry (%d,%d): %d" % (p, q, h))
                if hodge.get((q, p), 0) != h:
                    raise ValueError("hodge numbers must be symmetric")
            for d in range(5):
                s = sum(h for (p, q), h in hodge.items() if p + q == d)
                if s != betti[d]:
                    raise ValueError(
                        "hodge numbers in degree %d sum to %d, betti is %d"
                        % (d, s, betti[d]))
            hodge = tuple(sorted(hodge.items()))
        e = betti[0] - betti[1] + betti[2] - betti[3] + betti[4]
        if euler is not None and int(euler) != e:
            raise ValueError("euler=%d inconsistent with betti (expect %d)"
                             % (int(euler), e))
        object.__setattr__(self, "name", str(name))
        object.__setattr__(self, "betti", betti)
        object.__setattr__(self, "betti_c", betti_c)
        object.__setattr__(self, "pairing", pairing)
        object.__setattr__(self, "hodge", hodge)
        object.__setattr__(self, "euler", e)
        object.__setattr__(self, "_ord_degrees", tuple(
            d for d in range(5) for _ in range(betti[d])))
        object.__setattr__(self, "_com_degrees", tuple(
            d for d in range(5) for _ in range(betti_c[d])))
        bidegs = None
        if hodge is not None:
            table = dict(hodge)
            out = []
            for d in range(5):
                for (p, q) in sorted(pq for pq in table if sum(pq) == d):
                    out.extend([(p, q)] * table[(p, q)])
            bidegs = tuple(out)
        object.__setattr__(self, "_bidegrees", bidegs)

    def __setattr__(self, name, value):
        raise AttributeError("SurfaceModel is immutable")

    def __eq__(self, other):
        return isinstance(other, SurfaceModel) and self._key() == other._key()

    def _key(self):
        return (self.name, self.betti, self.betti_c, self.pairing, self.hodge)

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "SurfaceModel(%r, betti=%r)" % (self.name, self.betti)

    @property
    def is_compact(self):
        return self.betti == self.betti_c

    @property
    def has_hodge(self):
        return self.hodge is not None

    @property
    def ordinary_degrees(self):
        """Degrees of the ordinary classes, flat order (degree-major)."""
        return self._ord_degrees

    @property
    def compact_degrees(self):
        return self._com_degrees

    @property
    def total_dim(self):
        return sum(self.betti)

    def class_degree(self, idx):
        degs = self.ordinary_degrees
        if not 0 <= idx < len(degs):
            raise IndexError("no ordinary class %d" % idx)
        return degs[idx]

    def compact_class_degree(self, idx):
        degs = self.compact_degrees
        if not 0 <= idx < len(degs):
            raise IndexError("no compact-support class %d" % idx)
        return degs[idx]

    def pairing_value(self, ord_idx, c_idx):
        """Pairing of ordinary class ord_idx with compact class c_idx."""
        d = self.class_degree(ord_idx)
        dc = self.compact_class_degree(c_idx)
        if d + dc != 4:
            return Fraction(0)
        i = ord_idx - sum(self.betti[:d])
        j = c_idx - sum(self.betti_c[:dc])
        return self.pairing[d][i][j]

    @property
    def class_bidegrees(self):
        """
        Hodge bidegrees of the ordinary classes, aligned with the flat
        order; within a degree, classes are sorted by ascending p.
        """
        if self._bidegrees is None:
            raise MissingHodgeData("model %r carries no Hodge data" % self.name)
        return self._bidegrees


DELTA = SurfaceModel("delta", (1, 0, 0, 0, 0), betti_c=(0, 0, 0, 0, 1))

P2 = SurfaceModel("p2", (1, 0, 1, 0, 1),
                  hodge={(0, 0): 1, (1, 1): 1, (2, 2): 1})

P1XP1 = SurfaceModel("p1xp1", (1, 0, 2, 0, 1),
                     hodge={(0, 0): 1, (1, 1): 2, (2, 2): 1})

K3 = SurfaceModel("k3", (1, 0, 22, 0, 1),
                  hodge={(0, 0): 1, (2, 0): 1, (1, 1): 20, (0, 2): 1,
                         (2, 2): 1})

ABELIAN = SurfaceModel("abelian", (1, 4, 6, 4, 1),
                       hodge={(0, 0): 1,
                              (1, 0): 2, (0, 1): 2,
                              (2, 0): 1, (1, 1): 4, (0, 2): 1,
                              (2, 1): 2, (1, 2): 2,
                              (2, 2): 1})

PRESETS = {
    "delta": DELTA,
    "c2": DELTA,
    "p2": P2,
    "p1xp1": P1XP1,
    "k3": K3,
    "abelian": ABELIAN,
}
