"""Finitely generated submonoids of Z^r, their saturations and holes.

The saturation of S is A(S) ∩ C(S): the group generated by S intersected
with the rational cone spanned by S.  Group membership is decided with a
Hermite normal form of the generators, cone membership with an exact
(``Fraction``) phase-one simplex.  Nothing here uses floating point.

Membership in S itself is not decidable from the saturation data, so it is
always supplied as a :class:`MembershipOracle`.
"""
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

__all__ = [
    "hermite_basis",
    "FGMonoid",
    "MembershipOracle",
    "in_group",
    "in_cone",
    "in_saturation",
    "holes_in_box",
    "min_stretch",
    "box_ranges",
]


def hermite_basis(vectors, rank):
    """Row-style Hermite normal form of the integer span of ``vectors``.

    Rows are returned in echelon form with strictly increasing pivot
    columns, positive pivots, and entries above each pivot reduced into
    ``[0, pivot)``.  Zero rows are dropped.
    """
    rows = [list(v) for v in vectors if any(v)]
    basis = []
    for col in range(rank):
        active = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        if not active:
            continue
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            reduced = [piv]
            for r in active[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                (reduced if r[col] else rest).append(r)
            active = reduced
        piv = active[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        for i, b in enumerate(basis):
            q = b[col] // piv[col]
            if q:
                basis[i] = [x - q * y for x, y in zip(b, piv)]
        basis.append(piv)
        rows = [r for r in rest if any(r)]
    return [tuple(b) for b in basis]


def _reduce(basis, v):
    v = list(v)
    bi = 0
    for col in range(len(v)):
        if bi < len(basis) and basis[bi][col]:
            q, rem = divmod(v[col], basis[bi][col])
            if rem:
                return None
            if q:
                v = [a - q * b for a, b in zip(v, basis[bi])]
            bi += 1
        elif v[col]:
            return None
    return v


def _cone_feasible(gens, v):
    # phase one of the simplex method: is there x >= 0 with sum x_i g_i = v?
    m = len(v)
    g = len(gens)
    if g == 0:
        return not any(v)
    rows = []
    for i in range(m):
        row = [Fraction(gen[i]) for gen in gens] + [Fraction(0)] * m + [Fraction(v[i])]
        if row[-1] < 0:
            row = [-a for a in row]
        row[g + i] = Fraction(1)
        rows.append(row)
    basis = [g + i for i in range(m)]
    ncols = g + m
    obj = [-sum(r[j] for r in rows) if j < g else Fraction(0) for j in range(ncols)]
    obj.append(-sum(r[-1] for r in rows))
    while True:
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                ratio = r[-1] / r[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # unbounded phase-one objective cannot happen; it is bounded below by 0
            raise AssertionError("phase-one simplex reported unboundedness")
        prow = rows[leave]
        pv = prow[enter]
        prow = [a / pv for a in prow]
        rows[leave] = prow
        for i, r in enumerate(rows):
            if i != leave and r[enter]:
                f = r[enter]
                rows[i] = [a - f * b for a, b in zip(r, prow)]
        if obj[enter]:
            f = obj[enter]
            obj = [a - f * b for a, b in zip(obj, prow)]
        basis[leave] = enter
    return obj[-1] == 0


@dataclass(frozen=True)
class FGMonoid:
    """Monoid generated by ``generators`` inside Z^rank."""

    generators: tuple
    rank: int
    lattice_basis: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        for g in gens:
            if len(g) != self.rank:
                raise ValueError(f"generator {g} does not have length {self.rank}")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "lattice_basis", tuple(hermite_basis(gens, self.rank)))

    @classmethod
    def from_vectors(cls, vectors, rank=None):
        vectors = [tuple(v) for v in vectors]
        if rank is None:
            if not vectors:
                raise ValueError("rank is required when there are no generators")
            rank = len(vectors[0])
        return cls(tuple(vectors), rank)

    def _check(self, v):
        v = tuple(v)
        if len(v) != self.rank:
            raise ValueError(f"vector {v} does not have length {self.rank}")
        return v


def in_group(M, v):
    """Whether ``v`` is an integer combination of the generators."""
    return _reduce(M.lattice_basis, M._check(v)) is not None


def in_cone(M, v):
    """Whether ``v`` is a nonnegative rational combination of the generators."""
    return _cone_feasible(M.generators, M._check(v))


def in_saturation(M, v):
    v = M._check(v)
    return in_group(M, v) and in_cone(M, v)


def box_ranges(box, rank):
    """Normalize a box: an int ``B`` means ``[0, B]`` in every coordinate,
    a sequence of ints gives per-coordinate upper bounds (lower bound 0),
    and a sequence of ``(lo, hi)`` pairs is taken as is."""
    if isinstance(box, int):
        return [(0, box)] * rank
    box = list(box)
    if len(box) != rank:
        raise ValueError(f"box has {len(box)} coordinates, expected {rank}")
    out = []
    for b in box:
        if isinstance(b, int):
            out.append((0, b))
        else:
            lo, hi = b
            out.append((int(lo), int(hi)))
    return out


class MembershipOracle:
    """A deterministic predicate ``v in S`` on integer vectors."""

    def __init__(self, predicate, description=""):
        self._predicate = predicate
        self.description = description

    def __call__(self, v):
        return bool(self._predicate(tuple(v)))

    @classmethod
    def from_generators(cls, M, box, max_steps=None):
        """Membership in the monoid generated by ``M.generators``, exact on
        ``box``.

        With nonnegative generators the partial sums only grow, so a search
        pruned to the box is complete.  Otherwise sums of at most
        ``max_steps`` generators are explored (default: the box's l1 size).
        """
        ranges = box_ranges(box, M.rank)
        nonneg = all(min(g) >= 0 for g in M.generators)
        if max_steps is None:
            max_steps = sum(max(abs(lo), abs(hi)) for lo, hi in ranges)
        zero = (0,) * M.rank
        seen = {zero}
        queue = deque([(zero, 0)])
        while queue:
            v, steps = queue.popleft()
            if not nonneg and steps >= max_steps:
                continue
            for g in M.generators:
                w = tuple(a + b for a, b in zip(v, g))
                if w in seen:
                    continue
                if nonneg and any(x > hi for x, (_, hi) in zip(w, ranges)):
                    continue
                seen.add(w)
                queue.append((w, steps + 1))
        inside = frozenset(
            w for w in seen if all(lo <= x <= hi for x, (lo, hi) in zip(w, ranges))
        )

        def member(v):
            if not all(lo <= x <= hi for x, (lo, hi) in zip(v, ranges)):
                raise ValueError(f"{v} lies outside the box this oracle was built for")
            return v in inside

        return cls(member, f"generated by {len(M.generators)} vectors, exact on {ranges}")


def holes_in_box(M, oracle, box):
    """Vectors of the box in the saturation of ``M`` but rejected by
    ``oracle``, in lexicographic order."""
    ranges = box_ranges(box, M.rank)
    holes = []
    for v in product(*(range(lo, hi + 1) for lo, hi in ranges)):
        if in_saturation(M, v) and not oracle(v):
            holes.append(v)
    return holes


def min_stretch(v, oracle, e_max):
    """Least ``c`` in ``1..e_max`` with ``c*v`` accepted by ``oracle``, or
    ``None`` if there is none up to ``e_max``."""
    if e_max < 1:
        raise ValueError("e_max must be at least 1")
    for c in range(1, e_max + 1):
        if oracle(tuple(c * x for x in v)):
            return c
    return None
