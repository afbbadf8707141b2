"""Clutters, simplicial complexes and the set-system operations between them.

Every subset of the ground set ``{0, ..., n-1}`` is stored as an ``int`` bit
mask (bit ``i`` set means vertex ``i`` is a member).  Both value types are
frozen and hold their antichain as a sorted tuple of masks, so equality and
hashing are structural.

A :class:`SimplicialComplex` is stored by its facets.  The two degenerate
complexes are kept apart literally: ``facets == ()`` is the void complex (no
faces at all) and ``facets == (0,)`` is the empty complex ``{emptyset}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 32


class ClutterError(ValueError):
    """Raised on malformed input or violated preconditions."""


# ---------------------------------------------------------------------------
# bit-mask helpers


def popcount(mask: int) -> int:
    return mask.bit_count()


def members(mask: int) -> list[int]:
    """Vertex indices in ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def drop_bit(mask: int, v: int) -> int:
    """Remove position ``v`` and shift the higher bits down by one."""
    low = mask & ((1 << v) - 1)
    high = mask >> (v + 1)
    return low | (high << v)


def insert_bit(mask: int, v: int) -> int:
    """Inverse of :func:`drop_bit` (the new position ``v`` is left clear)."""
    low = mask & ((1 << v) - 1)
    high = mask >> v
    return low | (high << (v + 1))


def minimal_sets(sets: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal members of ``sets``, sorted ascending."""
    uniq = sorted(set(sets), key=lambda s: (s.bit_count(), s))
    kept: list[int] = []
    for s in uniq:
        for t in kept:
            if t & s == t:
                break
        else:
            kept.append(s)
    return tuple(sorted(kept))


def maximal_sets(sets: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal members of ``sets``, sorted ascending."""
    uniq = sorted(set(sets), key=lambda s: (-s.bit_count(), s))
    kept: list[int] = []
    for s in uniq:
        for t in kept:
            if t & s == s:
                break
        else:
            kept.append(s)
    return tuple(sorted(kept))


def is_antichain(sets: Sequence[int]) -> bool:
    for a, b in combinations(sets, 2):
        if a == b or a & b == a or a & b == b:
            return False
    return True


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_VERTICES:
        raise ClutterError(f"ground set size {n} outside 0..{MAX_VERTICES}")


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise ClutterError(f"vertex {v} out of range for ground set of size {n}")


def _check_members(n: int, sets: Iterable[int], what: str) -> None:
    full = (1 << n) - 1
    for s in sets:
        if s < 0 or s & ~full:
            raise ClutterError(f"{what} {s:#b} not inside a ground set of size {n}")


# ---------------------------------------------------------------------------
# value types


@dataclass(frozen=True)
class Clutter:
    """An antichain of circuits on the ground set ``range(n)``.

    ``Clutter(n, ())`` has no circuits; ``Clutter(n, (0,))`` is ``{emptyset}``.
    """

    n: int
    circuits: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _check_n(self.n)
        circ = tuple(sorted(set(self.circuits)))
        _check_members(self.n, circ, "circuit")
        if not is_antichain(circ):
            raise ClutterError("circuits do not form an antichain")
        object.__setattr__(self, "circuits", circ)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "Clutter":
        return cls(n, tuple(mask_of(s) for s in sets))

    @classmethod
    def minimal(cls, n: int, sets: Iterable[int]) -> "Clutter":
        """Clutter of the inclusion-minimal members of an arbitrary set family."""
        return cls(n, minimal_sets(sets))

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    def as_sets(self) -> list[list[int]]:
        return [members(e) for e in self.circuits]

    def circuits_through(self, v: int) -> list[int]:
        bit = 1 << v
        return [e for e in self.circuits if e & bit]

    def is_independent(self, s: int) -> bool:
        return not any(e & s == e for e in self.circuits)

    def is_uniform(self, d: int | None = None) -> bool:
        sizes = {popcount(e) for e in self.circuits}
        if d is None:
            return len(sizes) <= 1
        return sizes <= {d}

    def max_circuit_size(self) -> int:
        return max((popcount(e) for e in self.circuits), default=0)

    def min_circuit_size(self) -> int:
        return min((popcount(e) for e in self.circuits), default=0)

    def __repr__(self) -> str:
        body = ", ".join("".join(str(v + 1) for v in members(e)) or "{}" for e in self.circuits)
        return f"Clutter(n={self.n}, [{body}])"


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on ``range(n)`` given by its facets."""

    n: int
    facets: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _check_n(self.n)
        fac = tuple(sorted(set(self.facets)))
        _check_members(self.n, fac, "facet")
        if not is_antichain(fac):
            raise ClutterError("facets do not form an antichain")
        object.__setattr__(self, "facets", fac)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(n, tuple(mask_of(s) for s in sets))

    @classmethod
    def generated_by(cls, n: int, faces: Iterable[int]) -> "SimplicialComplex":
        return cls(n, maximal_sets(faces))

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, ())

    @classmethod
    def empty(cls, n: int) -> "SimplicialComplex":
        return cls(n, (0,))

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, ((1 << n) - 1,))

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension; the void complex gets -2 so that ``dim + 1`` stays a count."""
        if not self.facets:
            return -2
        return max(popcount(f) for f in self.facets) - 1

    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    def is_pure(self) -> bool:
        return len({popcount(f) for f in self.facets}) <= 1

    def contains(self, s: int) -> bool:
        return any(f & s == s for f in self.facets)

    def faces(self) -> set[int]:
        out: set[int] = set()
        for f in self.facets:
            sub = f
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return out

    def faces_by_dim(self) -> dict[int, list[int]]:
        by: dict[int, list[int]] = {}
        for s in self.faces():
            by.setdefault(popcount(s) - 1, []).append(s)
        for lst in by.values():
            lst.sort()
        return by

    def vertices(self) -> int:
        """Mask of vertices that are faces."""
        m = 0
        for f in self.facets:
            m |= f
        return m

    def as_sets(self) -> list[list[int]]:
        return [members(f) for f in self.facets]

    def __repr__(self) -> str:
        body = ", ".join("".join(str(v + 1) for v in members(f)) or "{}" for f in self.facets)
        return f"SimplicialComplex(n={self.n}, [{body}])"


@dataclass(frozen=True)
class LabeledGround:
    """External vertex names for indices ``0..n-1``."""

    labels: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        labels = tuple(str(x) for x in self.labels)
        if len(set(labels)) != len(labels):
            raise ClutterError("vertex labels must be distinct")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def numbered(cls, n: int) -> "LabeledGround":
        return cls(tuple(str(i + 1) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ClutterError(f"unknown vertex label {label!r}") from None

    def names(self, mask: int) -> list[str]:
        return [self.labels[v] for v in members(mask)]

    def without(self, v: int) -> "LabeledGround":
        return LabeledGround(self.labels[:v] + self.labels[v + 1 :])


# ---------------------------------------------------------------------------
# clutter operations


def delete_vertex(c: Clutter, v: int) -> Clutter:
    """``c \\ v``: drop every circuit through ``v``; higher indices shift down."""
    _check_vertex(c.n, v)
    bit = 1 << v
    return Clutter(c.n - 1, tuple(drop_bit(e, v) for e in c.circuits if not e & bit))


def contract_vertex(c: Clutter, v: int) -> Clutter:
    """``c / v``: remove ``v`` from every circuit, then keep the minimal sets."""
    _check_vertex(c.n, v)
    return Clutter(c.n - 1, minimal_sets(drop_bit(e, v) for e in c.circuits))


def minors_one_step(c: Clutter) -> list[Clutter]:
    """The ``2n`` deletions and contractions, deletions first, by vertex."""
    if c.n < 1:
        raise ClutterError("a clutter on no vertices has no one-step minors")
    return [delete_vertex(c, v) for v in range(c.n)] + [
        contract_vertex(c, v) for v in range(c.n)
    ]


def augment_with_nonface(c: Clutter, s: int) -> Clutter:
    """Minimal sets of ``circuits + [s]`` for an independent set ``s``."""
    _check_members(c.n, (s,), "set")
    if not c.is_independent(s):
        raise ClutterError("augmenting set contains a circuit")
    return Clutter(c.n, minimal_sets(c.circuits + (s,)))


def disjoint_union(c: Clutter, d: Clutter) -> Clutter:
    """Circuits of ``c`` followed by those of ``d`` shifted past ``c.n``."""
    return Clutter(c.n + d.n, c.circuits + tuple(e << c.n for e in d.circuits))


def induced_subclutter(c: Clutter, keep: int) -> Clutter:
    """Induced subclutter on the vertices of ``keep`` (reindexed densely)."""
    out = c
    for v in reversed(members(c.ground & ~keep)):
        out = delete_vertex(out, v)
    return out


def independence_complex(c: Clutter) -> SimplicialComplex:
    """Complex of circuit-free sets, returned as maximal independent sets.

    The facets are obtained by repeatedly splitting a candidate set on a
    circuit it still contains, which is exact and cheap for small ground sets.
    """
    if 0 in c.circuits:
        return SimplicialComplex.void(c.n)
    found: set[int] = set()
    stack = [c.ground]
    seen: set[int] = set()
    while stack:
        s = stack.pop()
        if s in seen:
            continue
        seen.add(s)
        bad = next((e for e in c.circuits if e & s == e), None)
        if bad is None:
            found.add(s)
            continue
        for v in members(bad):
            stack.append(s & ~(1 << v))
    return SimplicialComplex(c.n, maximal_sets(found))


def nonface_clutter(d: SimplicialComplex) -> Clutter:
    """Minimal non-faces of ``d``: the inverse of :func:`independence_complex`."""
    if d.is_void:
        return Clutter(d.n, (0,))
    # A minimal non-face is a minimal transversal of the facet complements.
    comps = [d.ground & ~f for f in d.facets]
    return Clutter(d.n, minimal_transversals(comps, d.ground))


def minimal_transversals(sets: Sequence[int], ground: int) -> tuple[int, ...]:
    """Minimal subsets of ``ground`` meeting every member of ``sets``."""
    if not sets:
        return (0,)
    if 0 in sets:
        return ()
    partial = [0]
    for s in sets:
        nxt = []
        for t in partial:
            if t & s:
                nxt.append(t)
            else:
                for v in members(s):
                    nxt.append(t | (1 << v))
        partial = list(minimal_sets(nxt))
    return tuple(sorted(partial))


# ---------------------------------------------------------------------------
# complex operations


def link(d: SimplicialComplex, s: int) -> SimplicialComplex:
    """``link_d s`` on the ground set with the vertices of ``s`` removed."""
    if not d.contains(s):
        raise ClutterError("link taken at a set that is not a face")
    removed = members(s)
    faces = [f & ~s for f in d.facets if f & s == s]
    for v in reversed(removed):
        faces = [drop_bit(f, v) for f in faces]
    return SimplicialComplex(d.n - len(removed), maximal_sets(faces))


def delete_face(d: SimplicialComplex, s: int) -> SimplicialComplex:
    """Remove every face containing ``s``; the ground set is unchanged."""
    if not d.contains(s):
        return d
    gens = []
    for f in d.facets:
        if f & s != s:
            gens.append(f)
        else:
            for v in members(s):
                gens.append(f & ~(1 << v))
    if s == 0:
        return SimplicialComplex.void(d.n)
    return SimplicialComplex(d.n, maximal_sets(gens))


def delete_vertex_complex(d: SimplicialComplex, v: int) -> SimplicialComplex:
    """Induced subcomplex on ``V \\ v`` (indices above ``v`` shift down)."""
    _check_vertex(d.n, v)
    bit = 1 << v
    return SimplicialComplex(d.n - 1, maximal_sets(drop_bit(f & ~bit, v) for f in d.facets))


def link_vertex(d: SimplicialComplex, v: int) -> SimplicialComplex:
    """Vertex link on ``V \\ v``; a vertex that is not a face has the void link."""
    _check_vertex(d.n, v)
    if not d.contains(1 << v):
        return SimplicialComplex.void(d.n - 1)
    return link(d, 1 << v)


def join(d1: SimplicialComplex, d2: SimplicialComplex) -> SimplicialComplex:
    """Join on the concatenated ground set (``d2`` shifted by ``d1.n``)."""
    return SimplicialComplex(
        d1.n + d2.n, tuple(f1 | (f2 << d1.n) for f1 in d1.facets for f2 in d2.facets)
    )


def skeleton(d: SimplicialComplex, s: int, pure: bool = True) -> SimplicialComplex:
    """``pure``: complex generated by the ``s``-faces; otherwise all faces of dim <= s."""
    if s < -1:
        raise ClutterError("skeleton dimension must be at least -1")
    size = s + 1
    gens: set[int] = set()
    for f in d.facets:
        k = popcount(f)
        if k < size:
            if not pure:
                gens.add(f)
            continue
        if k == size:
            gens.add(f)
            continue
        verts = members(f)
        for combo in combinations(verts, size):
            gens.add(mask_of(combo))
    return SimplicialComplex(d.n, maximal_sets(gens))


def alexander_dual(d: SimplicialComplex) -> SimplicialComplex:
    """Facets are the complements (in ``range(d.n)``) of the minimal non-faces."""
    return SimplicialComplex(d.n, tuple(d.ground & ~e for e in nonface_clutter(d).circuits))


def d_complement(c: Clutter, d: int) -> Clutter:
    """The ``d``-uniform clutter of ``d``-sets that are not circuits of ``c``."""
    if not 1 <= d <= c.n:
        raise ClutterError(f"cardinality {d} outside 1..{c.n}")
    circ = set(c.circuits)
    out = []
    for combo in combinations(range(c.n), d):
        m = mask_of(combo)
        if m not in circ:
            out.append(m)
    return Clutter(c.n, tuple(out))


def iter_subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` including 0 and ``mask``."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
