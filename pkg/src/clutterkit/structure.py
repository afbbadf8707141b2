"""Vertex-local structure of clutters and the chordality decision procedure."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .cache import ChordalityCache
from .canonical import canonical_key
from .core import (
    Clutter,
    ClutterError,
    _check_vertex,
    contract_vertex,
    delete_vertex,
    induced_subclutter,
    iter_subsets,
    mask_of,
    members,
    minors_one_step,
)


@dataclass(frozen=True)
class VertexVerdict:
    vertex: int
    simplicial: bool
    free: bool
    complete_neighborhood: bool | None = None


def _exchange_ok(circuits: tuple[int, ...], e1: int, e2: int, v: int) -> bool:
    target = (e1 | e2) & ~(1 << v)
    for e3 in circuits:
        if e3 & target == e3:
            return True
    return False


def is_simplicial_vertex(c: Clutter, v: int) -> bool:
    """Every two distinct circuits through ``v`` have a circuit inside their union minus ``v``."""
    _check_vertex(c.n, v)
    through = c.circuits_through(v)
    circ = c.circuits
    for i in range(len(through)):
        for j in range(i + 1, len(through)):
            if not _exchange_ok(circ, through[i], through[j], v):
                return False
    return True


def simplicial_vertices(c: Clutter) -> list[int]:
    return [v for v in range(c.n) if is_simplicial_vertex(c, v)]


def has_simplicial_vertex(c: Clutter) -> bool:
    return any(is_simplicial_vertex(c, v) for v in range(c.n))


def is_free_vertex(c: Clutter, v: int) -> bool:
    _check_vertex(c.n, v)
    return len(c.circuits_through(v)) == 1


def is_complete_neighborhood_vertex(c: Clutter, v: int, d: int) -> bool:
    """The circuits inside the neighbourhood of ``v`` are all ``d``-subsets of it.

    A neighbourhood with fewer than ``d`` vertices is vacuously complete.
    """
    _check_vertex(c.n, v)
    if not c.is_uniform(d):
        raise ClutterError(f"clutter is not {d}-uniform")
    nbhd = 0
    for e in c.circuits_through(v):
        nbhd |= e
    nbhd &= ~(1 << v)
    inside = {e for e in c.circuits if e & nbhd == e}
    wanted = {mask_of(s) for s in combinations(members(nbhd), d)}
    return inside == wanted


def vertex_verdict(c: Clutter, v: int) -> VertexVerdict:
    cn = None
    d = c.min_circuit_size()
    if c.circuits and c.is_uniform(d):
        cn = is_complete_neighborhood_vertex(c, v, d)
    return VertexVerdict(v, is_simplicial_vertex(c, v), is_free_vertex(c, v), cn)


def neighborhood_containment_pairs(c: Clutter) -> set[tuple[int, int]]:
    """Pairs ``(v, e)`` with ``v in e`` such that ``e`` exchanges with every other circuit through ``v``."""
    out = set()
    for v in range(c.n):
        through = c.circuits_through(v)
        for e in through:
            if all(_exchange_ok(c.circuits, e, e2, v) for e2 in through if e2 != e):
                out.add((v, e))
    return out


def is_chordal(c: Clutter, cache: ChordalityCache | None = None) -> bool:
    """Every minor of ``c`` (``c`` included) has a simplicial vertex.

    A clutter on no vertices counts as chordal.  Results are memoised under
    the canonical key, so one cache can serve a whole enumeration run.
    """
    if cache is None:
        cache = ChordalityCache()
    return _chordal(c, cache)


def _chordal(c: Clutter, cache: ChordalityCache) -> bool:
    if c.n == 0:
        return True
    key = canonical_key(c)
    hit = cache.get(key)
    if hit is not None:
        return bool(hit)
    ok = has_simplicial_vertex(c)
    if ok:
        seen = set()
        for m in minors_one_step(c):
            if m.n == 0:
                continue
            mk = canonical_key(m)
            if mk in seen:
                continue
            seen.add(mk)
            if not _chordal(m, cache):
                ok = False
                break
    cache.put(key, ok)
    return ok


def minimal_nonchordal_minor(
    c: Clutter, cache: ChordalityCache | None = None
) -> tuple[Clutter, list[tuple[str, int]]] | None:
    """A non-chordal minor with the fewest vertices, and the operations reaching it.

    Operations are ``("delete" | "contract", vertex)`` with vertex indices
    in the current (shrinking) ground set.  Returns ``None`` for chordal input.
    """
    if cache is None:
        cache = ChordalityCache()
    if _chordal(c, cache):
        return None
    level = {canonical_key(c): (c, [])}
    best = (c, [])
    while level:
        nxt = {}
        for m, ops in level.values():
            if m.n == 0:
                continue
            for v in range(m.n):
                for name, op in (("delete", delete_vertex), ("contract", contract_vertex)):
                    mm = op(m, v)
                    if mm.n == 0 or _chordal(mm, cache):
                        continue
                    k = canonical_key(mm)
                    if k not in nxt:
                        nxt[k] = (mm, ops + [(name, v)])
        if nxt:
            best = min(nxt.values(), key=lambda t: canonical_key(t[0]))
        level = nxt
    return best


def gyo_reduce(c: Clutter, rng: random.Random | None = None) -> Clutter:
    """Graham-Yu-Ozsoyoglu reduction: eliminate free vertices until none is left.

    A free vertex ``v`` in its unique circuit ``e`` is deleted when ``e - v`` is
    strictly inside another circuit and contracted otherwise.  With ``rng`` the
    free vertex is picked at random, else the lowest index is used.
    """
    cur = c
    while True:
        free = [v for v in range(cur.n) if len(cur.circuits_through(v)) == 1]
        if not free:
            return cur
        v = rng.choice(free) if rng is not None else free[0]
        (e,) = cur.circuits_through(v)
        rest = e & ~(1 << v)
        inside = any(f != e and f & rest == rest and f != rest for f in cur.circuits)
        cur = delete_vertex(cur, v) if inside else contract_vertex(cur, v)


def has_free_vertex_property(c: Clutter, rng: random.Random | None = None) -> bool:
    """True when the free-vertex reduction ends with no non-empty circuit."""
    return all(e == 0 for e in gyo_reduce(c, rng).circuits)


def is_matroid_circuit_clutter(c: Clutter) -> bool:
    """Weak circuit exchange across every pair of distinct circuits and shared vertex."""
    circ = c.circuits
    for e1, e2 in combinations(circ, 2):
        for v in members(e1 & e2):
            if not _exchange_ok(circ, e1, e2, v):
                return False
    return True


def graph_neighborhood_simplicial(g: Clutter) -> bool:
    """For every independent set ``A``, ``g - N[A]`` is empty or has a simplicial vertex."""
    if not g.is_uniform(2):
        raise ClutterError("graph_neighborhood_simplicial needs a 2-uniform clutter")
    nbr = [0] * g.n
    for e in g.circuits:
        a, b = members(e)
        nbr[a] |= 1 << b
        nbr[b] |= 1 << a
    for a_set in iter_subsets(g.ground):
        if not g.is_independent(a_set):
            continue
        closed = a_set
        for v in members(a_set):
            closed |= nbr[v]
        rest = g.ground & ~closed
        if rest == 0:
            continue
        sub = induced_subclutter(g, rest)
        if not has_simplicial_vertex(sub):
            return False
    return True


def is_graph_chordal(g: Clutter) -> bool:
    """Graph chordality by simplicial-vertex elimination (independent of minors)."""
    if not g.is_uniform(2):
        raise ClutterError("is_graph_chordal needs a 2-uniform clutter")
    nbr = {v: set() for v in range(g.n)}
    for e in g.circuits:
        a, b = members(e)
        nbr[a].add(b)
        nbr[b].add(a)
    alive = set(range(g.n))
    while alive:
        for v in sorted(alive):
            ns = nbr[v] & alive
            if all(y in nbr[x] for x, y in combinations(ns, 2)):
                alive.discard(v)
                break
        else:
            return False
    return True

