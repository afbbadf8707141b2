"""Named clutter families: cyclic uniform, deleted cross-polytope, two-facet
complement, complete uniform and graphic-matroid circuit clutters.

Vertex ``i`` of every generated clutter carries the label ``str(i + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Clutter, ClutterError, LabeledGround, mask_of

FAMILIES = (
    "cycle-graph",
    "cyclic-uniform",
    "deleted-crosspolytope",
    "two-facet-complement",
    "complete-uniform",
    "graphic-matroid",
)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    parameters: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ClutterError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")


def make_cyclic_uniform(n: int, k: int) -> Clutter:
    """Every ``k`` cyclically consecutive vertices of ``Z_n`` form a circuit."""
    if not 1 <= k <= n:
        raise ClutterError(f"cyclic-uniform needs 1 <= k <= n, got n={n}, k={k}")
    return Clutter(n, tuple({mask_of((i + j) % n for j in range(k)) for i in range(n)}))


def make_cycle_graph(n: int) -> Clutter:
    if n < 3:
        raise ClutterError("a cycle graph needs at least 3 vertices")
    return make_cyclic_uniform(n, 2)


def make_deleted_crosspolytope(n: int) -> Clutter:
    """Odd vertices, even vertices, and the pairs ``{i, i+1}`` for odd ``i`` (1-based)."""
    if n < 1:
        raise ClutterError("deleted-crosspolytope needs n >= 1")
    odds = mask_of(range(0, 2 * n, 2))
    evens = mask_of(range(1, 2 * n, 2))
    pairs = [mask_of((i, i + 1)) for i in range(0, 2 * n, 2)]
    return Clutter(2 * n, tuple({odds, evens, *pairs}))


def make_two_facet_complement(n: int) -> Clutter:
    """All ``n``-subsets of ``[2n]`` except ``{1..n}`` and ``{n+1..2n}``."""
    if n < 1:
        raise ClutterError("two-facet-complement needs n >= 1")
    low = mask_of(range(n))
    high = mask_of(range(n, 2 * n))
    circ = [m for m in (mask_of(s) for s in combinations(range(2 * n), n)) if m not in (low, high)]
    return Clutter(2 * n, tuple(circ))


def make_complete_uniform(n: int, d: int) -> Clutter:
    if not 1 <= d <= n:
        raise ClutterError(f"complete-uniform needs 1 <= d <= n, got n={n}, d={d}")
    return Clutter(n, tuple(mask_of(s) for s in combinations(range(n), d)))


def make_graphic_matroid_circuits(edges: list[tuple[int, int]]) -> Clutter:
    """Circuit clutter of the cycle matroid: ground set = edge indices.

    Cycles are found by brute force over edge subsets, so keep graphs small.
    """
    m = len(edges)
    if m > 20:
        raise ClutterError("graphic matroid generator is limited to 20 edges")
    seen = set()
    for a, b in edges:
        if a == b:
            raise ClutterError("loops are not allowed")
        key = frozenset((a, b))
        if key in seen:
            raise ClutterError("parallel edges are not allowed")
        seen.add(key)
    cycles = []
    for sub in range(1, 1 << m):
        chosen = [edges[i] for i in range(m) if sub >> i & 1]
        if len(chosen) < 3:
            continue
        deg: dict[int, int] = {}
        for a, b in chosen:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        if any(x != 2 for x in deg.values()):
            continue
        if _connected(chosen):
            cycles.append(sub)
    return Clutter(m, tuple(cycles))


def _connected(edges: list[tuple[int, int]]) -> bool:
    adj: dict[int, set[int]] = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    start = next(iter(adj))
    stack, seen = [start], {start}
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(adj)


def complete_graph_edges(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def make_family(spec: FamilySpec) -> tuple[Clutter, LabeledGround]:
    p = spec.parameters
    try:
        if spec.family == "cycle-graph":
            (n,) = p
            c = make_cycle_graph(n)
        elif spec.family == "cyclic-uniform":
            n, k = p
            c = make_cyclic_uniform(n, k)
        elif spec.family == "deleted-crosspolytope":
            (n,) = p
            c = make_deleted_crosspolytope(n)
        elif spec.family == "two-facet-complement":
            (n,) = p
            c = make_two_facet_complement(n)
        elif spec.family == "complete-uniform":
            n, d = p
            c = make_complete_uniform(n, d)
        else:
            (n,) = p
            c = make_graphic_matroid_circuits(complete_graph_edges(n))
    except ValueError as exc:
        if isinstance(exc, ClutterError):
            raise
        raise ClutterError(f"wrong number of parameters for {spec.family}: {p}") from None
    return c, LabeledGround.numbered(c.n)
