"""Reduced simplicial homology over a field and Cohen-Macaulay tests.

Coefficients are ``"rational"`` (exact fraction-free elimination on Python
integers), ``"gf2"``, or any prime ``p`` given as an ``int``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .canonical import complex_key
from .core import SimplicialComplex, link_vertex, members, popcount, skeleton

Coefficients = Union[str, int]


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers; ``betti[0]`` is degree -1."""

    betti: tuple[int, ...]

    def __getitem__(self, degree: int) -> int:
        i = degree + 1
        if 0 <= i < len(self.betti):
            return self.betti[i]
        return 0

    def nonzero(self) -> dict[int, int]:
        return {i - 1: b for i, b in enumerate(self.betti) if b}

    def to_json(self) -> dict:
        return {str(k): v for k, v in self.nonzero().items()}


@dataclass(frozen=True)
class SphereSignature:
    """Degree ``k`` when the homology is that of ``S^k``, else ``None``."""

    dimension: int | None

    def __str__(self) -> str:
        return "not-a-homology-sphere" if self.dimension is None else f"S{self.dimension}"


def _prime(coefficients: Coefficients) -> int:
    if coefficients in ("rational", "Q", 0):
        return 0
    if coefficients == "gf2":
        return 2
    if isinstance(coefficients, int) and coefficients > 1:
        return coefficients
    raise ValueError(f"unknown coefficients {coefficients!r}")


def _rank_gf2(rows: list[int]) -> int:
    rank = 0
    rows = [r for r in rows if r]
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        rank += 1
        low = pivot & -pivot
        rows = [r ^ pivot if r & low else r for r in rows]
        rows = [r for r in rows if r]
    return rank


def _rank_mod_p(mat: list[list[int]], p: int) -> int:
    a = [[x % p for x in row] for row in mat]
    rank = 0
    ncols = len(a[0]) if a else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [x * inv % p for x in a[rank]]
        for r in range(len(a)):
            if r != rank and a[r][col]:
                fac = a[r][col]
                a[r] = [(x - fac * y) % p for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def _rank_rational(mat: list[list[int]]) -> int:
    """Bareiss fraction-free elimination."""
    a = [row[:] for row in mat]
    m = len(a)
    ncols = len(a[0]) if a else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, m) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pv = a[rank][col]
        for r in range(rank + 1, m):
            ar = a[r]
            f = ar[col]
            a[r] = [(pv * x - f * y) // prev for x, y in zip(ar, a[rank])]
        prev = pv
        rank += 1
    return rank


def _boundary_rank(lower: list[int], upper: list[int], p: int) -> int:
    if not lower or not upper:
        return 0
    index = {s: i for i, s in enumerate(lower)}
    if p == 2:
        rows = []
        for s in upper:
            r = 0
            for v in members(s):
                r |= 1 << index[s & ~(1 << v)]
            rows.append(r)
        return _rank_gf2(rows)
    mat = []
    for s in upper:
        row = [0] * len(lower)
        for pos, v in enumerate(members(s)):
            row[index[s & ~(1 << v)]] = -1 if pos % 2 else 1
        mat.append(row)
    return _rank_rational(mat) if p == 0 else _rank_mod_p(mat, p)


def reduced_homology(d: SimplicialComplex, coefficients: Coefficients = "rational") -> HomologyProfile:
    p = _prime(coefficients)
    if d.is_void:
        return HomologyProfile(())
    by = d.faces_by_dim()
    top = d.dim
    ranks = {}
    for j in range(0, top + 1):
        ranks[j] = _boundary_rank(by.get(j - 1, []), by.get(j, []), p)
    betti = []
    for j in range(-1, top + 1):
        cj = len(by.get(j, []))
        betti.append(cj - ranks.get(j, 0) - ranks.get(j + 1, 0))
    return HomologyProfile(tuple(betti))


def euler_characteristic(d: SimplicialComplex) -> int:
    """Reduced Euler characteristic from face counts."""
    return sum((-1) ** (popcount(s) - 1) for s in d.faces())


_CM_MEMO: dict[tuple[bytes, int], bool] = {}


def clear_memos() -> None:
    _CM_MEMO.clear()


def is_cohen_macaulay(d: SimplicialComplex, coefficients: Coefficients = "rational") -> bool:
    """Reisner's criterion: every link (the complex itself included) has
    vanishing reduced homology below its dimension.

    Checked as: the complex satisfies it at the empty face and every vertex
    link is Cohen-Macaulay.  Void and ``{emptyset}`` are Cohen-Macaulay.
    """
    return _cm(d, _prime(coefficients))


def _cm(d: SimplicialComplex, p: int) -> bool:
    if d.is_void or d.facets == (0,):
        return True
    key = (complex_key(d), p)
    hit = _CM_MEMO.get(key)
    if hit is not None:
        return hit
    prof = reduced_homology(d, p if p else "rational")
    ok = all(prof[i] == 0 for i in range(-1, d.dim))
    if ok:
        for v in members(d.vertices()):
            if not _cm(link_vertex(d, v), p):
                ok = False
                break
    _CM_MEMO[key] = ok
    return ok


def is_sequentially_cm(d: SimplicialComplex, coefficients: Coefficients = "rational") -> bool:
    """Every pure skeleton is Cohen-Macaulay."""
    p = _prime(coefficients)
    for s in range(0, d.dim + 1):
        if not _cm(skeleton(d, s, pure=True), p):
            return False
    return True


def free_face_collapse(d: SimplicialComplex) -> SimplicialComplex:
    """Remove free pairs until none is left.

    A non-empty face is free when exactly one other face properly contains
    it; it is removed together with that face, smallest free mask first.
    """
    faces = d.faces()
    while True:
        free = None
        for s in sorted(faces):
            if s == 0:
                continue
            over = [t for t in faces if t != s and t & s == s]
            if len(over) == 1:
                free = (s, over[0])
                break
        if free is None:
            break
        faces.discard(free[0])
        faces.discard(free[1])
    return SimplicialComplex.generated_by(d.n, faces) if faces else SimplicialComplex.void(d.n)


def sphere_signature(d: SimplicialComplex, coefficients: Coefficients = "rational") -> SphereSignature:
    prof = reduced_homology(free_face_collapse(d), coefficients)
    nz = prof.nonzero()
    if len(nz) == 1 and list(nz.values()) == [1]:
        return SphereSignature(next(iter(nz)))
    return SphereSignature(None)


def top_skeleton(d: SimplicialComplex) -> SimplicialComplex:
    """Pure skeleton in the top dimension."""
    if d.is_void:
        return d
    return skeleton(d, d.dim, pure=True)
