"""Shedding faces, k-decomposability and shellability.

Shellability is decided two independent ways: a recursive search for
shedding faces of dimension at most ``dim`` (a d-dimensional complex is
shellable iff it is d-decomposable), and a direct backtracking search for a
shelling order.  :func:`is_shellable` uses the first and can audit it with
the second.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .canonical import complex_key
from .core import (
    ClutterError,
    SimplicialComplex,
    delete_face,
    link,
    maximal_sets,
    members,
    popcount,
)


class BudgetExceeded(RuntimeError):
    """The shelling search visited more nodes than its budget allowed."""


class AuditMismatch(AssertionError):
    """The two shellability algorithms disagreed."""


# ---------------------------------------------------------------------------
# shedding faces


def _require_face(d: SimplicialComplex, s: int) -> None:
    if s == 0:
        raise ClutterError("a shedding face must be non-empty")
    if not d.contains(s):
        raise ClutterError("not a face of the complex")


def _star_minus_candidates(d: SimplicialComplex, s: int) -> list[int]:
    return [f & ~(1 << v) for f in d.facets if f & s == s for v in members(s)]


def is_shedding_face(d: SimplicialComplex, s: int) -> bool:
    """No facet of ``(star s) - s`` is a facet of ``d - s``."""
    _require_face(d, s)
    cands = _star_minus_candidates(d, s)
    star_facets = maximal_sets(cands)
    del_facets = set(maximal_sets([f for f in d.facets if f & s != s] + cands))
    return not any(t in del_facets for t in star_facets)


def is_shedding_face_exchange(d: SimplicialComplex, s: int) -> bool:
    """Exchange form: every face ``t`` containing ``s`` and every ``v`` in ``s``
    admit ``w`` outside ``t`` with ``(t + w) - v`` a face."""
    _require_face(d, s)
    outside = d.ground
    for t in d.faces():
        if t & s != s:
            continue
        for v in members(s):
            base = t & ~(1 << v)
            if not any(d.contains(base | (1 << w)) for w in members(outside & ~t)):
                return False
    return True


# ---------------------------------------------------------------------------
# k-decomposability


@dataclass(frozen=True)
class SheddingCertificate:
    """Replayable proof of k-decomposability.

    ``kind`` is ``"simplex"``, ``"void"`` or ``"empty"`` for leaves and
    ``"shed"`` for an internal node, which carries the shedding ``face`` and the
    certificates of its ``link`` and ``deletion``.
    """

    kind: str
    facets: tuple[int, ...]
    n: int
    face: int | None = None
    link: "SheddingCertificate | None" = None
    deletion: "SheddingCertificate | None" = None

    def max_face_dim(self) -> int:
        if self.kind != "shed":
            return -1
        return max(popcount(self.face) - 1, self.link.max_face_dim(), self.deletion.max_face_dim())

    def faces_used(self) -> list[int]:
        if self.kind != "shed":
            return []
        return [self.face] + self.link.faces_used() + self.deletion.faces_used()

    def to_json(self) -> dict:
        out = {"kind": self.kind, "n": self.n, "facets": list(self.facets)}
        if self.kind == "shed":
            out["face"] = self.face
            out["link"] = self.link.to_json()
            out["deletion"] = self.deletion.to_json()
        return out


def _leaf_kind(d: SimplicialComplex) -> str | None:
    if d.is_void:
        return "void"
    if d.facets == (0,):
        return "empty"
    if d.is_simplex():
        return "simplex"
    return None


_KDEC_MEMO: dict[tuple[bytes, int], bool] = {}


def clear_memos() -> None:
    _KDEC_MEMO.clear()


def _candidate_faces(d: SimplicialComplex, k: int) -> list[int]:
    faces = [s for s in d.faces() if 0 < popcount(s) <= k + 1]
    faces.sort(key=lambda s: (popcount(s), s))
    return faces


def _kdec(d: SimplicialComplex, k: int, memo: dict, budget: list[int] | None = None) -> bool:
    if _leaf_kind(d) is not None:
        return True
    key = (complex_key(d), k)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if budget is not None:
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceeded("k-decomposability search exceeded its node budget")
    ok = False
    for s in _candidate_faces(d, k):
        if not is_shedding_face(d, s):
            continue
        if _kdec(link(d, s), k, memo, budget) and _kdec(delete_face(d, s), k, memo, budget):
            ok = True
            break
    memo[key] = ok
    return ok


def _certificate(d: SimplicialComplex, k: int, memo: dict) -> SheddingCertificate:
    leaf = _leaf_kind(d)
    if leaf is not None:
        return SheddingCertificate(leaf, d.facets, d.n)
    for s in _candidate_faces(d, k):
        if not is_shedding_face(d, s):
            continue
        lk, dl = link(d, s), delete_face(d, s)
        if _kdec(lk, k, memo) and _kdec(dl, k, memo):
            return SheddingCertificate(
                "shed", d.facets, d.n, s, _certificate(lk, k, memo), _certificate(dl, k, memo)
            )
    raise AssertionError("certificate requested for a complex that is not k-decomposable")


def is_k_decomposable(
    d: SimplicialComplex,
    k: int,
    memo: dict | None = None,
    certificate: bool = True,
    budget: int | None = None,
) -> tuple[bool, SheddingCertificate | None]:
    """Decide k-decomposability; on success also return a shedding certificate.

    Candidate shedding faces are tried by increasing dimension, then by mask.
    ``budget`` caps the number of complexes expanded (memo hits are free).
    """
    if k < -1:
        raise ClutterError("k must be at least -1")
    if memo is None:
        memo = _KDEC_MEMO
    ok = _kdec(d, k, memo, None if budget is None else [budget])
    if not ok or not certificate:
        return ok, None
    return True, _certificate(d, k, memo)


def replay_certificate(cert: SheddingCertificate, d: SimplicialComplex, k: int) -> bool:
    """Re-check a certificate against ``d`` from scratch."""
    if cert.facets != d.facets or cert.n != d.n:
        return False
    if cert.kind != "shed":
        return cert.kind == _leaf_kind(d)
    s = cert.face
    if not 0 < popcount(s) <= k + 1 or not d.contains(s) or not is_shedding_face(d, s):
        return False
    return replay_certificate(cert.link, link(d, s), k) and replay_certificate(
        cert.deletion, delete_face(d, s), k
    )


def min_decomposability(d: SimplicialComplex, memo: dict | None = None) -> int | None:
    """Least ``k >= 0`` with ``d`` k-decomposable, or ``None`` when not shellable."""
    top = max(d.dim, 0)
    for k in range(0, top + 1):
        if is_k_decomposable(d, k, memo, certificate=False)[0]:
            return k
    return None


# ---------------------------------------------------------------------------
# shelling search


def _shelling_step_ok(f: int, used: list[int]) -> bool:
    if not used:
        return True
    # x in f is "covered" when f - x lies in an earlier facet
    covered = 0
    for v in members(f):
        rest = f & ~(1 << v)
        for h in used:
            if h & rest == rest:
                covered |= 1 << v
                break
    for g in used:
        if not f & ~g & covered:
            return False
    return True


def is_shelling_order(order: list[int] | tuple[int, ...]) -> bool:
    return all(_shelling_step_ok(order[i], list(order[:i])) for i in range(len(order)))


def is_shellable_search(
    d: SimplicialComplex, budget: int | None = None
) -> tuple[bool, list[int] | None]:
    """Backtracking search for a shelling order.

    Facets are placed in weakly decreasing dimension.  Whether a facet may
    come next depends only on the set already placed, so dead sets are
    remembered.  Raises :class:`BudgetExceeded` after ``budget`` nodes.
    """
    if _leaf_kind(d) is not None:
        return True, list(d.facets)
    facets = sorted(d.facets, key=lambda f: (-popcount(f), f))
    m = len(facets)
    sizes = [popcount(f) for f in facets]
    full = (1 << m) - 1
    dead: set[int] = set()
    nodes = 0

    def dfs(used_mask: int, order: list[int]) -> list[int] | None:
        nonlocal nodes
        if used_mask == full:
            return order
        if used_mask in dead:
            return None
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(f"shelling search exceeded {budget} nodes")
        used = [facets[i] for i in order]
        top = max(sizes[i] for i in range(m) if not used_mask >> i & 1)
        for i in range(m):
            if used_mask >> i & 1 or sizes[i] != top:
                continue
            if _shelling_step_ok(facets[i], used):
                got = dfs(used_mask | (1 << i), order + [i])
                if got is not None:
                    return got
        dead.add(used_mask)
        return None

    found = dfs(0, [])
    if found is None:
        return False, None
    return True, [facets[i] for i in found]


# ---------------------------------------------------------------------------
# f- and h-triangles


@dataclass(frozen=True)
class FHTriangle:
    """``f[i][j]``: faces of size ``j`` whose largest containing facet has size ``i``."""

    f: tuple[tuple[int, ...], ...]
    h: tuple[tuple[int, ...], ...]

    def has_negative(self) -> bool:
        return any(x < 0 for row in self.h for x in row)


def fh_triangle(d: SimplicialComplex) -> FHTriangle:
    if d.is_void:
        return FHTriangle((), ())
    top = d.dim + 1
    f = [[0] * (i + 1) for i in range(top + 1)]
    for s in d.faces():
        deg = max(popcount(g) for g in d.facets if g & s == s)
        f[deg][popcount(s)] += 1
    h = []
    for i in range(top + 1):
        row = []
        for j in range(i + 1):
            row.append(sum((-1) ** (j - k) * comb(i - k, j - k) * f[i][k] for k in range(j + 1)))
        h.append(tuple(row))
    return FHTriangle(tuple(tuple(r) for r in f), tuple(h))


# ---------------------------------------------------------------------------
# umbrella


def is_shellable(
    d: SimplicialComplex,
    audit: bool = False,
    memo: dict | None = None,
    budget: int | None = None,
) -> bool:
    """Shellability via the h-triangle prefilter and dim-decomposability.

    With ``audit`` the shelling search runs as well and any disagreement
    raises :class:`AuditMismatch`.  Exceeding ``budget`` raises
    :class:`BudgetExceeded`.
    """
    if _leaf_kind(d) is not None:
        return True
    if fh_triangle(d).has_negative():
        verdict = False
    else:
        verdict = is_k_decomposable(d, d.dim, memo, certificate=False, budget=budget)[0]
    if audit:
        searched, order = is_shellable_search(d, budget)
        if searched != verdict:
            raise AuditMismatch(f"search={searched} decomposability={verdict} for {d!r}")
        if order is not None and not is_shelling_order(order):
            raise AuditMismatch(f"search returned an invalid shelling for {d!r}")
    return verdict
