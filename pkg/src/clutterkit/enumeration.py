"""Isomorph-free generation of clutters and the obstruction classification.

Generation grows antichains one circuit at a time.  Removing any circuit of
an antichain leaves an antichain, so every isomorphism class with ``m + 1``
circuits is an extension of some class with ``m`` circuits; extending one
representative per class and deduplicating by canonical form therefore
reaches every class exactly once.
"""

from __future__ import annotations

import logging
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator

import numpy as np

from .cache import UNDECIDED, ChordalityCache, VerdictCache
from .canonical import _unpack_word, _weight_table, canonical_key
from .core import (
    Clutter,
    ClutterError,
    contract_vertex,
    delete_vertex,
    independence_complex,
    induced_subclutter,
    minors_one_step,
)
from .decomposability import BudgetExceeded, fh_triangle, is_shellable
from .families import make_cyclic_uniform
from .homology import is_sequentially_cm, sphere_signature, top_skeleton
from .structure import _chordal, has_simplicial_vertex

log = logging.getLogger(__name__)

MAX_ENUM_N = 6


# ---------------------------------------------------------------------------
# generation


def _addable(circuits: tuple[int, ...], ground: int) -> list[int]:
    out = []
    for s in range(ground + 1):
        ok = True
        for e in circuits:
            inter = e & s
            if inter == e or inter == s:
                ok = False
                break
        if ok:
            out.append(s)
    return out


def enumerate_clutters(n: int) -> list[Clutter]:
    """One canonical representative per isomorphism class of clutters on ``n``
    vertices (degenerate classes included), sorted by canonical key."""
    if not 0 <= n <= MAX_ENUM_N:
        raise ClutterError(f"exhaustive enumeration supports 0 <= n <= {MAX_ENUM_N}")
    if n == 0:
        return [Clutter(0, ()), Clutter(0, (0,))]
    ground = (1 << n) - 1
    weights = _weight_table(n)
    found: set[tuple[int, ...]] = {()}
    level: list[tuple[int, ...]] = [()]
    while level:
        nxt: set[tuple[int, ...]] = set()
        for circ in level:
            cand = _addable(circ, ground)
            if not cand:
                continue
            if circ:
                base = np.bitwise_or.reduce(weights[:, list(circ)], axis=1)
                words = (base[:, None] | weights[:, cand]).min(axis=0)
            else:
                words = weights[:, cand].min(axis=0)
            for w in np.unique(words):
                nxt.add(_unpack_word(int(w)))
        nxt -= found
        found |= nxt
        level = sorted(nxt)
    reps = [Clutter(n, masks) for masks in found]
    reps.sort(key=canonical_key)
    return reps


def iter_clutters(n: int) -> Iterator[Clutter]:
    yield from enumerate_clutters(n)


def count_classes(n: int) -> int:
    return len(enumerate_clutters(n))


# ---------------------------------------------------------------------------
# classification


C5_KEY = canonical_key(make_cyclic_uniform(5, 2))


@dataclass
class Caches:
    """Memo tables shared across one classification run."""

    chordal: ChordalityCache = field(default_factory=ChordalityCache)
    shellable: VerdictCache = field(default_factory=lambda: VerdictCache("shellable"))
    minors_shellable: dict = field(default_factory=dict)
    audit: bool = False
    budget: int | None = None
    coefficients: str = "rational"
    undecided: int = 0


def is_forbidden_minor_to_chordality(c: Clutter, cache: ChordalityCache | None = None) -> bool:
    """Not chordal, while every one-step minor is chordal."""
    cache = cache if cache is not None else ChordalityCache()
    if _chordal(c, cache):
        return False
    return all(_chordal(m, cache) for m in minors_one_step(c))


def is_forbidden_subclutter(c: Clutter, cache: ChordalityCache | None = None) -> bool:
    """Not chordal, while every one-vertex deletion is chordal."""
    cache = cache if cache is not None else ChordalityCache()
    if _chordal(c, cache):
        return False
    return all(_chordal(delete_vertex(c, v), cache) for v in range(c.n))


def is_c5_only_nonchordal(c: Clutter, cache: ChordalityCache | None = None) -> bool:
    """No simplicial vertex, and every non-chordal proper minor is a 5-cycle
    (with at least one such minor).

    These are the minimal non-chordal clutters once a 5-cycle minor is allowed.
    """
    cache = cache if cache is not None else ChordalityCache()
    if c.n < 6 or has_simplicial_vertex(c):
        return False
    saw_c5 = False
    for m in minors_one_step(c):
        if _chordal(m, cache):
            continue
        if canonical_key(m) != C5_KEY:
            return False
        saw_c5 = True
    return saw_c5


def shellable_clutter(c: Clutter, caches: Caches) -> bool | None:
    """Shellability of ``I(c)``, memoised by the key of ``c``; ``None`` if undecided."""
    key = canonical_key(c)
    hit = caches.shellable.get(key)
    if hit is not None:
        return None if hit == UNDECIDED else bool(hit)
    try:
        ok = is_shellable(independence_complex(c), audit=caches.audit, budget=caches.budget)
    except BudgetExceeded:
        caches.shellable.put(key, UNDECIDED)
        caches.undecided += 1
        return None
    caches.shellable.put(key, ok)
    return ok


def _all_proper_minors_shellable(c: Clutter, caches: Caches) -> bool | None:
    if c.n == 0:
        return True
    key = canonical_key(c)
    if key in caches.minors_shellable:
        return caches.minors_shellable[key]
    result: bool | None = True
    for m in minors_one_step(c):
        s = shellable_clutter(m, caches)
        if s is False:
            result = False
            break
        sub = _all_proper_minors_shellable(m, caches)
        if sub is False:
            result = False
            break
        if s is None or sub is None:
            result = None
    caches.minors_shellable[key] = result
    return result


def _all_induced_shellable(c: Clutter, caches: Caches) -> bool | None:
    result: bool | None = True
    for keep in range(c.ground):
        s = shellable_clutter(induced_subclutter(c, keep), caches)
        if s is False:
            return False
        if s is None:
            result = None
    return result


def _all_links_shellable(c: Clutter, caches: Caches) -> bool | None:
    result: bool | None = True
    for v in range(c.n):
        s = shellable_clutter(contract_vertex(c, v), caches)
        if s is False:
            return False
        if s is None:
            result = None
    return result


def obstruction_class_of_clutter(c: Clutter, caches: Caches | None = None) -> frozenset[str]:
    """Obstruction classes of ``I(c)``: ``d``, ``c`` and ``dc``."""
    caches = caches if caches is not None else Caches()
    if c.n == 0 or shellable_clutter(c, caches) is not False:
        return frozenset()
    out = set()
    if _all_induced_shellable(c, caches):
        out.add("d")
    if _all_links_shellable(c, caches):
        out.add("c")
    if _all_proper_minors_shellable(c, caches):
        out.add("dc")
    return frozenset(out)


def obstruction_class(d, caches: Caches | None = None) -> frozenset[str]:
    """Obstruction classes (``d``, ``c``, ``dc``) of a simplicial complex."""
    from .core import nonface_clutter

    return obstruction_class_of_clutter(nonface_clutter(d), caches)


@dataclass
class ClassificationRecord:
    key: str
    n: int
    circuits: list[int]
    chordal: bool
    forbidden_minor_to_chordality: bool
    forbidden_subclutter: bool
    c5_only_nonchordal_minor: bool
    shellable: bool | None
    sequentially_cm: bool
    obstruction_class: list[str]
    top_skeleton_profile: str
    h_negative: bool
    has_simplicial_vertex: bool

    def to_json(self) -> dict:
        return asdict(self)


def classify(c: Clutter, caches: Caches | None = None) -> ClassificationRecord:
    """Compute every verdict for one clutter and its independence complex."""
    caches = caches if caches is not None else Caches()
    key = canonical_key(c)
    ch = _chordal(c, caches.chordal)
    fm = is_forbidden_minor_to_chordality(c, caches.chordal) if c.n else False
    fs = is_forbidden_subclutter(c, caches.chordal) if c.n else False
    c5 = is_c5_only_nonchordal(c, caches.chordal)
    cx = independence_complex(c)
    tri = fh_triangle(cx)
    sh = shellable_clutter(c, caches)
    scm = is_sequentially_cm(cx, caches.coefficients)
    obs = obstruction_class_of_clutter(c, caches) if sh is False else frozenset()
    sig = sphere_signature(top_skeleton(cx), caches.coefficients)
    return ClassificationRecord(
        key=key.hex(),
        n=c.n,
        circuits=list(c.circuits),
        chordal=ch,
        forbidden_minor_to_chordality=fm,
        forbidden_subclutter=fs,
        c5_only_nonchordal_minor=c5,
        shellable=sh,
        sequentially_cm=scm,
        obstruction_class=sorted(obs, key=("d", "c", "dc").index),
        top_skeleton_profile=str(sig),
        h_negative=tri.has_negative(),
        has_simplicial_vertex=has_simplicial_vertex(c),
    )


def covers_ground(c: Clutter) -> bool:
    used = 0
    for e in c.circuits:
        used |= e
    return used == c.ground


@dataclass
class PipelineSummary:
    n: int
    total: int = 0
    chordal: int = 0
    forbidden_minors: int = 0
    forbidden_minors_shellable: int = 0
    forbidden_minors_nonshellable: int = 0
    c5_only: int = 0
    c5_only_shellable: int = 0
    dc_obstructions: int = 0
    undecided: int = 0
    h_anomalies: int = 0
    covering_total: int = 0
    covering_forbidden_minors: int = 0
    covering_c5_only: int = 0
    dc_keys: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def add(self, rec: ClassificationRecord, covering: bool) -> None:
        self.total += 1
        self.chordal += rec.chordal
        if covering:
            self.covering_total += 1
        if rec.forbidden_minor_to_chordality:
            self.forbidden_minors += 1
            self.covering_forbidden_minors += covering
            if rec.shellable:
                self.forbidden_minors_shellable += 1
            elif rec.shellable is False:
                self.forbidden_minors_nonshellable += 1
        if rec.c5_only_nonchordal_minor:
            self.c5_only += 1
            self.covering_c5_only += covering
            self.c5_only_shellable += bool(rec.shellable)
        if "dc" in rec.obstruction_class:
            self.dc_obstructions += 1
            self.dc_keys.append(rec.key)
        if rec.shellable is None:
            self.undecided += 1
        if rec.shellable is False and not rec.h_negative:
            self.h_anomalies += 1

    def rows(self) -> list[tuple[str, int]]:
        return [
            ("n", self.n),
            ("total_classes", self.total),
            ("chordal", self.chordal),
            ("forbidden_minors", self.forbidden_minors),
            ("forbidden_minors_shellable", self.forbidden_minors_shellable),
            ("forbidden_minors_nonshellable", self.forbidden_minors_nonshellable),
            ("c5_only_nonchordal", self.c5_only),
            ("c5_only_nonchordal_shellable", self.c5_only_shellable),
            ("dc_obstructions", self.dc_obstructions),
            ("undecided", self.undecided),
            ("nonshellable_without_negative_h", self.h_anomalies),
            ("covering_total_classes", self.covering_total),
            ("covering_forbidden_minors", self.covering_forbidden_minors),
            ("covering_c5_only_nonchordal", self.covering_c5_only),
        ]


def run_pipeline(
    n: int,
    sink: Callable[[ClassificationRecord], None] | None = None,
    caches: Caches | None = None,
    universe: str = "all",
    progress: bool = False,
) -> PipelineSummary:
    """Classify every isomorphism class on ``n`` vertices, streaming records to ``sink``.

    ``universe="covering"`` restricts the stream to clutters whose circuits
    cover all ``n`` vertices; the summary always reports both counts.
    """
    if universe not in ("all", "covering"):
        raise ValueError("universe must be 'all' or 'covering'")
    caches = caches if caches is not None else Caches()
    t0 = time.perf_counter()
    reps = enumerate_clutters(n)
    log.info("enumerated %d classes on %d vertices in %.1fs", len(reps), n, time.perf_counter() - t0)
    summary = PipelineSummary(n)
    for i, c in enumerate(reps):
        cov = covers_ground(c)
        rec = classify(c, caches)
        if universe == "covering" and not cov:
            continue
        summary.add(rec, cov)
        if sink is not None:
            sink(rec)
        if progress and i % 1000 == 0:
            log.info("classified %d/%d (%.0fs)", i, len(reps), time.perf_counter() - t0)
    summary.seconds = time.perf_counter() - t0
    return summary


def forbidden_minors(n: int, cache: ChordalityCache | None = None) -> list[Clutter]:
    cache = cache if cache is not None else ChordalityCache()
    return [c for c in enumerate_clutters(n) if is_forbidden_minor_to_chordality(c, cache)]


def all_antichains(n: int) -> Iterable[tuple[int, ...]]:
    """Every antichain of subsets of an ``n``-set (no isomorph rejection)."""
    masks = list(range(1 << n))

    def grow(start: int, chosen: list[int]) -> Iterator[tuple[int, ...]]:
        yield tuple(chosen)
        for i in range(start, len(masks)):
            s = masks[i]
            if all(e & s != e and e & s != s for e in chosen):
                chosen.append(s)
                yield from grow(i + 1, chosen)
                chosen.pop()

    return grow(0, [])
