"""Relabeling-invariant keys for clutters.

The key of a clutter on ``n`` vertices is the lexicographically least tuple
of circuit masks, sorted in descending order, over all ``n!`` relabelings,
packed as ``bytes([n, *masks])``.  Comparing two descending-sorted tuples of
the same length lexicographically is the same as comparing the integers
``sum(1 << m for m in masks)``, so for ``n <= 6`` the minimum is found as the
least 64-bit "indicator word" in one vectorised pass over a permutation table.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from .core import Clutter, ClutterError, SimplicialComplex, nonface_clutter

MAX_CANONICAL_N = 8

CanonicalKey = bytes


@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    """``table[p, m]`` is the image of mask ``m`` under the ``p``-th permutation."""
    perms = np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)
    masks = np.arange(1 << n, dtype=np.int64)
    table = np.zeros((perms.shape[0], 1 << n), dtype=np.int64)
    for i in range(n):
        bit = (masks >> i) & 1
        table |= bit[None, :] << perms[:, i : i + 1]
    return table


@lru_cache(maxsize=None)
def _weight_table(n: int) -> np.ndarray:
    """``(1 << table)`` as unsigned 64-bit words, for ``n <= 6``."""
    return np.left_shift(np.uint64(1), _perm_table(n).astype(np.uint64))


def _indicator_min(n: int, circuits: tuple[int, ...]) -> tuple[int, int]:
    """(least indicator word, index of a permutation attaining it)."""
    w = _weight_table(n)[:, list(circuits)]
    words = np.bitwise_or.reduce(w, axis=1)
    p = int(np.argmin(words))
    return int(words[p]), p


def _lex_min(n: int, circuits: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    images = _perm_table(n)[:, list(circuits)]
    images = -np.sort(-images, axis=1)
    rows = np.arange(images.shape[0])
    for col in range(images.shape[1]):
        vals = images[rows, col]
        rows = rows[vals == vals.min()]
        if len(rows) == 1:
            break
    p = int(rows[0])
    return tuple(int(x) for x in images[p]), p


def _unpack_word(word: int) -> tuple[int, ...]:
    out = []
    m = 0
    while word:
        if word & 1:
            out.append(m)
        word >>= 1
        m += 1
    return tuple(reversed(out))


def canonical_form(c: Clutter) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Canonical circuit masks (descending) and a relabeling ``perm`` producing them.

    ``perm[v]`` is the new index of vertex ``v``.
    """
    n = c.n
    if n > MAX_CANONICAL_N:
        raise ClutterError(f"exact canonical form needs n <= {MAX_CANONICAL_N}, got {n}")
    if not c.circuits or n == 0:
        return tuple(c.circuits), tuple(range(n))
    if n <= 6:
        word, p = _indicator_min(n, c.circuits)
        masks = _unpack_word(word)
    else:
        masks, p = _lex_min(n, c.circuits)
    perm = _perms(n)[p]
    return masks, perm


@lru_cache(maxsize=None)
def _perms(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(permutations(range(n)))


def canonical_key(c: Clutter) -> CanonicalKey:
    masks, _ = canonical_form(c)
    return bytes((c.n, *masks))


def canonical_clutter(c: Clutter) -> Clutter:
    masks, _ = canonical_form(c)
    return Clutter(c.n, masks)


def key_to_clutter(key: CanonicalKey) -> Clutter:
    return Clutter(key[0], tuple(key[1:]))


def complex_key(d: SimplicialComplex) -> CanonicalKey:
    """Key of a complex: the key of its non-face clutter."""
    return canonical_key(nonface_clutter(d))


def relabel(c: Clutter, perm: tuple[int, ...] | list[int]) -> Clutter:
    """Apply ``v -> perm[v]`` to every circuit."""
    out = []
    for e in c.circuits:
        m = 0
        v = 0
        while e:
            if e & 1:
                m |= 1 << perm[v]
            e >>= 1
            v += 1
        out.append(m)
    return Clutter(c.n, tuple(out))


def are_isomorphic(a: Clutter, b: Clutter) -> bool:
    return a.n == b.n and canonical_key(a) == canonical_key(b)
