import random
from itertools import permutations

from hypothesis import given, settings
from hypothesis import strategies as st

from clutterkit.canonical import (
    are_isomorphic,
    canonical_clutter,
    canonical_form,
    canonical_key,
    key_to_clutter,
    relabel,
)
from clutterkit.core import Clutter
from clutterkit.enumeration import all_antichains
from clutterkit.families import make_cyclic_uniform

from conftest import cl, clutters


def iso_by_relabeling(a, b):
    if a.n != b.n:
        return False
    target = set(b.circuits)
    return any(set(relabel(a, p).circuits) == target for p in permutations(range(a.n)))


@given(clutters(max_n=8), st.randoms(use_true_random=False))
@settings(max_examples=200)
def test_key_invariant_under_relabeling(c, rnd):
    perm = list(range(c.n))
    rnd.shuffle(perm)
    assert canonical_key(relabel(c, perm)) == canonical_key(c)


@given(clutters(max_n=8))
def test_canonical_form_perm_reaches_form(c):
    masks, perm = canonical_form(c)
    assert tuple(sorted(relabel(c, perm).circuits, reverse=True)) == masks


@given(clutters(max_n=8))
def test_key_round_trip(c):
    assert key_to_clutter(canonical_key(c)) == canonical_clutter(c)
    assert are_isomorphic(canonical_clutter(c), c)


def test_cycle_versus_path():
    assert canonical_key(make_cyclic_uniform(4, 2)) != canonical_key(cl("12, 23, 34"))


def test_ground_size_is_part_of_key():
    assert canonical_key(Clutter(3, (0b11,))) != canonical_key(Clutter(4, (0b11,)))


def test_key_is_complete_invariant_exhaustive_small():
    """Keys agree exactly when an explicit relabeling exists (all antichains, n <= 4)."""
    rng = random.Random(7)
    for n in range(5):
        cs = [Clutter(n, a) for a in all_antichains(n)]
        by_key = {}
        for c in cs:
            by_key.setdefault(canonical_key(c), []).append(c)
        # within a class every member is an explicit relabeling of the first
        for members_ in by_key.values():
            for c in members_[1:]:
                assert iso_by_relabeling(members_[0], c)
        # across classes no relabeling exists
        reps = [v[0] for v in by_key.values()]
        pairs = [(a, b) for i, a in enumerate(reps) for b in reps[i + 1 :]]
        if len(pairs) > 3000:
            pairs = rng.sample(pairs, 3000)
        for a, b in pairs:
            assert not iso_by_relabeling(a, b)


def test_general_path_matches_for_seven_and_eight():
    c = make_cyclic_uniform(8, 3)
    assert canonical_key(relabel(c, [3, 1, 7, 0, 2, 6, 5, 4])) == canonical_key(c)
    assert canonical_key(make_cyclic_uniform(7, 2)) != canonical_key(make_cyclic_uniform(7, 3))
