import pytest

from clutterkit.cache import ChordalityCache
from clutterkit.canonical import are_isomorphic, canonical_key
from clutterkit.core import Clutter, ClutterError, independence_complex
from clutterkit.decomposability import clear_memos
from clutterkit.enumeration import (
    Caches,
    all_antichains,
    classify,
    count_classes,
    enumerate_clutters,
    forbidden_minors,
    is_c5_only_nonchordal,
    is_forbidden_minor_to_chordality,
    is_forbidden_subclutter,
    obstruction_class,
    obstruction_class_of_clutter,
    run_pipeline,
)
from clutterkit.families import make_cyclic_uniform
from clutterkit.reference import catalog_clutter

from conftest import cl, cx


def oracle_count(n):
    return len({canonical_key(Clutter(n, a)) for a in all_antichains(n)})


@pytest.mark.parametrize("n", range(6))
def test_counts_match_oracle(n):
    assert count_classes(n) == oracle_count(n)


def test_small_counts():
    assert [count_classes(n) for n in range(6)] == [2, 3, 5, 10, 30, 210]


def test_n1_classes():
    assert set(enumerate_clutters(1)) == {Clutter(1), Clutter(1, (0,)), Clutter(1, (1,))}


def test_sorted_and_canonical():
    reps = enumerate_clutters(4)
    keys = [canonical_key(c) for c in reps]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_range():
    with pytest.raises(ClutterError):
        enumerate_clutters(7)


class TestForbidden:
    def test_c5_and_z53(self):
        assert is_forbidden_minor_to_chordality(make_cyclic_uniform(5, 2))
        assert is_forbidden_minor_to_chordality(make_cyclic_uniform(5, 3))

    def test_c6(self):
        assert is_forbidden_minor_to_chordality(cl("12, 13, 24, 35, 46, 56"))

    def test_cyclic_uniform_forbidden_subclutters(self):
        for n in range(4, 7):
            for k in range(2, n - 1):
                assert is_forbidden_subclutter(make_cyclic_uniform(n, k))

    def test_c4(self):
        assert is_forbidden_subclutter(make_cyclic_uniform(4, 2))

    def test_z63_subclutter_not_minor(self):
        z = make_cyclic_uniform(6, 3)
        assert is_forbidden_subclutter(z)
        assert not is_forbidden_minor_to_chordality(z)

    def test_five_vertices(self):
        found = forbidden_minors(5)
        assert len(found) == 2
        assert {canonical_key(c) for c in found} == {
            canonical_key(make_cyclic_uniform(5, 2)),
            canonical_key(make_cyclic_uniform(5, 3)),
        }

    def test_minor_is_subclutter(self):
        cache = ChordalityCache()
        for n in range(1, 6):
            for c in enumerate_clutters(n):
                if is_forbidden_minor_to_chordality(c, cache):
                    assert is_forbidden_subclutter(c, cache)

    def test_c5_only_needs_six_vertices(self):
        assert not is_c5_only_nonchordal(make_cyclic_uniform(5, 2))


class TestObstructions:
    def test_d_but_not_dc(self):
        assert obstruction_class(cx("123, 345, 15")) == {"d"}

    def test_z53(self):
        assert obstruction_class_of_clutter(make_cyclic_uniform(5, 3)) == {"d", "c", "dc"}

    def test_shellable_has_none(self):
        assert obstruction_class_of_clutter(make_cyclic_uniform(5, 2)) == frozenset()

    def test_catalog_rows_are_dc(self):
        caches = Caches()
        for line in range(1, 22):
            assert "dc" in obstruction_class_of_clutter(catalog_clutter(line), caches)


class TestClassify:
    def test_c5(self):
        rec = classify(make_cyclic_uniform(5, 2))
        assert rec.forbidden_minor_to_chordality and rec.shellable
        assert rec.obstruction_class == []

    def test_z53(self):
        rec = classify(make_cyclic_uniform(5, 3))
        assert rec.forbidden_minor_to_chordality and rec.shellable is False
        assert "dc" in rec.obstruction_class
        assert rec.top_skeleton_profile == "S1"
        assert rec.h_negative

    def test_mixed_chordal(self):
        rec = classify(cl("123, 145, 2345, 236, 456"))
        assert rec.chordal and rec.shellable and rec.sequentially_cm

    def test_budget_gives_undecided(self):
        clear_memos()
        caches = Caches(budget=0)
        rec = classify(make_cyclic_uniform(5, 2), caches)
        assert rec.shellable is None
        assert caches.undecided == 1


def test_pipeline_five():
    records = []
    s = run_pipeline(5, records.append, Caches(audit=True))
    assert s.total == 210 == len(records)
    assert s.forbidden_minors == 2
    assert s.forbidden_minors_shellable == 1
    assert s.dc_obstructions == 1
    assert s.undecided == 0


def test_pipeline_covering_universe():
    s = run_pipeline(4, None, Caches(), universe="covering")
    assert s.total == s.covering_total < count_classes(4)


def test_pipeline_rejects_bad_universe():
    with pytest.raises(ValueError):
        run_pipeline(3, None, universe="bogus")


def test_all_antichains_small():
    assert len(list(all_antichains(2))) == 6
    assert are_isomorphic(Clutter(2, (1,)), Clutter(2, (2,)))
    assert independence_complex(Clutter(2, (3,))).facets == (1, 2)
