from collections import Counter

import pytest

from oracles import labelled_unicyclic_classes
from unicis.constructions import build_delta, build_omega
from unicis.count import count_cis_oracle
from unicis.enumeration import (
    EnumerationQuery,
    enumerate_unicyclic,
    enumerate_unicyclic_coded,
    enumerate_with_cuts,
    find_extremizers,
    rooted_level_sequences,
)
from unicis.graph import GraphError, canonical_code, canonical_hex, cut_vertices, girth, is_connected

# unicyclic graphs on n = 3..13 vertices up to isomorphism
KNOWN_COUNTS = [1, 2, 5, 13, 33, 89, 240, 657, 1806, 5026, 13999]
# rooted trees on 1..11 vertices
ROOTED_TREES = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842]


@pytest.mark.parametrize("size, expected", list(enumerate(ROOTED_TREES, start=1)))
def test_rooted_tree_counts(size, expected):
    seqs = list(rooted_level_sequences(size))
    assert len(seqs) == expected == len(set(seqs))


@pytest.mark.parametrize("n", range(3, 9))
def test_counts_match_labelled_dedup(n):
    assert len(list(enumerate_unicyclic(EnumerationQuery(n)))) == labelled_unicyclic_classes(n)


@pytest.mark.parametrize("n", range(3, 13))
def test_counts_match_known_sequence(n):
    assert len(enumerate_unicyclic_coded(EnumerationQuery(n))) == KNOWN_COUNTS[n - 3]


def test_small_cases():
    assert len(list(enumerate_unicyclic(EnumerationQuery(3)))) == 1
    assert len(list(enumerate_unicyclic(EnumerationQuery(4)))) == 2
    assert len(list(enumerate_unicyclic(EnumerationQuery(5)))) == 5


@pytest.mark.parametrize("n", range(3, 11))
def test_stream_is_valid_and_unique(n):
    items = enumerate_unicyclic_coded(EnumerationQuery(n))
    codes = [code for code, _ in items]
    assert codes == sorted(codes)
    assert len(set(codes)) == len(codes)
    for code, g in items:
        assert g.n == n and g.m == n and is_connected(g)
        assert canonical_code(g) == code


def test_girth_range_filter():
    q = EnumerationQuery(9, girth_min=4, girth_max=6)
    graphs = list(enumerate_unicyclic(q))
    assert graphs and all(4 <= girth(g) <= 6 for g in graphs)
    full = Counter(girth(g) for g in enumerate_unicyclic(EnumerationQuery(9)))
    assert len(graphs) == full[4] + full[5] + full[6]


@pytest.mark.parametrize("n", range(3, 12))
def test_no_cut_vertices_means_cycle(n):
    graphs = list(enumerate_with_cuts(n, 0))
    assert len(graphs) == 1 and girth(graphs[0]) == n


@pytest.mark.parametrize("n", range(4, 12))
def test_cut_partition(n):
    full = list(enumerate_unicyclic(EnumerationQuery(n)))
    by_c = Counter(len(cut_vertices(g)) for g in full)
    total = 0
    for c in range(0, n - 2):
        part = list(enumerate_with_cuts(n, c))
        assert len(part) == by_c[c]
        assert all(len(cut_vertices(g)) == c for g in part)
        total += len(part)
    assert total == len(full)


def test_class_contains_both_constructions():
    codes = {canonical_code(g) for g in enumerate_with_cuts(6, 2)}
    assert canonical_code(build_delta(6, 2)) in codes
    assert canonical_code(build_omega(6, 2)) in codes


def test_invalid_queries():
    with pytest.raises(GraphError):
        EnumerationQuery(2)
    with pytest.raises(GraphError):
        EnumerationQuery(6, c=4)
    with pytest.raises(GraphError):
        EnumerationQuery(6, girth_min=5, girth_max=4)


def test_parallel_matches_serial():
    q = EnumerationQuery(10, 5)
    assert enumerate_unicyclic_coded(q, workers=1) == enumerate_unicyclic_coded(q, workers=3)


# ---------------------------------------------------------------- extremizers


def test_extremize_6_2():
    rep = find_extremizers(6, 2)
    assert rep.value == 33
    assert rep.optimizers == (canonical_hex(build_omega(6, 2)),)
    assert all(count_cis_oracle(g) == 33 for g in rep.graphs)


def test_extremize_5_1_tie():
    rep = find_extremizers(5, 1)
    assert rep.value == 21
    assert set(rep.optimizers) == {canonical_hex(build_delta(5, 1)), canonical_hex(build_omega(5, 1))}


@pytest.mark.parametrize("n", [5, 8, 11])
def test_extremize_cycle_class(n):
    rep = find_extremizers(n, 0)
    assert rep.count == 1
    assert rep.value == n * (n - 1) + 1


def test_extremize_objectives():
    hi = find_extremizers(8, 3, "max-N")
    lo = find_extremizers(8, 3, "min-N")
    assert lo.value < hi.value
    assert find_extremizers(8, 3, "min-W").value < find_extremizers(8, 3, "max-W").value


def test_extremize_rejects_unknown_objective_and_empty_class():
    with pytest.raises(GraphError):
        find_extremizers(6, 2, "max-Q")
    with pytest.raises(GraphError):
        find_extremizers(3, 1)


def test_extremize_deterministic():
    a = find_extremizers(9, 4, workers=1).to_json()
    b = find_extremizers(9, 4, workers=2).to_json()
    assert a == b
    assert a["value"] == str(find_extremizers(9, 4).value)
