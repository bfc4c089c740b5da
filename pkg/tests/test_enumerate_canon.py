import itertools
import random

import networkx as nx
import pytest

from alphaspec.graph import Graph, complement, complete, cycle, empty, path, star, to_graph6, parse_graph6
from alphaspec.scan.canon import automorphism_orbits, canonical_form, canonical_labelling, is_isomorphic
from alphaspec.scan.enumerate import (
    KNOWN_COUNTS,
    EnumerationRangeError,
    enumerate_graphs,
    enumerate_regular,
    load_catalog,
)

from conftest import random_graph


def _atlas(n):
    return [Graph.from_edges(n, g.edges()) for g in nx.graph_atlas_g() if g.number_of_nodes() == n]


def test_canonical_form_examples():
    p4 = path(4)
    forms = {canonical_form(p4.relabel(perm)) for perm in itertools.permutations(range(4))}
    assert len(forms) == 1
    assert canonical_form(star(4)) != canonical_form(p4)
    assert len({canonical_form(g) for g in _atlas(4)}) == 11


def test_canonical_form_random_relabellings():
    r = random.Random(31)
    for _ in range(300):
        n = r.randint(1, 6)
        g = random_graph(n, r.random(), r)
        perm = list(range(n))
        r.shuffle(perm)
        assert canonical_form(g) == canonical_form(g.relabel(perm))


def test_canonical_form_separates_atlas():
    for n in range(1, 8):
        graphs = _atlas(n)
        assert len({canonical_form(g) for g in graphs}) == len(graphs)


def test_canonical_on_symmetric_graphs():
    petersen = Graph.from_edges(10, nx.petersen_graph().edges())
    assert automorphism_orbits(petersen) == [0] * 10
    assert len(set(automorphism_orbits(path(5)))) == 3
    assert is_isomorphic(complement(cycle(5)), cycle(5))
    for g in (empty(12), complete(12), cycle(12)):
        assert canonical_labelling(g).generators


def test_enumeration_counts_small():
    for n in range(1, 9):
        assert len(enumerate_graphs(n)) == KNOWN_COUNTS[n]
    assert len(enumerate_graphs(4)) == 11 and len(enumerate_graphs(1)) == 1


def test_enumeration_matches_external_catalog():
    # networkx's atlas is an independently generated catalog (n <= 7),
    # ingested through graph6 to exercise the codec as well
    for n in range(1, 8):
        ext = {canonical_form(parse_graph6(to_graph6(g))) for g in _atlas(n)}
        ours = {canonical_form(g) for g in enumerate_graphs(n)}
        assert ours == ext


def test_enumeration_n8_pairwise_distinct():
    forms = {canonical_form(g) for g in enumerate_graphs(8)}
    assert len(forms) == 12346


def test_enumeration_range():
    with pytest.raises(EnumerationRangeError):
        enumerate_graphs(0)
    with pytest.raises(EnumerationRangeError):
        enumerate_graphs(11)


def test_cache_roundtrip(tmp_path):
    from alphaspec.scan import enumerate as E
    E._enumerate_cached.cache_clear()
    gs = enumerate_graphs(6, cache_dir=tmp_path)
    assert (tmp_path / "graphs6.g6").exists()
    assert load_catalog([tmp_path / "graphs6.g6"]) == gs
    E._enumerate_cached.cache_clear()
    assert enumerate_graphs(6, cache_dir=tmp_path) == gs


def test_parallel_enumeration_same_classes():
    from alphaspec.scan import enumerate as E
    E._enumerate_cached.cache_clear()
    a = {canonical_form(g) for g in enumerate_graphs(7, jobs=2)}
    assert a == {canonical_form(g) for g in enumerate_graphs(7)}


def test_regular_enumeration():
    # counts of r-regular graphs (connected or not) on n vertices
    assert [len(enumerate_regular(8, r)) for r in range(8)] == [1, 1, 3, 6, 6, 3, 1, 1]
    assert len(enumerate_regular(10, 3)) == 21
    assert enumerate_regular(5, 3) == []
    for n in range(1, 8):
        want = sum(1 for g in enumerate_graphs(n) if len(set(g.degrees())) == 1)
        assert sum(len(enumerate_regular(n, r)) for r in range(n)) == want


@pytest.mark.slow
def test_enumeration_count_n9():
    assert len(enumerate_graphs(9, jobs=4)) == 274668
