"""Smoke tests for the native module: one end-to-end touch per operation."""
import math
import os
import sys

import pytest

mod_dir = os.environ.get("UNAVOIDABLE_MODULE_DIR")
if mod_dir:
    sys.path.insert(0, mod_dir)

u = pytest.importorskip("_unavoidable")


def test_coloring_roundtrip():
    g = u.random_coloring(8, 14, 7)
    assert g.n == 8
    d = u.color_density(g, u.Color.RED)
    assert (d.count, d.total) == (14, 28)
    assert u.parse_coloring(u.serialize_coloring(g)) == g


def test_tournament_roundtrip_and_triangles():
    t = u.make_dk(3)
    assert t.n == 9
    assert u.count_directed_triangles(t) == 27
    assert u.parse_tournament(u.serialize_tournament(t)) == t
    assert sum(u.triangles_through_vertex(t, v) for v in range(9)) == 81


def test_distance_and_bounds():
    t = u.make_dk(2)
    assert u.transitivity_distance_exact(t) == 4
    assert u.packing_lower_bound(t) <= 4 <= u.upper_bound_distance(t)
    big = u.random_tournament(25, 1)
    with pytest.raises(u.BudgetError):
        u.transitivity_distance_exact(big)


def test_transitivize_certificate():
    t = u.random_tournament(40, 9)
    r = u.transitivize(t)
    tri = u.count_directed_triangles(t)
    assert r["triangles"] == tri
    assert len(r["reversed_edges"]) <= 27 * math.sqrt(40 * tri) + 1e-9
    assert sorted(r["order"]) == list(range(40))
    assert r["certified_bound"] == pytest.approx(27 * math.sqrt(40 * tri))


def test_find_fk_agrees_with_oracle():
    g = u.random_coloring(8, 14, 21)
    w = u.find_fk(g, 2, u.Ratio(1, 10), seed=5)
    oracle = u.fk_oracle(g, 2)
    assert (w is None) == (oracle is None)
    if w is not None:
        assert u.verify_fk_witness(g, w)


def test_find_dk_on_construction():
    t = u.make_dk(2)
    w = u.find_dk(t, 2, seed=5)
    assert w is not None
    assert u.verify_dk_witness(t, w)


def test_greedy_searches():
    g = u.random_coloring(16, 60, 3)
    hit = u.find_mono_clique(g, 2)
    assert hit is not None
    verts, _color = hit
    assert len(verts) == 2
    t = u.random_tournament(16, 3)
    order = u.find_transitive_subtournament(t, 5)
    assert order is not None and len(order) == 5


def test_parse_error_maps_to_python():
    with pytest.raises(u.ParseError):
        u.parse_coloring("garbage")
