import random
from itertools import combinations

import pytest

from cbgraph.farey import (
    ArcSlope,
    Slope,
    apply_sl2,
    enumerate_slopes,
    farey_adjacent,
    farey_distance,
    intersect_aa,
    intersect_ca,
    intersect_cc,
    mn_constraint_solutions,
    mn_scan_has_large_solution,
    once_intersectors,
)
from oracles import bfs_farey_distance, lattice_aa, lattice_ca, lattice_cc


def test_slope_normalization():
    assert Slope(2, 4) == Slope(1, 2)
    assert Slope(-3, -7) == Slope(3, 7)
    assert Slope(5, 0) == Slope(1, 0)
    assert Slope(-2, 0) == Slope(1, 0)
    assert repr(Slope(-3, 7)) == "-3/7"
    assert Slope.parse("-3/7") == Slope(-3, 7)
    assert Slope.parse("1/0").is_infinity
    with pytest.raises(ValueError):
        Slope.parse("2/4")
    with pytest.raises(ValueError):
        Slope(0, 0)


def test_slope_arc_distinct_types():
    assert Slope(1, 2) != ArcSlope(1, 2)
    assert len({Slope(1, 2), ArcSlope(1, 2)}) == 2


def test_intersect_cc_examples():
    assert intersect_cc(Slope(1, 0), Slope(0, 1)) == 1
    assert intersect_cc(Slope(3, 5), Slope(3, 5)) == 0
    assert intersect_cc(Slope(1, 2), Slope(3, 5)) == 1  # lattice oracle: 1
    assert lattice_cc(Slope(1, 2), Slope(3, 5)) == 1


def test_intersect_ca_examples():
    assert intersect_ca(Slope(1, 0), ArcSlope(0, 1)) == 1
    assert intersect_ca(Slope(4, 7), ArcSlope(4, 7)) == 0
    assert intersect_ca(Slope(1, 2), ArcSlope(1, 1)) == 1
    assert lattice_ca(Slope(1, 2), ArcSlope(1, 1)) == 1


def test_intersect_aa_examples():
    assert intersect_aa(ArcSlope(0, 1), ArcSlope(1, 0)) == 0
    assert lattice_aa(ArcSlope(0, 1), ArcSlope(1, 0)) == 0
    assert intersect_aa(ArcSlope(5, 3), ArcSlope(5, 3)) == 0
    assert intersect_aa(ArcSlope(0, 1), ArcSlope(2, 1)) == 1
    assert lattice_aa(ArcSlope(0, 1), ArcSlope(2, 1)) == 1


def test_lattice_oracle_agreement_small():
    slopes = sorted(enumerate_slopes(6))
    for a in slopes:
        for b in slopes:
            assert intersect_cc(a, b) == lattice_cc(a, b), (a, b)
    arcs = [ArcSlope(s.p, s.q) for s in enumerate_slopes(4)]
    for c in sorted(enumerate_slopes(4)):
        for arc in arcs:
            assert intersect_ca(c, arc) == lattice_ca(c, arc), (c, arc)
    for a1 in arcs:
        for a2 in arcs:
            assert intersect_aa(a1, a2) == lattice_aa(a1, a2), (a1, a2)


def test_intersect_cc_symmetric_zero_diagonal():
    slopes = sorted(enumerate_slopes(8))
    for a in slopes:
        for b in slopes:
            i = intersect_cc(a, b)
            assert i == intersect_cc(b, a)
            assert i >= 0
            assert (i == 0) == (a == b)


def test_farey_adjacent_examples():
    assert farey_adjacent(Slope(0, 1), Slope(1, 0))
    assert farey_adjacent(Slope(0, 1), Slope(1, 2))
    assert not farey_adjacent(Slope(1, 0), Slope(1, 2))


def test_farey_graph_connected_at_desk_scale():
    for h in (1, 2, 4):
        slopes = enumerate_slopes(h)
        base = Slope(0, 1)
        for s in slopes:
            # Reachability is witnessed by a finite distance.
            assert farey_distance(base, s) < 100


def test_farey_distance_examples():
    assert farey_distance(Slope(3, 7), Slope(3, 7)) == 0
    assert farey_distance(Slope(0, 1), Slope(1, 0)) == 1
    assert farey_distance(Slope(1, 0), Slope(5, 7)) == bfs_farey_distance(
        Slope(1, 0), Slope(5, 7)
    )


def test_farey_distance_matches_bfs():
    slopes = sorted(enumerate_slopes(5))
    for a in slopes:
        for b in slopes:
            if not b < a:
                assert farey_distance(a, b) == bfs_farey_distance(a, b), (a, b)


def test_farey_distance_metric_axioms():
    slopes = sorted(enumerate_slopes(8))
    rng = random.Random(7)
    sample = rng.sample(slopes, 24)
    d = {(a, b): farey_distance(a, b) for a in sample for b in sample}
    for a in sample:
        assert d[a, a] == 0
    for a, b in combinations(sample, 2):
        assert d[a, b] == d[b, a]
        assert d[a, b] >= 1
    for a, b, c in combinations(sample, 3):
        assert d[a, c] <= d[a, b] + d[b, c]


def _random_sl2_word(rng, length):
    gens = [(1, 1, 0, 1), (1, -1, 0, 1), (1, 0, 1, 1), (1, 0, -1, 1)]
    m = (1, 0, 0, 1)
    for _ in range(length):
        a, b, c, d = m
        e, f, g, h = rng.choice(gens)
        m = (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    return m


def test_sl2_action_preserves_intersections_and_distance():
    rng = random.Random(11)
    slopes = sorted(enumerate_slopes(4))
    for _ in range(40):
        m = _random_sl2_word(rng, rng.randint(1, 12))
        a, b = rng.choice(slopes), rng.choice(slopes)
        ma, mb = apply_sl2(m, a), apply_sl2(m, b)
        assert intersect_cc(ma, mb) == intersect_cc(a, b)
        arc = ArcSlope(b.p, b.q)
        assert intersect_ca(ma, apply_sl2(m, arc)) == intersect_ca(a, arc)
        assert farey_distance(ma, mb) == farey_distance(a, b)


def test_enumerate_slopes():
    assert enumerate_slopes(1) == {Slope(1, 0), Slope(0, 1), Slope(1, 1), Slope(-1, 1)}
    from math import gcd

    expected = {Slope(1, 0)}
    for q in range(1, 3):
        for p in range(-2, 3):
            if gcd(abs(p), q) == 1:
                expected.add(Slope(p, q))
    assert enumerate_slopes(2) == expected
    for s in enumerate_slopes(3):
        assert gcd(abs(s.p), abs(s.q)) == 1
    with pytest.raises(ValueError):
        enumerate_slopes(0)


def test_once_intersectors_census_example():
    got = once_intersectors(Slope(1, 0), ArcSlope(2, 1), max_height=12)
    assert got == {Slope(2, 1), Slope(1, 1), Slope(3, 1)}


def test_once_intersectors_matches_scan():
    got = once_intersectors(Slope(1, 0), ArcSlope(1, 2), max_height=50)
    scan = {
        c
        for c in enumerate_slopes(50)
        if intersect_cc(Slope(1, 0), c) == 1
        and intersect_ca(c, ArcSlope(1, 2)) <= 1
    }
    assert got == scan


def test_once_intersectors_cardinality_bound():
    rng = random.Random(3)
    slopes = sorted(enumerate_slopes(6))
    checked = 0
    for _ in range(1000):
        a = rng.choice(slopes)
        beta = ArcSlope(*rng.choice([(s.p, s.q) for s in slopes]))
        if intersect_ca(a, beta) == 0:
            continue
        got = once_intersectors(a, beta, max_height=30)
        assert len(got) <= 3, (a, beta, got)
        checked += 1
    assert checked > 900


def test_once_intersectors_rejects_degenerate_normalization():
    with pytest.raises(ValueError):
        once_intersectors(Slope(1, 0), ArcSlope(1, 0), max_height=5)


def test_mn_constraint_solutions():
    assert mn_constraint_solutions() == {(2, 1), (-2, -1)}
    assert mn_constraint_solutions(scan=100) == {(2, 1), (-2, -1)}
    assert not mn_scan_has_large_solution(10**6)
    m, n = 2, 1
    assert abs(m * n - 1) == 1
