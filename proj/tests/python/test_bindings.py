import json
import math

import pytest

import twistcode as tc


def test_linear_algebra():
    assert tc.rank(["110", "011", "101"], 3) == 2
    assert tc.kernel_basis(["111"], 3) == ["110", "101"]
    reduced, pivots = tc.row_reduce(["11", "11"], 2)
    assert reduced == ["11", "00"]
    assert pivots == [0]
    assert tc.rank([], 4) == 0


def test_codes():
    h = tc.codes.hamming_7_4()
    assert (h.length, h.dimension) == (7, 4)
    assert h.rate() == "4/7"
    assert h.min_distance() == 3
    assert h.relative_distance() == "3/7"
    assert h.contains("0000000")
    assert tc.codes.repetition(5).min_distance(workers=4) == 5
    with pytest.raises(tc.DomainError):
        tc.codes.zero(4).min_distance()
    code = tc.LinearCode.from_parity_check(["1111"], 4)
    assert code.dimension == 3


def test_graphs():
    k8 = tc.graphs.complete(8)
    assert k8.edge_count == 28
    assert tc.second_eigenvalue(k8) == pytest.approx(-1.0, abs=1e-9)
    assert tc.second_eigenvalue(tc.graphs.cycle(7)) == pytest.approx(2 * math.cos(2 * math.pi / 7), abs=1e-9)
    assert tc.girth(tc.graphs.petersen()) == 5
    assert tc.girth(tc.graphs.path(4)) is None
    g = tc.Graph(3, [(2, 1), (0, 1)])
    assert g.edges == [(0, 1), (1, 2)]
    assert g.neighbors(1) == [0, 2]
    assert tc.Graph.from_text(g.to_text()).edges == g.edges
    with pytest.raises(tc.ValidationError):
        tc.Graph(2, [(0, 0)])
    with pytest.raises(tc.ParseError):
        tc.Graph.from_text("p 2 1\ne 1 0\n")
    a = tc.graphs.random_regular(16, 3, seed=7)
    b = tc.graphs.random_regular(16, 3, seed=7)
    assert a.edges == b.edges
    assert tc.regular_degree(a) == 3


def test_homology():
    sphere = tc.skeleton_complex(4, 2)
    assert tc.homology_dimension(sphere, 2) == 1
    assert tc.homology_dimension(sphere, 1) == 0
    code = tc.homology_code(sphere, 2)
    assert (code.length, code.dimension, code.min_distance()) == (4, 1, 4)
    x = tc.random_complex(9, 0.6, 0.5, seed=3)
    for k in range(x.dimension + 1):
        assert tc.homology_dimension(x, k, m=2, gauge_seed=11) == tc.homology_dimension(x, k, m=2)


def test_graph_code_and_proposition():
    k4 = tc.graphs.complete(4)
    inst = tc.synthesize(k4, "parity")
    assert inst.code.dimension == 3
    verdict = tc.verify_proposition(inst)
    assert verdict["holds"]
    assert verdict["code_dimension"] == verdict["homology_dimension"] == 3
    assert verdict["witness"] is None

    triangle = ["0"] * 6
    for u, v in [(0, 1), (1, 2), (0, 2)]:
        triangle[k4.edges.index((u, v))] = "1"
    assert all(s == "0" for s in inst.boundary_evaluate("".join(triangle)))

    explicit = tc.build_graph_code(k4, [(["111"], 3)] * 4)
    assert explicit.code.dimension == 3
    with pytest.raises(tc.ValidationError, match="vertex 0"):
        tc.build_graph_code(k4, [(["1111"], 4)] * 4)


def test_report():
    k8 = tc.graphs.complete(8)
    r = tc.report(tc.synthesize(k8, "hamming74"))
    assert list(r)[:3] == ["N", "dimension", "rate"]
    assert r["N"] == 28
    assert r["rate_bound"] == "1/7"
    assert r["distance_bound"] == "1/4"
    assert r["distance_bound_exact"] is True
    assert r["proposition"]["holds"] is True
    assert r["distance"] == 6
    text = tc.report_json(tc.synthesize(k8, "hamming74"), workers=4)
    assert json.loads(text) == r


def test_bounds():
    assert tc.rate_bound(1, 2) == "0/1"
    assert tc.rate_bound(4, 7) == "1/7"
    assert tc.distance_bound(3, 7, -1, 7) == "1/4"
    assert tc.distance_bound_float(3 / 7, -1.0, 7) == pytest.approx(0.25, abs=1e-12)
    with pytest.raises(tc.ValidationError):
        tc.distance_bound(1, 2, 3, 3)
