import json
import math

import pytest

import hypower


K4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"


def test_parse_graph():
    g = hypower.parse_graph(K4)
    assert g.n == 4
    assert len(g.edges) == 6
    assert (0, 1) in g.edges


def test_parse_error():
    with pytest.raises(hypower.ParseError):
        hypower.parse_graph("not a graph")


def test_k4_spectrum_contains_cbrt5():
    g = hypower.parse_graph(K4)
    entries = hypower.spectrum(g, 3)
    cbrt5 = 5.0 ** (1.0 / 3.0)
    hits = [e for e in entries if abs(e["lambda"] - cbrt5) < 1e-9]
    assert len(hits) == 1
    assert hits[0]["certified"]
    assert hits[0]["statement1_only"]
    assert hits[0]["residual"] <= 1e-9
    # zero is always present
    assert any(e["lambda"] == 0 for e in entries)


def test_spectrum_json_round_trips():
    g = hypower.parse_graph(K4)
    doc = json.loads(hypower.spectrum_json(g, 3))
    assert doc["k"] == 3 and doc["n"] == 4 and doc["m"] == 6
    assert doc["totalVertices"] == 10
    lambdas = [e["lambda"]["re"] for e in doc["entries"]]
    assert any(abs(v - 5.0 ** (1.0 / 3.0)) < 1e-9 for v in lambdas)


def test_compare_statements():
    g = hypower.parse_graph(K4)
    extra = hypower.compare_statements(g, 3)
    assert any(abs(v - 5.0 ** (1.0 / 3.0)) < 1e-9 for v in extra)
    p3 = hypower.parse_graph("3 2\n0 1\n1 2\n")
    assert hypower.compare_statements(p3, 3) == []


def test_lift_project_round_trip():
    g = hypower.parse_graph(K4)
    k4_minus = [(0, 1, -1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]
    lifted = hypower.lift(g, 3, k4_minus)
    assert abs(lifted["beta"] - math.sqrt(5.0)) < 1e-12
    assert abs(lifted["lambda"] - 5.0 ** (1.0 / 3.0)) < 1e-9
    assert lifted["residual"] <= 1e-9
    assert hypower.residual(g, 3, lifted["lambda"], lifted["x"]) <= 1e-9

    back = hypower.project(g, 3, lifted["lambda"], lifted["x"])
    assert back["support"] == [0, 1, 2, 3]
    assert back["relation_residual"] <= 1e-8
    assert sum(1 for (_, _, s) in back["signed_edges"] if s == -1) % 2 == 1


def test_spectral_radius_identity():
    g = hypower.parse_graph(K4)
    got, expected = hypower.spectral_radius_check(g, 3)
    assert abs(got - expected) < 1e-9
    assert abs(expected - 3.0 ** (2.0 / 3.0)) < 1e-12


def test_counterexample():
    ok, transcript = hypower.counterexample()
    assert ok
    assert "PASS" in transcript
