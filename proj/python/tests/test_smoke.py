import json

import pytest

import segre_cubic as sc


def test_nodes_and_planes():
    nodes = sc.singular_points()
    assert len(nodes) == 10
    assert ("{123|456}", [1, 1, 1, -1, -1, -1]) in [tuple(n) for n in nodes]
    assert all(sc.jacobian_rank(coords) == 1 for _, coords in nodes)
    assert len(sc.planes()) == 15
    inc = sc.incidence()
    assert [sum(r) for r in inc] == [6] * 10
    assert [sum(c) for c in zip(*inc)] == [4] * 15


def test_jacobian_errors():
    assert sc.jacobian_rank([1, -1, 2, -2, 3, -3]) == 2
    with pytest.raises(ValueError):
        sc.jacobian_rank([1, 0, 0, 0, 0, 0])


def test_involutions_and_forms():
    assert sc.fixed_counts(["(1 2)"]) == (4, 3)
    assert sc.fixed_counts(["(1 2)(3 4)"]) == (2, 3)
    assert sc.fixed_counts(["(1 2)(3 4)(5 6)"]) == (4, 7)
    assert sc.centralizer_order(["(1 2)(3 4)"]) == 16
    table = [(f["label"], f["automorphism_order"], f["points"], f["planes"]) for f in sc.real_forms()]
    assert table == [("I", 720, 10, 15), ("II", 48, 4, 3), ("III", 16, 2, 3), ("IV", 48, 4, 7)]
    klein = sc.twist_report(["(1 2)", "(3 4)"])
    assert klein["label"] is None
    assert (klein["automorphism_order"], klein["points"], klein["planes"]) == (8, 2, 1)


def test_outer_automorphism():
    assert sc.cycle_type(sc.outer_automorphism("(1 2)")) == "2^3"
    assert sc.cycle_type(sc.outer_automorphism("(1 2)(3 4)")) == "2^2 1^2"
    with pytest.raises(ValueError):
        sc.outer_automorphism("(1 7)")


def test_report_matches_schema():
    report = sc.run(["forms", "geometry"], workers=2)
    assert report["suite"] == "geometry,forms"
    assert report["summary"] == {"error": 0, "fail": 0, "pass": len(report["checks"])}
    ids = [c["check_id"] for c in report["checks"]]
    assert ids == sorted(ids)
    for c in report["checks"]:
        assert {"check_id", "status", "expected", "actual"} <= set(c)
    text = sc.run_report(["forms", "geometry"], 1)
    assert text == sc.run_report(["geometry", "forms"], 3)
    assert json.loads(text) == report


def test_unknown_suite():
    with pytest.raises(ValueError):
        sc.run(["bogus"])
    assert "theorem" in sc.suite_names()
