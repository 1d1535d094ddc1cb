import math

import pytest

import relayplacer as rp


def build(n=20, seed=1):
    sc = rp.generate_scenario(n, 100, 100, 10, 20, rp.Point(50, 50), seed)
    fam = rp.enumerate_possible_positions(sc)
    return sc, fam


def test_end_to_end_chain():
    sc, fam = build()
    sol = rp.lsaa(sc, fam)
    assert 0 < len(sol.positions) <= sc.n()
    degrees = rp.validate_cover(sc, sol, 1)
    assert len(degrees) == sc.n()
    assert min(degrees) >= 1

    dep = rp.rlsa(sol, sc)
    pts = dep.cover_points()
    assert len(pts) == len(sol.positions)
    assert min(rp.coverage_degrees(sc, pts)) >= 1

    added = rp.mst_steinerize(pts, sc.sink, sc.R)
    graph = rp.build_topology(pts + added, sc.sink, sc.R)
    assert rp.is_connected(graph)
    assert len(graph.nodes) == len(pts) + len(added) + 1


def test_generation_is_deterministic():
    a, _ = build(seed=42)
    b, _ = build(seed=42)
    assert [(p.x, p.y) for p in a.sensors] == [(p.x, p.y) for p in b.sensors]
    c, _ = build(seed=43)
    assert (a.sensors[0].x, a.sensors[0].y) != (c.sensors[0].x, c.sensors[0].y)


def test_rlsm_reproducible_per_seed():
    sc, fam = build()
    sol = rp.lsaa(sc, fam)
    one = rp.rlsm(sol, sc, 9)
    two = rp.rlsm(sol, sc, 9)
    assert [(r.position.x, r.position.y) for r in one.relays] == [
        (r.position.x, r.position.y) for r in two.relays
    ]


def test_geometry_primitives():
    pts = rp.circle_intersections(rp.Point(0, 0), rp.Point(10, 0), 10)
    assert len(pts) == 2
    assert {round(p.y, 9) for p in pts} == {8.660254038, -8.660254038}

    hit = rp.nps(rp.Point(0, 0), rp.Point(10, 0), 10, rp.Point(100, 0))
    assert math.isclose(hit.x, 10) and abs(hit.y) < 1e-9

    proj = rp.nearest_point_on_disc(rp.Point(0, 0), 10, rp.Point(30, 40))
    assert math.isclose(proj.x, 6) and math.isclose(proj.y, 8)


def test_run_pipeline_and_double_cover():
    sc, _ = build(n=25, seed=3)
    cfg = rp.PipelineConfig()
    res = rp.run_pipeline(sc, cfg)
    assert res.metrics.relay_count_cover == len(res.solution.positions)
    assert rp.is_connected(res.topology)

    dc = rp.PipelineConfig()
    dc.cover_algorithm = rp.CoverAlgorithm.Lsaadc
    dc.coverage_k = 2
    res2 = rp.run_pipeline(sc, dc)
    assert min(rp.coverage_degrees(sc, res2.deployment.cover_points())) >= 2


def test_scenario_json_round_trip():
    sc, _ = build(n=7, seed=5)
    back = rp.scenario_from_json(rp.scenario_to_json(sc))
    assert [(p.x, p.y) for p in back.sensors] == [(p.x, p.y) for p in sc.sensors]
    assert back.r == sc.r and back.R == sc.R


def test_error_translation():
    sc, fam = build(n=20)
    limits = rp.OracleLimits()
    limits.max_sensors = 5
    with pytest.raises(RuntimeError):
        rp.exact_min_cover(sc, fam, limits)

    sol = rp.lsaa(sc, fam)
    with pytest.raises(RuntimeError):
        rp.validate_cover(sc, sol, 2)  # single cover cannot promise degree 2

    with pytest.raises(ValueError):
        rp.WeightConfig(5, 1, 2).validate()


def test_module_surface():
    assert rp.__version__
    assert "lsaa" in rp.__all__ and "run_pipeline" in rp.__all__
