import math

import numpy as np
import pytest

import toricdegen as td


@pytest.fixture
def line3():
    return td.PointConfig(["0", "1", "2"], [np.array([0.0]), np.array([1.0]), np.array([2.0])])


def test_subdivision(line3):
    s = td.regular_subdivision(line3, np.array([0.0, -1.0, 0.0]))
    assert s.facets == [[0, 1], [1, 2]]
    assert td.is_triangulation(s, line3)
    g = td.gkz_vertex(line3, s)
    assert np.allclose(g, [1.0, 2.0, 1.0])


def test_enumeration(line3):
    out = td.enumerate_regular_triangulations(line3, budget=200, seed=3)
    assert out.exhaustive
    assert len(out.triangulations) == 2
    gkz = sorted(tuple(np.round(g, 9)) for g in out.gkz)
    assert gkz == [(1.0, 2.0, 1.0), (2.0, 0.0, 2.0)]


def test_birch_inverse(line3):
    b = td.birch_inverse(line3, np.ones(3), np.array([1.5]))
    assert b.residual < 1e-9
    assert abs(b.z[0] - 0.11620) < 1e-3
    assert td.is_member(line3, b.z)
    assert np.allclose(td.moment(line3, b.z), [1.5], atol=1e-9)


def test_fan_limits():
    fan = td.Fan([[np.array([1.0])], [np.array([-1.0])]], 1)
    assert fan.is_complete()
    lim = td.one_param_limit(fan, td.epsilon(fan), np.array([1.0]))
    assert lim is not None
    incomplete = td.Fan([[np.array([1.0, 0.0]), np.array([0.0, 1.0])]], 2)
    assert not incomplete.is_complete()
    assert td.one_param_limit(incomplete, td.epsilon(incomplete), np.array([-1.0, -1.0])) is None


def test_cone_duality():
    c = td.Cone([np.array([2.0, 1.0]), np.array([1.0, 3.0])], 2)
    assert c.dual().dual().equals(c)
    assert c.contains(np.array([1.0, 1.0]))


def test_degeneration(line3):
    r = td.degenerate(line3, np.ones(3), np.array([0.0, -1.0, 0.0]), [1.0, 2.0, 4.0, 8.0], 40, 0)
    assert r.verdict
    assert r.predicted.facets == [[0, 1], [1, 2]]
    assert r.final_distance < r.threshold


def test_secondary_limit(line3):
    v = np.array([0.0, -1.0, 0.0])
    lim = td.secondary_ray_limit(line3, np.zeros(3), v)
    assert lim.cone.same_as(td.regular_subdivision(line3, v))


def test_hausdorff():
    a = [np.array([0.0, 0.0])]
    b = [np.array([3.0, 4.0])]
    assert math.isclose(td.hausdorff_distance(a, b), 5.0)


def test_suites_listed():
    names = td.suite_names()
    assert "cones" in names and "moduli" in names
    r = td.run_suite("monoid", 1)
    assert r.pass_
