"""Slit geometry: invariance, admissibility, and the oracle sandwich."""

import cmath
import math
import random

import pytest

from abelint.config import RunConfig
from abelint.errors import UnsupportedInput
from abelint.slits import (Arc, Circle, Segment, SlitSystem,
                           brute_force_cluster_diameter, build_slits,
                           cluster_diameter_upper, is_admissible,
                           normalized_length, regions, svg_export)

CFG = RunConfig()


def rand_points(rng, k, spread=10.0):
    pts = []
    while len(pts) < k:
        p = complex(rng.uniform(-spread, spread), rng.uniform(-spread, spread))
        if all(abs(p - q) > 1e-3 for q in pts):
            pts.append(p)
    return pts


def apply_sim(system_points, a, b):
    return [a * p + b for p in system_points]


def test_normalized_length_definition():
    pts = [0j, 4 + 0j]
    c = Circle(0j, 1.0)      # circle-to-set distance is min(1, 3) = 1
    assert abs(normalized_length(c, pts) - 1.0) < 1e-15
    s = Segment(2 + 1j, 2 + 3j)  # length 2, distance to {0,4} = sqrt5
    assert abs(normalized_length(s, pts) - 2 / math.sqrt(5)) < 1e-12
    a = Arc(0j, 2.0, 0.0, math.pi)  # arclength 2pi, set distance 2
    assert abs(normalized_length(a, pts) - 0.5) < 1e-12


def test_build_slits_admissible_small():
    for pts in ([0j], [0j, 1 + 0j], [0j, 1j, 1 + 0j], [0j, 1 + 0j, 100 + 0j]):
        system = build_slits(pts, CFG)
        assert is_admissible(system, CFG)
        assert len(system.circles) <= 3 * len(pts)


def test_build_slits_admissible_random():
    rng = random.Random(30)
    for _ in range(25):
        k = rng.randint(1, 10)
        pts = rand_points(rng, k)
        system = build_slits(pts, CFG)
        assert is_admissible(system, CFG)
        assert len(system.circles) <= 3 * k


def test_punctures_in_leaf_circles():
    pts = [0j, 1 + 0j, 50 + 0j]
    system = build_slits(pts, CFG)
    regs = regions(system, CFG)
    punctured = [r for r in regs if r.kind == "punctured-disk"]
    assert len(punctured) == 3
    got = sorted((r.punctures[0] for r in punctured),
                 key=lambda z: (z.real, z.imag))
    assert got == sorted(pts, key=lambda z: (z.real, z.imag))


def test_similarity_invariance():
    rng = random.Random(31)
    pts = rand_points(rng, 5)
    base, _ = cluster_diameter_upper(pts, CFG)
    for _ in range(20):
        ang = rng.uniform(0, 2 * math.pi)
        a = rng.uniform(0.1, 10.0) * cmath.exp(1j * ang)
        b = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        moved, _ = cluster_diameter_upper(apply_sim(pts, a, b), CFG)
        assert abs(moved - base) <= 1e-12 * max(abs(base), 1.0)


def test_oracle_sandwich():
    rng = random.Random(32)
    for _ in range(5):
        k = rng.randint(2, 3)
        pts = rand_points(rng, k, spread=5.0)
        bf, _ = brute_force_cluster_diameter(pts, config=CFG)
        ub, _ = cluster_diameter_upper(pts, CFG)
        assert bf <= ub + 1e-12
        assert ub <= 4 * bf + 1e-12


def test_inadmissible_examples():
    # two circles crossed by nothing but both containing a point: the region
    # between two disjoint circles inside a third is an annulus only if the
    # slit structure connects them; a slit cycle is rejected
    c_out = Circle(0j, 10.0)
    c1 = Circle(-3 + 0j, 1.0)
    c2 = Circle(3 + 0j, 1.0)
    s1 = Segment(-2 + 0j, 2 + 0j)
    s2 = Segment(-3 + 1j, 3 + 1j)
    bad = SlitSystem([c_out, c1, c2], [s1, s2], [-3 + 0j, 3 + 0j])
    assert not is_admissible(bad, CFG)  # two slits close a cycle


def test_region_classification():
    c_out = Circle(0j, 10.0)
    c_in = Circle(0j, 1.0)
    system = SlitSystem([c_out, c_in], [], [0j])
    regs = regions(system, CFG)
    kinds = sorted(r.kind for r in regs)
    # inside c_in: punctured disk; between: annulus; outside: unbounded
    assert kinds == ["annulus", "punctured-disk", "simply-connected"]


def test_svg_export(tmp_path):
    system = build_slits([0j, 1 + 0j], CFG)
    out = tmp_path / "slits.svg"
    svg_export(system, str(out))
    data = out.read_text()
    assert data.startswith("<svg") and "circle" in data


def test_brute_force_rejects_large_sets():
    with pytest.raises(UnsupportedInput):
        brute_force_cluster_diameter([0j, 1j, 2j, 3j], config=CFG)
