"""JSON round-trips preserve exact values."""

import random
from fractions import Fraction

from abelint.linalg import FieldMatrix
from abelint.parsing import parse_operator, parse_poly
from abelint.ratfunc import RatFunc
from abelint.serialize import dumps, loads
from abelint.slits import build_slits
from abelint.config import RunConfig
from abelint.polynomials import MultiPoly


def test_poly_roundtrip():
    p = parse_poly("x1^3 - 2/3*x2 + i*x1*x2", ("x1", "x2"))
    q = loads(dumps(p))
    assert (p - q).is_zero()


def test_ratfunc_roundtrip():
    t = MultiPoly.var("t")
    one = MultiPoly.const(Fraction(1), ("t",))
    r = RatFunc(t * t + one, t - one)
    assert (loads(dumps(r)) - r).is_zero()


def test_operator_roundtrip():
    D = parse_operator("(t^2-1)*D^2 + t*D - 1")
    D2 = loads(dumps(D))
    assert D2.order == D.order
    assert all((a - b).is_zero() for a, b in zip(D.coeffs, D2.coeffs))


def test_matrix_roundtrip():
    t = RatFunc(MultiPoly.var("t"))
    M = FieldMatrix([[t, 1 / t], [t * t, t + 1]])
    M2 = loads(dumps(M))
    for r1, r2 in zip(M.data, M2.data):
        for a, b in zip(r1, r2):
            assert (a - b).is_zero()


def test_slit_system_roundtrip():
    system = build_slits([0j, 1 + 0j, 5 + 2j], RunConfig())
    s2 = loads(dumps(system))
    assert len(s2.circles) == len(system.circles)
    assert len(s2.segments) == len(system.segments)
    assert s2.points == system.points
    assert abs(s2.total_normalized_length() -
               system.total_normalized_length()) < 1e-15
