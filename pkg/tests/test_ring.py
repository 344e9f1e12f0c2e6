"""Exact arithmetic layer: polynomials, rational functions, determinants."""

import json
import random

import pytest

from vertexpoly.ring import (QQ, MultiPoly, NonExactDivision, RatFunc,
                             RingError, VarTable, canonical_vartable,
                             determinant, exact_divide, poly_from_json,
                             poly_to_json, random_point, ratfunc_from_json,
                             ratfunc_to_json, try_exact_divide)


def random_poly(vt, rng, n_terms=4, max_exp=3):
    terms = {}
    for _ in range(n_terms):
        exps = tuple(rng.randint(0, max_exp) for _ in vt.names)
        terms[exps] = QQ(rng.randint(-20, 20))
    return MultiPoly(vt, terms)


@pytest.fixture
def vt():
    return VarTable(["x", "y", "z"])


def test_ring_axioms_on_random_polynomials(vt):
    rng = random.Random(101)
    for _ in range(25):
        p = random_poly(vt, rng)
        q = random_poly(vt, rng)
        r = random_poly(vt, rng)
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + vt.zero() == p
        assert p * vt.one() == p
        assert p - p == vt.zero()


def test_power_matches_repeated_multiplication(vt):
    rng = random.Random(7)
    p = random_poly(vt, rng)
    acc = vt.one()
    for k in range(6):
        assert p ** k == acc
        acc = acc * p


def test_evaluation_is_a_ring_homomorphism(vt):
    rng = random.Random(13)
    point = {"x": QQ(2, 3), "y": QQ(-5), "z": QQ(7, 11)}
    for _ in range(10):
        p = random_poly(vt, rng)
        q = random_poly(vt, rng)
        assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)
        assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)


def test_exact_division_roundtrip(vt):
    rng = random.Random(29)
    for _ in range(20):
        p = random_poly(vt, rng)
        q = random_poly(vt, rng)
        if q.is_zero():
            continue
        assert exact_divide(p * q, q) == p


def test_inexact_division_is_detected(vt):
    x = vt.var("x")
    y = vt.var("y")
    assert try_exact_divide(x * x + y, x + vt.one()) is None
    with pytest.raises(NonExactDivision):
        exact_divide(x * x + y, x + vt.one())


def test_division_by_zero_polynomial_raises(vt):
    with pytest.raises((RingError, ZeroDivisionError)):
        exact_divide(vt.var("x"), vt.zero())


def test_ratfunc_normalizes_shared_factors(vt):
    x, y = vt.var("x"), vt.var("y")
    r = RatFunc((x + y) * (x - y), (x + y))
    assert r.is_poly()
    assert r.as_poly() == x - y


def test_ratfunc_monomial_content_cancels(vt):
    x, y = vt.var("x"), vt.var("y")
    r = RatFunc(x * x * y, x * y * y)
    assert r == RatFunc(x, y)


def test_ratfunc_equality_by_cross_multiplication(vt):
    x, y = vt.var("x"), vt.var("y")
    one = vt.one()
    lhs = RatFunc(one, x + y) + RatFunc(one, x - y)
    rhs = RatFunc(2 * x, (x + y) * (x - y))
    assert lhs == rhs


def test_ratfunc_negative_powers(vt):
    x = vt.var("x")
    r = RatFunc(x) ** -2
    assert r * RatFunc(x * x) == RatFunc(vt.one())


def test_graded_lex_string_order():
    vt = VarTable(["t", "u"])
    p = vt.var("u") + vt.var("t") * vt.var("u") + vt.const(3)
    assert str(p) == "t*u + u + 3"


def test_determinant_exact_matches_evaluation():
    rng = random.Random(37)
    vt = VarTable(["x", "y"])
    for n in range(1, 5):
        mat_sym = [[RatFunc(random_poly(vt, rng, n_terms=2, max_exp=2))
                    for _ in range(n)] for _ in range(n)]
        det_sym = determinant(mat_sym)
        point = random_point(seed=n, vartable=vt,
                             avoid=[det_sym.den])
        mat_num = [[x.evaluate(point) for x in row] for row in mat_sym]
        assert det_sym.evaluate(point) == determinant(mat_num)


def test_determinant_vanishes_on_repeated_rows():
    vt = VarTable(["x"])
    x = RatFunc(vt.var("x"))
    one = RatFunc(vt.one())
    mat = [[x, one], [x, one]]
    assert determinant(mat).is_zero()


def test_determinant_of_empty_matrix_is_one():
    assert determinant([]) == QQ(1)


def test_determinant_rejects_mixed_modes():
    vt = VarTable(["x"])
    with pytest.raises(RingError):
        determinant([[RatFunc(vt.var("x")), QQ(1)],
                     [QQ(1), QQ(1)]])


def test_determinant_sign_convention():
    # a permutation matrix with a single transposition has determinant -1
    vt = VarTable(["x"])
    one, zero = RatFunc(vt.one()), RatFunc(vt.zero())
    for n, swap in [(2, (0, 1)), (3, (1, 2)), (4, (0, 3))]:
        rows = [[one if i == j else zero for j in range(n)] for i in range(n)]
        rows[swap[0]], rows[swap[1]] = rows[swap[1]], rows[swap[0]]
        assert determinant(rows) == -one


def test_json_roundtrip(vt):
    rng = random.Random(41)
    p = random_poly(vt, rng)
    assert poly_from_json(json.loads(json.dumps(poly_to_json(p)))) == p
    r = RatFunc(p, random_poly(vt, rng) + vt.one())
    back = ratfunc_from_json(json.loads(json.dumps(ratfunc_to_json(r))))
    assert back == r


def test_random_point_is_deterministic_and_avoids_zeros(vt):
    x = vt.var("x")
    p1 = random_point(seed=5, vartable=vt, avoid=[x])
    p2 = random_point(seed=5, vartable=vt, avoid=[x])
    assert p1 == p2
    assert x.evaluate(p1) != 0


def test_canonical_vartable_ordering():
    vt = canonical_vartable(n_u=2, n_w=1, beta=True)
    assert vt.names == ("t", "a", "b", "c", "d", "beta", "u1", "u2", "w1")
