"""Packed-boundary partition functions: sum, determinants, properties."""

import pytest

from vertexpoly.dwbp import (check_ik_properties, z_det_hom, z_det_inhom,
                             z_sum)
from vertexpoly.lattice import StateVector, apply_row_operator
from vertexpoly.params import ParamSet
from vertexpoly.ring import QQ, RatFunc, RingError, canonical_vartable


def lattice_z(n, us, p, dual=False):
    """Brute-force N x N partition function from the row operators."""
    if dual:
        s = StateVector.packed(n, p.one())
        for u in us:
            s = apply_row_operator("C", u, s, p)
        return s.amplitude(0, p.zero())
    s = StateVector.vacuum(n, p.one())
    for u in us:
        s = apply_row_operator("B", u, s, p)
    return s.amplitude((1 << n) - 1, p.zero())


@pytest.fixture
def sym2():
    vt = canonical_vartable(n_u=2, n_w=2)
    return ParamSet.symbolic_over(vt, n_w=2)


def numeric_point(seed, n):
    import random
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        v = QQ(rng.randint(1, 999), rng.randint(1, 999))
        if v not in out:
            out.append(v)
    return out


def test_base_case_single_site(sym2):
    u1 = sym2.spectral(1)[0]
    p = sym2
    assert z_sum([u1], p, ws=[p.w[0]]) == (1 - p.t) * p.c * u1
    assert z_det_inhom([u1], p, ws=[p.w[0]]) == (1 - p.t) * p.c * u1
    assert z_det_inhom([u1], p, ws=[p.w[0]], dual=True) == \
        (1 - p.t) * p.d * p.w[0]


def test_two_site_value_matches_printed_expression(sym2):
    # the hand-expanded N=2 inhomogeneous value
    p = sym2
    t, a, b, e, f, c = p.t, p.a, p.b, p.e, p.f, p.c
    u1, u2 = p.spectral(2)
    w1, w2 = p.w
    want = (1 - t) * c * u1 * (1 - t) * c * u2 * (
        (a * t * u2 + b * w2) * (e * u1 + f * w1)
        + (e * u2 + t * f * w1) * (a * u1 + b * w2))
    assert z_sum([u1, u2], p, ws=[w1, w2]) == want
    assert z_det_inhom([u1, u2], p, ws=[w1, w2]) == want


def test_two_site_homogeneous_value(sym2):
    # at w = 1 the printed expression collapes to the homogeneous value
    p = sym2
    t, a, b, e, f, c = p.t, p.a, p.b, p.e, p.f, p.c
    u1, u2 = p.spectral(2)
    want = (1 - t) ** 2 * c ** 2 * u1 * u2 * (
        (a * t * u2 + b) * (e * u1 + f) + (e * u2 + t * f) * (a * u1 + b))
    assert z_sum([u1, u2], p) == want
    assert z_det_hom(2, [u1, u2], p) == want


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sum_determinant_lattice_triangle_exact(n):
    vt = canonical_vartable(n_u=n, n_w=n)
    p = ParamSet.symbolic_over(vt, n_w=n)
    us = p.spectral(n)
    reference = z_sum(us, p, ws=p.w)
    assert z_det_inhom(us, p, ws=p.w) == reference
    assert lattice_z(n, us, p) == reference
    assert z_det_hom(n, us, p) == z_sum(us, p)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_triangle_at_random_points(n):
    for seed in range(3):
        p = ParamSet.sample(seed + 100, n_w=n)
        us = numeric_point(seed, n)
        reference = z_sum(us, p, ws=p.w)
        assert z_det_inhom(us, p, ws=p.w) == reference
        assert lattice_z(n, us, p) == reference


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dual_determinants_match_lattice(n):
    p = ParamSet.sample(n + 50, n_w=n)
    us = numeric_point(n + 7, n)
    p_hom = ParamSet(p.t, p.a, p.b, p.c, p.d)
    assert z_det_hom(n, us, p_hom, dual=True) == \
        lattice_z(n, us, p_hom, dual=True)
    assert z_det_inhom(us, p_hom, ws=p.w, dual=True) == \
        lattice_z(n, us, p, dual=True)


def test_coincident_spectral_parameters_rejected():
    p = ParamSet.sample(1)
    with pytest.raises(RingError):
        z_sum([QQ(1, 2), QQ(1, 2)], p)
    with pytest.raises(RingError):
        z_det_hom(2, [QQ(1, 2), QQ(1, 2)], p)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_characterizing_properties(n):
    report = check_ik_properties(n, ParamSet.sample(n), seed=17)
    assert report.degree
    assert report.symmetric
    assert report.base_case
    assert set(report.recursion) == set(range(1, n + 1))
    assert all(report.recursion.values())
    assert report.all_pass()


def test_recursion_fails_against_perturbed_sum():
    # feeding the sum at perturbed e into the property checker must break
    # the recursion (a vacuous checker would pass anything)
    p = ParamSet.sample(9)

    def sum_with_bad_e(us, q, ws=None):
        twisted = ParamSet.unchecked(q.t, q.a, q.b, q.c, q.d, 2 * q.e, q.f)
        return z_sum(us, twisted, ws=ws)

    report = check_ik_properties(2, p, seed=3, z_fn=sum_with_bad_e)
    assert not report.all_pass()
