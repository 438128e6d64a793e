from fractions import Fraction as F
from math import factorial

import pytest

from symspinor.spinor_decomp import minus_spinor_weight, spinor_weight
from symspinor.weights import Weight, from_fundamental, iter_A, rho
from symspinor.weyl import (
    ResourceError,
    WeylElement,
    act,
    enumerate_group,
    integral_subgroup,
    positive_roots,
    reflection,
)


def order(l):
    return 2**l * factorial(l)


def test_enumerate_sizes_and_determinants():
    els = list(enumerate_group(1))
    assert len(els) == 2 and {d for _, d in els} == {1, -1}
    els = list(enumerate_group(2))
    assert len(els) == 8 and sum(d for _, d in els) == 0
    assert len(list(enumerate_group(3))) == 48


def test_enumerate_guard():
    with pytest.raises(ResourceError):
        next(enumerate_group(9))


def test_action_examples():
    v = rho(2)
    assert act(WeylElement.identity(2), v) == v
    assert act(reflection(2, "long", 2), v).epsilon == (2, -1)
    assert act(reflection(2, "-", 1, 2), v).epsilon == (1, 2)


def test_group_closure_and_det_homomorphism():
    els = dict(enumerate_group(3))
    for a, da in els.items():
        for b, db in els.items():
            c = a * b
            assert c in els
            assert els[c] == da * db
        assert a * a.inverse() == WeylElement.identity(3)


def test_composition_is_action_composition():
    v = Weight((5, -3, 1))
    els = [w for w, _ in enumerate_group(3)]
    for a in els[::7]:
        for b in els[::5]:
            assert act(a * b, v) == act(a, act(b, v))


@pytest.mark.parametrize("l", [2, 3, 4])
def test_reflections_fix_their_hyperplanes(l):
    from symspinor.weyl import coroot_pairing, root_vector

    for r in positive_roots(l):
        s = reflection(l, *r)
        assert s.det == -1
        alpha = root_vector(l, r)
        assert act(s, alpha) == -alpha
        assert coroot_pairing(alpha, r) == 2


@pytest.mark.parametrize("l", [2, 3, 4])
def test_rho_orbit_is_regular(l):
    orbit = {act(w, rho(l)) for w, _ in enumerate_group(l)}
    assert len(orbit) == order(l)


def _even_sign_elements(l):
    # brute-force oracle for the D_l subgroup: signed permutations with an even number of -1
    return {w for w, _ in enumerate_group(l) if w.signs.count(-1) % 2 == 0}


@pytest.mark.parametrize("l", [2, 3, 4])
def test_integral_subgroup_dominant_is_full_group(l):
    sub = integral_subgroup(from_fundamental([1] + [0] * (l - 1), l))
    assert len(sub) == order(l)


@pytest.mark.parametrize("l", [2, 3, 4])
def test_integral_subgroup_of_spinors_is_type_D(l):
    for lam in (spinor_weight(l), minus_spinor_weight(l)):
        sub = integral_subgroup(lam)
        assert {w for w, _ in sub} == _even_sign_elements(l)
        assert all(d == w.det for w, d in sub)


@pytest.mark.parametrize("l", [2, 3, 4, 5])
def test_integral_subgroup_has_D_order_on_A(l):
    sample = list(iter_A(l, 1, [F(-3, 2), F(-1, 2), F(1, 2)]))
    assert sample
    for lam in sample[:6]:
        assert len(integral_subgroup(lam)) == order(l) // 2
