from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symspinor.weights import (
    RankError,
    Weight,
    a_condition,
    cone_coords,
    depth_below,
    epsilon,
    from_fundamental,
    fundamental_coords,
    fundamental_weight,
    height,
    is_dominant_integral,
    is_in_A,
    rho,
    simple_roots,
)

H = F(1, 2)


def eps(*coords):
    return Weight.from_epsilon(coords)


def test_from_fundamental_examples():
    assert from_fundamental([0, 0, -H], 3) == eps(-H, -H, -H)
    for l in (2, 3, 5):
        assert from_fundamental([0] * l, l) == Weight.zero(l)
    assert from_fundamental([0, 1, F(-3, 2)], 3) == eps(-H, -H, F(-3, 2))


def test_from_fundamental_rank_mismatch():
    with pytest.raises(RankError):
        from_fundamental([0, 1], 3)


def test_fundamental_coords_examples():
    assert fundamental_coords(eps(H, -H, -H)) == (1, 0, -H)
    assert fundamental_coords(eps(0, 0, 0)) == (0, 0, 0)
    assert fundamental_coords(eps(-H, -H, F(-3, 2))) == (0, 1, F(-3, 2))


def test_dominance_examples():
    assert is_dominant_integral(fundamental_weight(2, 3))
    assert not is_dominant_integral(from_fundamental([0, 0, -H], 3))
    assert is_dominant_integral(from_fundamental([1, 0, 2], 3))


@pytest.mark.parametrize("l", [2, 3, 4, 6])
def test_membership_in_A_examples(l):
    assert is_in_A(from_fundamental([0] * (l - 1) + [-H], l))
    assert is_in_A(from_fundamental([0] * (l - 2) + [1, F(-3, 2)], l))
    # boundary: 0 - 3 + 3 = 0 is excluded
    assert not is_in_A(from_fundamental([0] * (l - 1) + [F(-3, 2)], l))


def test_cone_coords_examples():
    top = eps(-H, -H)
    assert cone_coords(top, top) == (0, 0)
    w = top - epsilon(2, 2).scale(2)
    assert cone_coords(top, w) == (0, 1)
    assert depth_below(top, w) == 1
    assert cone_coords(Weight.zero(2), epsilon(1, 2)) is None


@pytest.mark.parametrize("l", range(1, 9))
def test_rho_is_sum_of_fundamental_weights(l):
    total = Weight.zero(l)
    for i in range(1, l + 1):
        total = total + fundamental_weight(i, l)
    assert total == rho(l)
    assert rho(l).epsilon == tuple(range(l, 0, -1))


def test_json_renders_exact_strings():
    w = from_fundamental([0, 1, F(-3, 2)], 3)
    doc = w.to_json()
    assert doc == {"fundamental": ["0", "1", "-3/2"], "epsilon": ["-1/2", "-1/2", "-3/2"]}
    assert Weight.from_json(doc) == w


def test_height_matches_cone_depth():
    l = 3
    top = rho(l)
    for a in simple_roots(l):
        assert height(top, top - a) == 1
    assert height(Weight.zero(l), -epsilon(1, l)) == F(5, 2)


half_ints = st.integers(-12, 12).map(lambda n: F(n, 2))


@given(st.integers(2, 6).flatmap(lambda l: st.lists(half_ints, min_size=l, max_size=l)))
def test_basis_round_trip(coeffs):
    l = len(coeffs)
    w = from_fundamental(coeffs, l)
    assert fundamental_coords(w) == tuple(coeffs)
    assert from_fundamental(fundamental_coords(w), l) == w


@given(
    st.integers(2, 5).flatmap(
        lambda l: st.tuples(
            st.lists(st.integers(-3, 3), min_size=l, max_size=l),
            st.lists(st.integers(0, 4), min_size=l, max_size=l),
        )
    )
)
def test_cone_coords_reconstruct(data):
    top_d, c = data
    l = len(top_d)
    top = Weight(tuple(2 * x for x in top_d))
    w = top
    for ci, a in zip(c, simple_roots(l)):
        w = w - a.scale(ci)
    got = cone_coords(top, w)
    assert got == tuple(c)
    rebuilt = top
    for ci, a in zip(got, simple_roots(l)):
        rebuilt = rebuilt - a.scale(ci)
    assert rebuilt == w


def _clauses(lam):
    l = len(lam)
    ok = True
    for i in range(l - 1):
        ok = ok and lam[i] >= 0 and lam[i] == int(lam[i])
    ok = ok and (lam[-1] - H) == int(lam[-1] - H)
    return ok and lam[l - 2] + 2 * lam[l - 1] + 3 > 0


@given(st.integers(2, 6).flatmap(lambda l: st.lists(half_ints, min_size=l, max_size=l)))
def test_A_membership_matches_direct_clauses(coeffs):
    w = from_fundamental(coeffs, len(coeffs))
    assert is_in_A(w) == _clauses(coeffs) == a_condition(tuple(coeffs))
