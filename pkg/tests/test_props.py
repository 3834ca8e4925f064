import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from commuting_magic import fixtures as fx
from commuting_magic.compounding import compound, euler_compose
from commuting_magic.errors import ShapeError
from commuting_magic.exact import IntSquare, flip_matrix, multiply, ones_matrix
from commuting_magic.props import (
    broken_diagonal_sums,
    check_commute,
    check_magic,
    check_natural,
    check_orthogonal_pair,
    check_pandiagonal,
    check_regular,
    magic_sum,
    property_report,
)

from .strategies import magic_seeds

MAGIC_FIXTURES = [
    "M3_LO_SHU", "M4_REGULAR", "M4_PANDIAGONAL", "A9", "B9", "M9_A", "M9_B", "A9_TILDE",
    "A12", "B12", "M12_A", "M12_B", "M12_A_HAT", "M12_B_HAT", "A16", "B16", "M16_A", "M16_B",
]


def test_magic_sum():
    assert [magic_sum(n) for n in (1, 3, 4, 9, 81)] == [0, 12, 30, 360, 265680]


def test_check_magic_examples():
    assert check_magic(fx.M3_LO_SHU) == (True, True, 12)
    assert check_magic(fx.A9) == (True, True, 36)
    assert check_magic(IntSquare([[0, 1], [1, 0]])) == (True, False, 1)
    assert check_magic(IntSquare([[0, 1], [2, 3]])).is_semi_magic is False


def test_check_natural_examples():
    assert check_natural(fx.M9_A)
    assert not check_natural(fx.A9)
    assert check_natural(IntSquare([[0]]))


def test_check_regular_examples():
    assert check_regular(fx.M3_LO_SHU) == (True, 8)
    assert check_regular(fx.M4_REGULAR) == (True, 15)
    # returns a verdict, not an error, on non-magic input
    assert check_regular(IntSquare([[0, 1], [2, 3]])) == (False, None)


def test_pandiagonal_seed_is_not_regular():
    # the order-4 pandiagonal seed pairs centro-symmetric cells to four different sums
    m = fx.M4_PANDIAGONAL
    paired = m.entries + m.entries[::-1, ::-1]
    assert sorted(set(paired.ravel().tolist())) == [3, 11, 19, 27]
    assert check_regular(m) == (False, None)


def test_pandiagonal_examples():
    assert check_pandiagonal(fx.M4_PANDIAGONAL)
    assert not check_pandiagonal(fx.M3_LO_SHU)
    assert check_pandiagonal(fx.M16_A) and check_pandiagonal(fx.M16_B)


def test_lo_shu_broken_diagonals():
    down, up = broken_diagonal_sums(fx.M3_LO_SHU)
    assert down[0] == up[2] == 12  # the two main diagonals
    assert [s for s in down[1:] + up[:2] if s != 12]  # every broken one misses


def test_orthogonal_pair_examples():
    assert check_orthogonal_pair(fx.A9, fx.B9)
    assert not check_orthogonal_pair(fx.A9, fx.A9)
    assert check_orthogonal_pair(fx.A9_TILDE, fx.B9)
    with pytest.raises(ShapeError):
        check_orthogonal_pair(fx.A9, fx.A12)


def test_commute_examples():
    assert check_commute(fx.A9, fx.B9) == (True, 144)
    cc = check_commute(fx.M9_A, fx.M9_B)
    assert cc.commutes and cc.product_scalar is None
    assert not check_commute(fx.M12_A, fx.M12_A_HAT).commutes
    with pytest.raises(ShapeError):
        check_commute(fx.A9, fx.A12)


@pytest.mark.parametrize("name", MAGIC_FIXTURES)
def test_fixture_report_invariants(name):
    m = fx.fixture(name)
    rep = property_report(m)
    assert rep.is_magic and rep.is_semi_magic
    assert int(m.entries.astype(object).sum()) == m.order * rep.summation_index
    if rep.is_natural:
        assert rep.summation_index == magic_sum(m.order)
    if rep.is_regular:
        assert rep.regular_constant * m.order == 2 * rep.summation_index
        r = flip_matrix(m.order)
        assert m + multiply(multiply(r, m), r) == rep.regular_constant * ones_matrix(m.order)


def test_report_flags_for_order_9():
    rep = property_report(fx.M9_A)
    assert rep.as_dict() == {
        "order": 9, "summation_index": 360, "is_semi_magic": True, "is_magic": True,
        "is_natural": True, "is_regular": True, "is_pandiagonal": False, "regular_constant": 80,
    }


def test_non_magic_permutation_of_naturals_is_not_natural_report():
    # entries 0..3 but rows unequal: the multiset alone does not make a natural square
    rep = property_report(IntSquare([[0, 1], [2, 3]]))
    assert not rep.is_natural and rep.summation_index is None


@settings(max_examples=30, deadline=None)
@given(magic_seeds(), magic_seeds())
def test_compound_properties_hold_for_generated_seeds(sm, sn):
    m, n = sm.order, sn.order
    pair = compound(sm, sn)
    mu_m, mu_n = check_magic(sm).summation_index, check_magic(sn).summation_index
    assert check_magic(pair.a).summation_index == m * mu_n
    assert check_magic(pair.b).summation_index == n * mu_m
    distinct = all(len(set(s.entries.ravel().tolist())) == s.order**2 for s in (sm, sn))
    assert check_orthogonal_pair(pair.a, pair.b) == distinct
    ma, mb = euler_compose(pair)
    if check_natural(sm) and check_natural(sn):
        assert check_natural(ma) and check_natural(mb)
        assert check_magic(ma).summation_index == magic_sum(m * n)
    reg_m, reg_n = check_regular(sm), check_regular(sn)
    if reg_m.is_regular and reg_n.is_regular:
        assert check_regular(pair.a) == (True, reg_n.constant)
        assert check_regular(pair.b) == (True, reg_m.constant)
        assert check_regular(ma) == (True, reg_n.constant + n * n * reg_m.constant)
        assert check_regular(mb) == (True, reg_m.constant + m * m * reg_n.constant)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 6), st.data())
def test_semi_magic_detection_matches_definition(n, data):
    a = np.array(data.draw(st.lists(st.integers(-5, 5), min_size=n * n, max_size=n * n))).reshape(n, n)
    mc = check_magic(IntSquare(a))
    sums = set(a.sum(axis=0).tolist()) | set(a.sum(axis=1).tolist())
    assert mc.is_semi_magic == (len(sums) == 1)
    if mc.is_magic:
        assert np.trace(a) == np.trace(a[:, ::-1]) == mc.summation_index
