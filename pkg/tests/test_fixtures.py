import numpy as np
import pytest

from commuting_magic import fixtures as fx
from commuting_magic.compounding import compound, compound_a, compound_b, euler_compose, shuffle_permutation
from commuting_magic.errors import FormatError
from commuting_magic.exact import IntSquare, kron, ones_matrix
from commuting_magic.props import property_report
from commuting_magic.spectral import verify_eigen, verify_svd

# flags each printed square is claimed to have: (natural, regular, pandiagonal)
PROFILES = {
    "M3_LO_SHU": (True, True, False),
    "M4_REGULAR": (True, True, False),
    "M4_PANDIAGONAL": (True, False, True),
    "A9": (False, True, False),
    "B9": (False, True, False),
    "M9_A": (True, True, False),
    "M9_B": (True, True, False),
    "A12": (False, True, False),
    "B12": (False, True, False),
    "M12_A": (True, True, False),
    "M12_B": (True, True, False),
    "M12_A_HAT": (True, True, False),
    "M12_B_HAT": (True, True, False),
    "A16": (False, False, True),
    "B16": (False, False, True),
    "M16_A": (True, False, True),
    "M16_B": (True, False, True),
}


def test_lookup_examples():
    assert fx.fixture("M3_LO_SHU").tolist() == [[3, 8, 1], [2, 4, 6], [7, 0, 5]]
    assert fx.fixture("p9") == shuffle_permutation(3)
    with pytest.raises(FormatError, match="available"):
        fx.fixture("NOPE")


def test_aliases_and_builtin_ones():
    assert fx.fixture("m3") == fx.M3_LO_SHU
    assert fx.fixture("M4") == fx.M4_REGULAR
    assert fx.fixture("E5") == ones_matrix(5)
    with pytest.raises(FormatError):
        fx.fixture("E0")


def test_lookups_are_defensive_copies():
    s = fx.fixture("S3")
    s[0, 0] = 99
    assert fx.S3[0, 0] == 1
    m = fx.fixture("M9_A")
    assert m == fx.M9_A and m is not fx.M9_A
    with pytest.raises(ValueError):
        m.entries[0, 0] = 1


@pytest.mark.parametrize("name", sorted(PROFILES))
def test_property_profiles(name):
    rep = property_report(fx.fixture(name))
    assert rep.is_magic
    assert (rep.is_natural, rep.is_regular, rep.is_pandiagonal) == PROFILES[name]


def test_transcriptions_match_constructions():
    m3, m4, m4p = fx.M3_LO_SHU, fx.M4_REGULAR, fx.M4_PANDIAGONAL
    assert compound_a(m3, 3) == fx.A9 and compound_b(m3, 3) == fx.B9
    assert compound_a(m3, 4) == fx.A12 and compound_b(m4, 3) == fx.B12
    assert compound_a(m4p, 4) == fx.A16 and compound_b(m4p, 4) == fx.B16
    assert euler_compose(compound(m3, m3)) == (fx.M9_A, fx.M9_B)
    assert euler_compose(compound(m4, m3)) == (fx.M12_A, fx.M12_B)
    assert euler_compose(compound(m3, m4)) == (fx.M12_A_HAT, fx.M12_B_HAT)
    assert euler_compose(compound(m4p, m4p)) == (fx.M16_A, fx.M16_B)


def test_decomposition_constants():
    assert verify_eigen(fx.M3_LO_SHU, fx.EIG_M3).passed
    assert verify_eigen(fx.M4_REGULAR, fx.EIG_M4).passed
    assert verify_svd(fx.M3_LO_SHU, fx.SVD_M3).passed
    assert verify_svd(fx.M4_REGULAR, fx.SVD_M4).passed
    assert np.allclose(kron(fx.S3, fx.S3), fx.S9)
    assert np.allclose(kron(fx.S4, fx.S3), fx.S12)
    assert np.allclose(kron(fx.U3, fx.U3), fx.U9)
    assert np.allclose(kron(fx.V3, fx.V3), fx.V9)


def test_p9_is_a_permutation():
    p = fx.P9.entries
    assert set(p.ravel().tolist()) == {0, 1}
    assert (p.sum(axis=0) == 1).all() and (p.sum(axis=1) == 1).all()


def test_available_lists_every_square():
    names = fx.available()
    assert set(PROFILES) <= set(names) and "P9" in names and "A9_TILDE" in names
    assert all(isinstance(fx.fixture(n), (IntSquare, np.ndarray)) for n in names)
