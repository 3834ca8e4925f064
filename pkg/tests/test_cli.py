import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
import numpy as np

from commuting_magic import fixtures as fx
from commuting_magic.cli import main
from commuting_magic.compounding import Phase
from commuting_magic.errors import FormatError
from commuting_magic.exact import IntSquare
from commuting_magic.squarefile import parse, read_square, render, write_square


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


# -- square files -----------------------------------------------------------------


def test_render_format():
    assert render(fx.M3_LO_SHU) == "3\n3 8 1\n2 4 6\n7 0 5\n"
    assert render(fx.M3_LO_SHU, offset=1) == "3\n4 9 2\n3 5 7\n8 1 6\n"


@pytest.mark.parametrize("name", [n for n in fx.available() if isinstance(fx.fixture(n), IntSquare)])
def test_fixture_round_trip(name):
    text = render(fx.fixture(name))
    assert render(parse(text)) == text
    assert parse(render(fx.fixture(name), 1), 1) == fx.fixture(name)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: arrays(np.int64, (n, n), elements=st.integers(-(2**62), 2**62))))
def test_round_trip_property(a):
    m = IntSquare(a)
    assert parse(render(m)) == m


@pytest.mark.parametrize("text", ["", "x\n", "2\n1 2\n3\n", "2\n1 2\n3 4\n5 6\n", "2 2\n1 2\n3 4\n", "1\n1.5\n", "0\n", "1\n99999999999999999999\n"])
def test_parse_rejects_malformed(text):
    with pytest.raises(FormatError):
        parse(text)


def test_read_missing_file(tmp_path):
    with pytest.raises(FormatError):
        read_square(tmp_path / "missing.txt")


# -- compound ---------------------------------------------------------------------------


def test_compound_order_9(tmp_path, capsys):
    code, out, _ = run(capsys, "compound", "M3", "M3", "--out-dir", tmp_path)
    assert code == 0
    assert "summation_index=360" in out and "summation_index=36" in out
    for suffix, want in (("A", fx.A9), ("B", fx.B9), ("MA", fx.M9_A), ("MB", fx.M9_B)):
        assert read_square(tmp_path / f"M9_{suffix}.txt") == want


def test_compound_order_12_and_swapped(tmp_path, capsys):
    assert run(capsys, "compound", "M3", "M4", "-n", 3, "-m", 4, "--out-dir", tmp_path)[0] == 0
    assert read_square(tmp_path / "M12_MA.txt") == fx.M12_A
    assert read_square(tmp_path / "M12_MB.txt") == fx.M12_B
    assert run(capsys, "compound", "M4", "M3", "--out-dir", tmp_path, "--prefix", "hat")[0] == 0
    assert read_square(tmp_path / "hat_MA.txt") == fx.M12_A_HAT
    assert read_square(tmp_path / "hat_MB.txt") == fx.M12_B_HAT


def test_compound_from_files_one_based(tmp_path, capsys):
    seed = tmp_path / "lo_shu.txt"
    write_square(seed, fx.M3_LO_SHU, offset=1)
    out = tmp_path / "out"
    assert run(capsys, "--one-based", "compound", seed, seed, "--out-dir", out)[0] == 0
    assert read_square(out / "M9_MA.txt", offset=1) == fx.M9_A
    assert (out / "M9_MA.txt").read_text().split()[1:].count("81") == 1


def test_compound_errors(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n0 1\n2 3\n")
    assert run(capsys, "compound", bad, "M3", "--out-dir", tmp_path)[0] == 3
    assert run(capsys, "compound", "M3", "M3", "-n", 4, "--out-dir", tmp_path)[0] == 3
    garbled = tmp_path / "garbled.txt"
    garbled.write_text("3\n1 2\n")
    assert run(capsys, "compound", garbled, "M3", "--out-dir", tmp_path)[0] == 2
    assert run(capsys, "compound", "NOPE", "M3")[0] == 2
    huge = tmp_path / "huge.txt"
    write_square(huge, IntSquare(fx.M3_LO_SHU.entries.astype(object) * 2**59))
    assert run(capsys, "compound", huge, huge, "--out-dir", tmp_path)[0] == 4


# -- check ------------------------------------------------------------------------------


def test_check_report_schema(capsys):
    code, out, _ = run(capsys, "check", "M9_A")
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "schema_version": 1,
        "order": 9,
        "summation_index": 360,
        "flags": {"semi_magic": True, "magic": True, "natural": True, "regular": True, "pandiagonal": False},
        "regular_constant": 80,
    }


def test_check_pandiagonal_and_pair(capsys):
    doc = json.loads(run(capsys, "check", "M16_A")[1])
    assert doc["flags"]["pandiagonal"] and doc["flags"]["natural"] and doc["flags"]["magic"]
    code, out, _ = run(capsys, "check", "M12_A", "--pair", "M12_A_HAT")
    assert code == 0
    assert json.loads(out)["pair"] == {"commutes": False, "product_scalar": None, "orthogonal_pair": True}
    doc = json.loads(run(capsys, "check", "A9", "--pair", "B9")[1])
    assert doc["pair"] == {"commutes": True, "product_scalar": 144, "orthogonal_pair": True}


def test_check_plain_and_errors(tmp_path, capsys):
    code, out, _ = run(capsys, "check", "M3", "--plain")
    assert code == 0 and "regular_constant  8" in out
    assert run(capsys, "check", "M3", "--pair", "M4")[0] == 3
    missing = tmp_path / "nope.txt"
    assert run(capsys, "check", missing)[0] == 2


def test_false_verdicts_exit_zero(tmp_path, capsys):
    f = tmp_path / "plain.txt"
    f.write_text("2\n0 1\n2 3\n")
    code, out, _ = run(capsys, "check", f)
    assert code == 0 and json.loads(out)["flags"]["magic"] is False


# -- spectra ---------------------------------------------------------------------------


def test_spectra_claim_and_svd(capsys):
    code, out, _ = run(capsys, "spectra", "M9_A", "--claim", "L^4(L-360)(L^2+216)(L^2+17496)")
    assert code == 0
    doc = json.loads(out)
    assert doc["claim"]["holds"] is True
    assert doc["charpoly"]["coefficients"][-1] == "1"
    code, out, _ = run(capsys, "spectra", "M3", "--svd")
    sv = json.loads(out)["singular_values"]
    assert sv == pytest.approx([12, 4 * 3**0.5, 2 * 3**0.5], rel=1e-12)
    assert json.loads(run(capsys, "spectra", "M3", "--claim", "(L-12)(L^2+25)")[1])["claim"]["holds"] is False


def test_spectra_plain(capsys):
    code, out, _ = run(capsys, "spectra", "M3", "--plain", "--svd")
    assert code == 0 and "L^3 - 12L^2 + 24L - 288" in out


def test_spectra_malformed_claim(capsys):
    code, _, err = run(capsys, "spectra", "M3", "--claim", "(L^3+1)")
    assert code == 2 and "cannot parse" in err


# -- shuffle ---------------------------------------------------------------------------


def test_shuffle(tmp_path, capsys):
    code, out, _ = run(capsys, "shuffle", 3)
    assert code == 0 and parse(out) == fx.P9
    b9 = tmp_path / "b9.txt"
    write_square(b9, fx.B9)
    assert parse(run(capsys, "shuffle", 3, "--apply", b9)[1]) == fx.A9
    assert run(capsys, "shuffle", 3, "--apply", "M12_A")[0] == 3
    assert run(capsys, "shuffle", 0)[0] == 3


# -- phases ----------------------------------------------------------------------------


def test_phases(tmp_path, capsys):
    src = tmp_path / "m3.txt"
    write_square(src, fx.M3_LO_SHU)
    assert run(capsys, "phases", src, "--out-dir", tmp_path)[0] == 0
    files = [tmp_path / f"m3_{p.value}.txt" for p in Phase]
    assert len({f.read_text() for f in files}) == 8
    assert (tmp_path / "m3_identity.txt").read_text() == src.read_text()
    out = tmp_path / "ones"
    assert run(capsys, "phases", "E3", "--out-dir", out)[0] == 0
    assert len({f.read_text() for f in out.iterdir()}) == 1


# -- process-level ----------------------------------------------------------------------


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "commuting_magic", "check", "M4_PANDIAGONAL", "--plain"],
        capture_output=True, text=True,
    )
    assert res.returncode == 0 and "pandiagonal       True" in res.stdout
