"""Rebuild every golden square from its seeds and audit it.

    python scripts/reproduce_examples.py [--out-dir DIR] [--tol 1e-9]

Prints one line per check and exits non-zero if any check fails.
"""
import argparse
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from commuting_magic import fixtures as fx
from commuting_magic.compounding import (
    apply_shuffle,
    compound,
    compound_chain,
    euler_compose,
    shuffle_permutation,
)
from commuting_magic.config import ReproConfig, VerifyConfig
from commuting_magic.exact import charpoly_exact
from commuting_magic.props import check_commute, check_natural, property_report
from commuting_magic.spectral import (
    EigenSystem,
    SvdSystem,
    compose_eigen_m,
    compose_svd_m,
    compound_eigen,
    compound_svd,
    jacobi_singular_values,
    verify_eigen,
    verify_svd,
)
from commuting_magic.squarefile import write_square

SEEDS = {
    "9": (fx.M3_LO_SHU, fx.M3_LO_SHU, fx.EIG_M3, fx.EIG_M3, fx.SVD_M3, fx.SVD_M3),
    "12": (fx.M4_REGULAR, fx.M3_LO_SHU, fx.EIG_M4, fx.EIG_M3, fx.SVD_M4, fx.SVD_M3),
}
GOLDEN = {
    "9": (fx.A9, fx.B9, fx.M9_A, fx.M9_B),
    "12": (fx.A12, fx.B12, fx.M12_A, fx.M12_B),
    "12hat": (None, None, fx.M12_A_HAT, fx.M12_B_HAT),
    "16": (fx.A16, fx.B16, fx.M16_A, fx.M16_B),
}

failures = 0


def report(label: str, ok: bool, detail: str = "") -> None:
    global failures
    failures += not ok
    print(f"{'ok  ' if ok else 'FAIL'} {label}{'  ' + detail if detail else ''}")


def rebuild(cfg: ReproConfig) -> dict:
    pairs = {
        "9": compound(fx.M3_LO_SHU, fx.M3_LO_SHU),
        "12": compound(fx.M4_REGULAR, fx.M3_LO_SHU),
        "12hat": compound(fx.M3_LO_SHU, fx.M4_REGULAR),
        "16": compound(fx.M4_PANDIAGONAL, fx.M4_PANDIAGONAL),
    }
    built = {}
    for key, pair in pairs.items():
        ma, mb = euler_compose(pair)
        built[key] = (pair.a, pair.b, ma, mb)
        for name, got, want in zip(("A", "B", "MA", "MB"), built[key], GOLDEN[key]):
            if want is not None:
                report(f"order {key} {name} matches the printed square", got == want)
            if cfg.out_dir:
                write_square(Path(cfg.out_dir) / f"M{key}_{name}.txt", got, int(cfg.verify.one_based))
        rep = property_report(ma)
        report(f"order {key} MA natural magic, mu={rep.summation_index}", rep.is_natural and rep.is_magic,
               f"regular={rep.is_regular} pandiagonal={rep.is_pandiagonal}")
        report(f"order {key} MA and MB commute", check_commute(ma, mb).commutes)
    return built


def spectra(cfg: ReproConfig, built: dict) -> None:
    tol = cfg.verify.tol
    for key, (sm, sn, em, en, svm, svn) in SEEDS.items():
        m, n = sm.order, sn.order
        a, b, ma, mb = built[key]
        ce = compound_eigen(em, en, sm, sn, tol)
        jma, jmb = compose_eigen_m(ce.j_a, ce.j_b, m, n)
        cs = compound_svd(svm, svn, sm, sn, tol)
        sma, smb = compose_svd_m(cs.sigma_a, cs.sigma_b, m, n)
        for name, sq, j, sig in (("A", a, ce.j_a, cs.sigma_a), ("B", b, ce.j_b, cs.sigma_b),
                                 ("MA", ma, jma, sma), ("MB", mb, jmb, smb)):
            ev = verify_eigen(sq, EigenSystem(ce.s, j), tol)
            sv = verify_svd(sq, SvdSystem(cs.u, sig, cs.v), tol)
            report(f"order {key} {name} MS = SJ", ev.passed, f"residual={ev.residual:.1e}")
            report(f"order {key} {name} M = U S V^T", sv.passed, f"residual={sv.reconstruction:.1e}")
            oracle = jacobi_singular_values(sq, cfg.verify.max_sweeps)
            want = np.sort(sig)[::-1]
            rel = float(np.max(np.abs(oracle - want))) / want[0]
            report(f"order {key} {name} singular values agree with Jacobi", rel <= tol, f"rel={rel:.1e}")
        print(f"     order {key} charpoly(MA) = {charpoly_exact(ma)}")


def shuffle_and_chain(cfg: ReproConfig, built: dict) -> None:
    p = shuffle_permutation(3)
    report("P9 matches the printed permutation", p == fx.P9)
    a, b, ma, mb = built["9"]
    report("P B9 P = A9 and P MB9 P = MA9", apply_shuffle(p, b) == a and apply_shuffle(p, mb) == ma)
    stages = compound_chain(fx.M3_LO_SHU, cfg.verify.chain_depth)
    top, _ = euler_compose(stages[-1])
    rep = property_report(top)
    report(f"chain depth {cfg.verify.chain_depth}: order {top.order} natural magic, mu={rep.summation_index}",
           check_natural(top) and rep.is_magic)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir")
    parser.add_argument("--tol", type=float, default=VerifyConfig.tol)
    parser.add_argument("--one-based", action="store_true")
    args = parser.parse_args(argv)
    cfg = ReproConfig(out_dir=args.out_dir, verify=replace(VerifyConfig(), tol=args.tol, one_based=args.one_based))
    if cfg.out_dir:
        Path(cfg.out_dir).mkdir(parents=True, exist_ok=True)
    built = rebuild(cfg)
    spectra(cfg, built)
    shuffle_and_chain(cfg, built)
    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
