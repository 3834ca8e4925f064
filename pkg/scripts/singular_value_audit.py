"""Which singular values does the order-12 square M^A really have?

Two sets have been published for the middle values: 216*sqrt(5), 54*sqrt(5)
(what the compounded SVD gives) and 24*sqrt(5), 6*sqrt(5) (the values of the
B compound alone).  The Jacobi oracle and a LAPACK SVD decide.
"""
import numpy as np

from commuting_magic import fixtures as fx
from commuting_magic.spectral import jacobi_singular_values

R3, R5 = np.sqrt(3.0), np.sqrt(5.0)
CANDIDATES = {
    "compounded (216, 54)": [858, 216 * R5, 54 * R5, 16 * R3, 8 * R3] + [0] * 7,
    "B-only (24, 6)": [858, 24 * R5, 6 * R5, 16 * R3, 8 * R3] + [0] * 7,
}


def main() -> None:
    oracle = jacobi_singular_values(fx.M12_A)
    lapack = np.linalg.svd(fx.M12_A.to_numpy(float), compute_uv=False)
    print("jacobi :", np.array2string(oracle[:5], precision=6))
    print("lapack :", np.array2string(lapack[:5], precision=6))
    for name, values in CANDIDATES.items():
        want = np.sort(values)[::-1]
        rel = float(np.max(np.abs(oracle - want))) / want[0]
        print(f"{name:22s} max rel error {rel:.2e}  {'MATCH' if rel <= 1e-9 else 'no'}")


if __name__ == "__main__":
    main()
