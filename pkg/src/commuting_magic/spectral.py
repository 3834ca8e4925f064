"""Jordan forms and SVDs of compounded squares, plus the oracles that check them.

Seed decompositions (eigenvector matrix S with upper-triangular J, or U, Sigma,
V) are compounded with Kronecker products.  This works because a magic seed
shares its eigenvectors and singular vectors with the all-ones matrix, whose
eigenvalue/singular-value diagonal is diag[n, 0, ..., 0] in that basis.

Nothing here normalizes a compounded J to canonical Jordan layout: the
contract is ``M S = S J`` and nothing more.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

import numpy as np

from .errors import ConvergenceError, FormatError, PreconditionError, ShapeError
from .exact import (
    BigPoly,
    IntSquare,
    as_complex,
    as_real,
    charpoly_exact,
    exact_factor_check,
    ones_matrix,
)

DEFAULT_TOL = 1e-9
MAX_SWEEPS = 100
MAX_CONDITION = 1e12


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Eigenvector matrix ``s`` and upper-triangular eigenvalue matrix ``j``."""

    s: np.ndarray
    j: np.ndarray

    def __post_init__(self):
        s, j = as_complex(self.s), as_complex(self.j)
        if s.shape[0] != s.shape[1] or s.shape != j.shape:
            raise ShapeError(f"s {s.shape} and j {j.shape} must be equal square shapes")
        if np.any(np.tril(j, -1) != 0):
            raise PreconditionError("j must be upper triangular")
        if np.linalg.cond(s) > MAX_CONDITION:
            raise PreconditionError("eigenvector matrix is numerically singular")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "j", j)

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.diag(self.j).copy()


@dataclass(frozen=True, eq=False)
class SvdSystem:
    """``u``, ``v`` orthogonal, ``sigma`` the (unsorted) diagonal of Sigma."""

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        u, v = as_real(self.u), as_real(self.v)
        sigma = np.array(self.sigma, dtype=np.float64).ravel()
        n = u.shape[0]
        if u.shape != (n, n) or v.shape != (n, n) or sigma.shape != (n,):
            raise ShapeError(f"inconsistent SVD shapes u{u.shape} sigma{sigma.shape} v{v.shape}")
        if not np.all(np.isfinite(sigma)):
            raise PreconditionError("singular values must be finite")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "v", v)


def ones_eigen(n: int) -> np.ndarray:
    """D_E = diag[n, 0, ..., 0] as a complex matrix."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    d = np.zeros((n, n), dtype=np.complex128)
    d[0, 0] = n
    return d


def ones_svd(n: int) -> np.ndarray:
    """Diagonal of Sigma_E = [n, 0, ..., 0]."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    out = np.zeros(n)
    out[0] = n
    return out


# ---------------------------------------------------------------------------
# verification


class EigenVerdict(NamedTuple):
    passed: bool
    residual: float  # ||M s - s j||_F / max(1, ||M||_F)


class SvdVerdict(NamedTuple):
    passed: bool
    orthogonality_u: float
    orthogonality_v: float
    reconstruction: float  # relative, like EigenVerdict.residual
    nonnegative: bool


def _dense(m) -> np.ndarray:
    return np.asarray(m, dtype=np.float64) if isinstance(m, IntSquare) else np.asarray(m)


def verify_eigen(m, e: EigenSystem, tol: float = DEFAULT_TOL) -> EigenVerdict:
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    a = _dense(m)
    if a.shape != e.s.shape:
        raise ShapeError(f"matrix {a.shape} vs eigensystem {e.s.shape}")
    scale = max(1.0, float(np.linalg.norm(a)))
    residual = float(np.linalg.norm(a @ e.s - e.s @ e.j)) / scale
    return EigenVerdict(residual <= tol, residual)


def verify_svd(m, s: SvdSystem, tol: float = DEFAULT_TOL) -> SvdVerdict:
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    a = _dense(m)
    if a.shape != s.u.shape:
        raise ShapeError(f"matrix {a.shape} vs svd {s.u.shape}")
    eye = np.eye(a.shape[0])
    ou = float(np.linalg.norm(s.u.T @ s.u - eye))
    ov = float(np.linalg.norm(s.v.T @ s.v - eye))
    scale = max(1.0, float(np.linalg.norm(a)))
    rec = float(np.linalg.norm(a - (s.u * s.sigma) @ s.v.T)) / scale
    nonneg = bool(np.all(s.sigma >= 0))
    return SvdVerdict(ou <= tol and ov <= tol and rec <= tol and nonneg, ou, ov, rec, nonneg)


# ---------------------------------------------------------------------------
# compounding


class CompoundEigen(NamedTuple):
    s: np.ndarray
    j_a: np.ndarray
    j_b: np.ndarray


class CompoundSvd(NamedTuple):
    u: np.ndarray
    v: np.ndarray
    sigma_a: np.ndarray
    sigma_b: np.ndarray


def _check_ones_eigen(e: EigenSystem, tol: float) -> None:
    n = e.s.shape[0]
    shared = EigenSystem(e.s, ones_eigen(n))
    if not verify_eigen(ones_matrix(n), shared, tol).passed:
        raise PreconditionError(f"order-{n} eigenvectors are not shared with E_{n}")


def compound_eigen(
    eig_m: EigenSystem,
    eig_n: EigenSystem,
    seed_m: IntSquare | None = None,
    seed_n: IntSquare | None = None,
    tol: float = DEFAULT_TOL,
) -> CompoundEigen:
    """S = S_m (x) S_n, J_A = D_Em (x) J_n, J_B = J_m (x) D_En.

    Both seed systems must share eigenvectors with the all-ones matrix; when
    the seeds themselves are passed they are checked too.
    """
    for e, seed in ((eig_m, seed_m), (eig_n, seed_n)):
        _check_ones_eigen(e, tol)
        if seed is not None and not verify_eigen(seed, e, tol).passed:
            raise PreconditionError(f"eigensystem does not describe the order-{seed.order} seed")
    m, n = eig_m.s.shape[0], eig_n.s.shape[0]
    return CompoundEigen(
        np.kron(eig_m.s, eig_n.s),
        np.kron(ones_eigen(m), eig_n.j),
        np.kron(eig_m.j, ones_eigen(n)),
    )


def compose_eigen_m(j_a, j_b, m: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalue matrices of M^A = A + n^2 B and M^B = B + m^2 A."""
    j_a, j_b = np.asarray(j_a), np.asarray(j_b)
    if j_a.shape != j_b.shape:
        raise ShapeError(f"{j_a.shape} vs {j_b.shape}")
    return j_a + n * n * j_b, j_b + m * m * j_a


def _check_ones_svd(s: SvdSystem, tol: float) -> None:
    n = s.u.shape[0]
    shared = SvdSystem(s.u, ones_svd(n), s.v)
    if not verify_svd(ones_matrix(n), shared, tol).passed:
        raise PreconditionError(f"order-{n} singular vectors are not shared with E_{n}")


def compound_svd(
    svd_m: SvdSystem,
    svd_n: SvdSystem,
    seed_m: IntSquare | None = None,
    seed_n: IntSquare | None = None,
    tol: float = DEFAULT_TOL,
) -> CompoundSvd:
    for s, seed in ((svd_m, seed_m), (svd_n, seed_n)):
        _check_ones_svd(s, tol)
        if seed is not None and not verify_svd(seed, s, tol).passed:
            raise PreconditionError(f"SVD does not describe the order-{seed.order} seed")
    m, n = svd_m.u.shape[0], svd_n.u.shape[0]
    return CompoundSvd(
        np.kron(svd_m.u, svd_n.u),
        np.kron(svd_m.v, svd_n.v),
        np.kron(ones_svd(m), svd_n.sigma),
        np.kron(svd_m.sigma, ones_svd(n)),
    )


def compose_svd_m(sigma_a, sigma_b, m: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Singular-value diagonals of M^A and M^B.

    The coefficients mirror the Euler composition (n^2 on B for M^A, m^2 on A
    for M^B); that is what the shared U, V argument gives.
    """
    sa, sb = np.asarray(sigma_a, dtype=float), np.asarray(sigma_b, dtype=float)
    if sa.shape != sb.shape:
        raise ShapeError(f"{sa.shape} vs {sb.shape}")
    return sa + n * n * sb, sb + m * m * sa


# ---------------------------------------------------------------------------
# numerical oracle


def jacobi_eigenvalues(a: np.ndarray, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius mass drops to 1e-24 of the
    total squared norm.  Pivot order is fixed (row-cyclic), so results are
    deterministic.
    """
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    total = float(np.sum(a * a))
    if total == 0.0:
        return np.zeros(n)
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        # summed directly: ||A||^2 - sum(diag^2) cancels far above the threshold
        off = float(np.sum(a[offdiag] ** 2))
        if off <= 1e-24 * total:
            return np.diag(a).copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                if abs(apq) <= 1e-18 * (abs(a[p, p]) + abs(a[q, q])):
                    # below roundoff of the diagonal; a rotation would not change it
                    a[p, q] = a[q, p] = 0.0
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def jacobi_singular_values(m: IntSquare, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Singular values of an integer square, largest first.

    M M^T is formed exactly in Python integers, then diagonalized by Jacobi.
    Eigenvalues within n * eps * ||M M^T||_F of zero are roundoff on a
    rank-deficient product and are clamped to zero before the square root.
    """
    exact = m.entries.astype(object)
    gram = exact.dot(exact.T)
    g = np.array(gram.tolist(), dtype=np.float64)
    lam = jacobi_eigenvalues(g, max_sweeps)
    floor = m.order * np.finfo(float).eps * float(np.linalg.norm(g))
    lam = np.where(lam <= floor, 0.0, lam)
    return np.sort(np.sqrt(lam))[::-1]


# ---------------------------------------------------------------------------
# exact spectrum claims

_FACTOR = re.compile(
    r"""\s*\*?\s*(?:
        (?P<pow>L)(?:\^(?P<pow_k>\d+))?(?![\^\d])
      | \(\s*L\s*(?P<lin_sign>[+-])\s*(?P<lin>\d+)\s*\)(?:\^(?P<lin_k>\d+))?
      | \(\s*L\^2\s*(?P<quad_sign>[+-])\s*(?P<quad>\d+)\s*\)(?:\^(?P<quad_k>\d+))?
    )\s*""",
    re.VERBOSE,
)


def parse_claim(text: str) -> list[BigPoly]:
    """Parse a product such as ``L^4(L-360)(L^2+216)`` into monic factors.

    Accepted factors: ``L``, ``L^k``, ``(L-a)``, ``(L+a)``, ``(L^2+b)``,
    ``(L^2-b)``, each optionally raised to ``^k``.  ``λ`` may stand for ``L``.
    """
    src = text.replace("λ", "L").strip()
    if not src:
        raise FormatError("empty spectrum claim")
    factors: list[BigPoly] = []
    pos = 0
    while pos < len(src):
        mt = _FACTOR.match(src, pos)
        if not mt or mt.end() == pos:
            raise FormatError(f"cannot parse claim at {src[pos:]!r}")
        g = mt.groupdict()
        if g["pow"]:
            factors.append(BigPoly.monomial(int(g["pow_k"] or 1)))
        elif g["lin"] is not None:
            a = int(g["lin"]) * (1 if g["lin_sign"] == "-" else -1)
            factors.extend([BigPoly.linear(a)] * int(g["lin_k"] or 1))
        else:
            b = int(g["quad"]) * (1 if g["quad_sign"] == "+" else -1)
            factors.extend([BigPoly.quadratic(b)] * int(g["quad_k"] or 1))
        pos = mt.end()
    return factors


def _allowed_factor(f: BigPoly) -> bool:
    c = f.coeffs
    if not c or c[-1] != 1:
        return False
    if all(x == 0 for x in c[:-1]):
        return True  # L^k
    return len(c) == 2 or (len(c) == 3 and c[1] == 0)


def spectrum_claim_check(m: IntSquare, claim: Union[str, Sequence[BigPoly]]) -> bool:
    """True iff the claimed factorization is exactly det(L I - M)."""
    factors = parse_claim(claim) if isinstance(claim, str) else list(claim)
    bad = [str(f) for f in factors if not _allowed_factor(f)]
    if bad:
        raise PreconditionError(f"claim factors must be L^k, (L-a) or (L^2+b): {bad}")
    return exact_factor_check(charpoly_exact(m), factors)
