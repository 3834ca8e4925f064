"""Run-level knobs for the verification scripts."""
from __future__ import annotations

from dataclasses import dataclass, field

from .spectral import DEFAULT_TOL, MAX_SWEEPS


@dataclass(frozen=True)
class VerifyConfig:
    tol: float = DEFAULT_TOL  # relative Frobenius tolerance for MS = SJ and M = U S V^T
    max_sweeps: int = MAX_SWEEPS  # Jacobi sweep limit
    chain_depth: int = 2  # order 81 from the order-3 seed
    one_based: bool = False  # offset written squares by +1


@dataclass(frozen=True)
class ReproConfig:
    out_dir: str | None = None  # write every rebuilt square here when set
    verify: VerifyConfig = field(default_factory=VerifyConfig)
