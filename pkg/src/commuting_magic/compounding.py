"""Kronecker compounding of magic squares and the constructions built on it.

Naming follows the usual convention: a seed of order ``n`` is tiled into the
``A`` compound and a seed of order ``m`` is spread over blocks in ``B``::

    A = E_m (x) M_n        B = M_m (x) E_n
    M^A = A + n^2 B        M^B = B + m^2 A
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import IntegerOverflowError, PreconditionError, ShapeError
from .exact import INT64_MAX, IntSquare, add, flip_matrix, kron, multiply, ones_matrix, scale
from .props import check_magic, check_regular


def _require_magic(seed: IntSquare, role: str) -> int:
    mc = check_magic(seed)
    if not mc.is_magic:
        raise PreconditionError(f"{role} seed of order {seed.order} is not a magic square")
    return mc.summation_index


def compound_a(seed_n: IntSquare, m: int) -> IntSquare:
    """E_m (x) seed_n: m*m replicas of the seed."""
    _require_magic(seed_n, "A")
    return kron(ones_matrix(m), seed_n)


def compound_b(seed_m: IntSquare, n: int) -> IntSquare:
    """seed_m (x) E_n: every seed entry blown up into an n-by-n block."""
    _require_magic(seed_m, "B")
    return kron(seed_m, ones_matrix(n))


@dataclass(frozen=True)
class CompoundPair:
    a: IntSquare
    b: IntSquare
    m: int
    n: int

    def __post_init__(self):
        if self.a.order != self.m * self.n or self.b.order != self.m * self.n:
            raise ShapeError(
                f"pair orders ({self.a.order}, {self.b.order}) do not match m*n = {self.m * self.n}"
            )

    @property
    def order(self) -> int:
        return self.m * self.n


def compound(seed_m: IntSquare, seed_n: IntSquare) -> CompoundPair:
    """Build the (A, B) pair from an order-m and an order-n magic seed."""
    m, n = seed_m.order, seed_n.order
    return CompoundPair(compound_a(seed_n, m), compound_b(seed_m, n), m, n)


def euler_compose(pair: CompoundPair) -> tuple[IntSquare, IntSquare]:
    """(A + n^2 B, B + m^2 A)."""
    m, n = pair.m, pair.n
    ma = add(pair.a, scale(n * n, pair.b))
    mb = add(pair.b, scale(m * m, pair.a))
    return ma, mb


@dataclass(frozen=True)
class SubsquareGrid:
    """m-by-m grid of order-n magic squares sharing one summation index."""

    m: int
    n: int
    cells: tuple[tuple[IntSquare, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        if len(cells) != self.m or any(len(row) != self.m for row in cells):
            raise ShapeError(f"grid must be {self.m}x{self.m}")
        sums = set()
        for row in cells:
            for cell in row:
                if cell.order != self.n:
                    raise ShapeError(f"cell of order {cell.order}, expected {self.n}")
                sums.add(_require_magic(cell, "grid cell"))
        if len(sums) != 1:
            raise PreconditionError(f"inconsistent summation indices across cells: {sorted(sums)}")

    @property
    def summation_index(self) -> int:
        return check_magic(self.cells[0][0]).summation_index


def generalized_a(grid: SubsquareGrid) -> IntSquare:
    """Assemble the order-mn square whose (i, j) block is ``grid.cells[i][j]``."""
    return IntSquare(np.block([[c.entries for c in row] for row in grid.cells]))


class Phase(enum.Enum):
    """The eight dihedral images of a square, in their serialized order."""

    IDENTITY = "identity"
    ROT90 = "rot90"  # counter-clockwise
    ROT180 = "rot180"
    ROT270 = "rot270"
    TRANSPOSE = "transpose"
    ANTI_TRANSPOSE = "anti-transpose"
    FLIP_HORIZONTAL = "flip-horizontal"  # mirror left/right
    FLIP_VERTICAL = "flip-vertical"  # mirror top/bottom


_PHASE_FUNCS = {
    Phase.IDENTITY: lambda a: a,
    Phase.ROT90: lambda a: np.rot90(a, 1),
    Phase.ROT180: lambda a: np.rot90(a, 2),
    Phase.ROT270: lambda a: np.rot90(a, 3),
    Phase.TRANSPOSE: lambda a: a.T,
    Phase.ANTI_TRANSPOSE: lambda a: a[::-1, ::-1].T,
    Phase.FLIP_HORIZONTAL: lambda a: a[:, ::-1],
    Phase.FLIP_VERTICAL: lambda a: a[::-1, :],
}


def apply_phase(m: IntSquare, p: Phase | str) -> IntSquare:
    return IntSquare(_PHASE_FUNCS[Phase(p)](m.entries))


def rotation_duo(m: IntSquare) -> tuple[IntSquare, IntSquare]:
    """A regular square together with its 180-degree rotation R M R."""
    if not check_regular(m).is_regular:
        raise PreconditionError("rotation duo needs a regular magic square")
    r = flip_matrix(m.order)
    return m, multiply(multiply(r, m), r)


def shuffle_permutation(n: int) -> IntSquare:
    """Order-n^2 permutation whose block (i, j) holds a single 1 at (j, i).

    Conjugation by it swaps E_n (x) M_n with M_n (x) E_n.
    """
    if n < 1:
        raise PreconditionError("n must be >= 1")
    p = np.zeros((n * n, n * n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            p[i * n + j, j * n + i] = 1
    return IntSquare(p)


def apply_shuffle(p: IntSquare, m: IntSquare) -> IntSquare:
    if p.order != m.order:
        raise ShapeError(f"permutation of order {p.order} cannot act on order {m.order}")
    return multiply(multiply(p, m), p)


MAX_CHAIN_ORDER = 1024


def _entry_bound(seed: IntSquare) -> int:
    """Largest |entry| of M^A or M^B compounded from seed with itself."""
    n = seed.order
    top = max(abs(int(seed.entries.max())), abs(int(seed.entries.min())))
    return top + n * n * top


def compound_chain(
    seed: IntSquare, depth: int, feed: Literal["A", "B"] = "A"
) -> list[CompoundPair]:
    """Repeatedly compound a seed with itself, feeding M^A (or M^B) forward.

    Stage k compounds the current seed with itself, so orders go
    n, n^2, n^4, ...  Returns one pair per stage; ``euler_compose`` of the
    last pair is the highest-order square.
    """
    if depth < 1:
        raise PreconditionError("depth must be >= 1")
    if feed not in ("A", "B"):
        raise PreconditionError("feed must be 'A' or 'B'")
    stages: list[CompoundPair] = []
    current = seed
    for _ in range(depth):
        if current.order**2 > MAX_CHAIN_ORDER:
            raise PreconditionError(
                f"stage order {current.order**2} exceeds the supported {MAX_CHAIN_ORDER}"
            )
        if _entry_bound(current) > INT64_MAX:
            raise IntegerOverflowError(
                f"compounding order {current.order} would exceed 64-bit entries"
            )
        pair = compound(current, current)
        stages.append(pair)
        ma, mb = euler_compose(pair)
        current = ma if feed == "A" else mb
    return stages

