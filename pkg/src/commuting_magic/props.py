"""Structural predicates on integer squares.

Every predicate returns a verdict rather than raising, so they compose into a
single :class:`PropertyReport`.  Only genuine misuse (mismatched orders in the
pair predicates) raises.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import ShapeError
from .exact import IntSquare, multiply


def magic_sum(n: int) -> int:
    """Summation index of a natural square of order n (entries 0..n^2-1)."""
    return n * (n * n - 1) // 2


class MagicCheck(NamedTuple):
    is_semi_magic: bool
    is_magic: bool
    summation_index: Optional[int]


class RegularCheck(NamedTuple):
    is_regular: bool
    constant: Optional[int]


class CommuteCheck(NamedTuple):
    commutes: bool
    product_scalar: Optional[int]  # c when A @ B == c * E


@dataclass(frozen=True)
class PropertyReport:
    order: int
    summation_index: Optional[int]
    is_semi_magic: bool
    is_magic: bool
    is_natural: bool
    is_regular: bool
    is_pandiagonal: bool
    regular_constant: Optional[int]

    def as_dict(self) -> dict:
        return asdict(self)


def _exact(m: IntSquare) -> np.ndarray:
    # object dtype so long sums cannot wrap
    return m.entries.astype(object)


def check_magic(m: IntSquare) -> MagicCheck:
    a = _exact(m)
    n = m.order
    rows = set(a.sum(axis=1).tolist())
    cols = set(a.sum(axis=0).tolist())
    if len(rows) != 1 or rows != cols:
        return MagicCheck(False, False, None)
    (mu,) = rows
    diag = sum(a[i, i] for i in range(n))
    anti = sum(a[i, n - 1 - i] for i in range(n))
    return MagicCheck(True, diag == mu and anti == mu, int(mu))


def check_natural(m: IntSquare) -> bool:
    n = m.order
    return bool(np.array_equal(np.sort(m.entries, axis=None), np.arange(n * n)))


def check_regular(m: IntSquare) -> RegularCheck:
    """M + R M R == (2 mu / n) E, i.e. centro-symmetric pairs share one sum."""
    mc = check_magic(m)
    if not mc.is_magic:
        return RegularCheck(False, None)
    a = _exact(m)
    paired = a + a[::-1, ::-1]
    values = set(paired.ravel().tolist())
    if len(values) != 1:
        return RegularCheck(False, None)
    (c,) = values
    if c * m.order != 2 * mc.summation_index:
        return RegularCheck(False, None)
    return RegularCheck(True, int(c))


def broken_diagonal_sums(m: IntSquare) -> tuple[list[int], list[int]]:
    """Sums of the n leading and n trailing broken diagonals (wrapped columns)."""
    a = _exact(m)
    n = m.order
    i = np.arange(n)
    down = [int(sum(a[i, (i + k) % n])) for k in range(n)]
    up = [int(sum(a[i, (k - i) % n])) for k in range(n)]
    return down, up


def check_pandiagonal(m: IntSquare) -> bool:
    mc = check_magic(m)
    if not mc.is_magic:
        return False
    down, up = broken_diagonal_sums(m)
    return all(s == mc.summation_index for s in down + up)


def check_orthogonal_pair(a: IntSquare, b: IntSquare) -> bool:
    """No value pair (a_ij, b_ij) occurs twice."""
    if a.order != b.order:
        raise ShapeError(f"orders differ: {a.order} vs {b.order}")
    pairs = set(zip(a.entries.ravel().tolist(), b.entries.ravel().tolist()))
    return len(pairs) == a.order * a.order


def check_commute(a: IntSquare, b: IntSquare) -> CommuteCheck:
    if a.order != b.order:
        raise ShapeError(f"orders differ: {a.order} vs {b.order}")
    ab = multiply(a, b)
    ba = multiply(b, a)
    flat = ab.entries.ravel()
    c = int(flat[0])
    scalar = c if bool(np.all(flat == flat[0])) else None
    return CommuteCheck(ab == ba, scalar)


def property_report(m: IntSquare) -> PropertyReport:
    mc = check_magic(m)
    reg = check_regular(m)
    return PropertyReport(
        order=m.order,
        summation_index=mc.summation_index,
        is_semi_magic=mc.is_semi_magic,
        is_magic=mc.is_magic,
        # a natural square only counts once rows/columns agree, so mu is pinned
        is_natural=mc.is_semi_magic and check_natural(m),
        is_regular=reg.is_regular,
        is_pandiagonal=check_pandiagonal(m),
        regular_constant=reg.constant,
    )
