"""Dense matrix kernels and exact characteristic polynomials.

Integer squares live in :class:`IntSquare`, a read-only wrapper around an
``int64`` array whose arithmetic is overflow-checked.  Real and complex
matrices are plain ``numpy`` arrays (``float64`` / ``complex128``); the helpers
here accept either kind and dispatch on it.

Exactness claims are made only through :class:`BigPoly`, whose coefficients
are Python integers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import IntegerOverflowError, PreconditionError, ShapeError

INT64_MAX = int(np.iinfo(np.int64).max)
INT64_MIN = int(np.iinfo(np.int64).min)


def _to_int64(values) -> np.ndarray:
    """Convert exact integers (possibly object dtype) to int64, or raise."""
    arr = np.asarray(values)
    if arr.dtype == object:
        flat = [int(v) for v in arr.ravel()]
        if flat and (max(flat) > INT64_MAX or min(flat) < INT64_MIN):
            raise IntegerOverflowError(
                "result does not fit in 64-bit integers; "
                "use the arbitrary-precision path (object arrays / charpoly_exact)"
            )
        return np.array(flat, dtype=np.int64).reshape(arr.shape)
    if arr.dtype.kind in "iu":
        if arr.dtype.kind == "u" and arr.size and arr.max() > INT64_MAX:
            raise IntegerOverflowError("unsigned entry exceeds int64 range")
        return arr.astype(np.int64)
    if arr.dtype.kind == "b":
        return arr.astype(np.int64)
    raise PreconditionError(f"integer entries required, got dtype {arr.dtype}")


def _object(values) -> np.ndarray:
    arr = np.asarray(values)
    out = np.empty(arr.shape, dtype=object)
    out.ravel()[:] = [int(v) for v in arr.ravel()]
    return out


def _maxabs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return max(abs(int(arr.max())), abs(int(arr.min())))


class IntSquare:
    """Immutable order-n square of 64-bit signed integers."""

    __slots__ = ("_a",)
    __array_ufunc__ = None  # numpy scalars defer to our reflected operators

    def __init__(self, entries):
        if isinstance(entries, IntSquare):
            arr = entries._a
        else:
            raw = np.asarray(entries)
            if raw.dtype.kind == "f":
                raise PreconditionError("IntSquare entries must be integers, not floats")
            if raw.dtype.kind not in "iub" and raw.dtype != object:
                raise PreconditionError(f"IntSquare entries must be integers, got {raw.dtype}")
            if raw.dtype == object and not all(
                isinstance(v, (int, np.integer)) and not isinstance(v, bool) for v in raw.ravel()
            ):
                raise PreconditionError("IntSquare entries must be integers")
            arr = _to_int64(raw)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise ShapeError(f"expected a non-empty square matrix, got shape {arr.shape}")
        arr = np.array(arr, dtype=np.int64, copy=True)
        arr.flags.writeable = False
        self._a = arr

    @property
    def order(self) -> int:
        return self._a.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """Read-only int64 view of the entries (row-major)."""
        return self._a

    @property
    def T(self) -> "IntSquare":
        return transpose(self)

    def to_numpy(self, dtype=np.int64) -> np.ndarray:
        return np.array(self._a, dtype=dtype)

    def tolist(self) -> list[list[int]]:
        return self._a.tolist()

    def __array__(self, dtype=None, copy=None):
        return np.array(self._a, dtype=dtype)

    def __getitem__(self, idx):
        out = self._a[idx]
        return int(out) if np.ndim(out) == 0 else out

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntSquare):
            return NotImplemented
        return self._a.shape == other._a.shape and bool(np.array_equal(self._a, other._a))

    def __hash__(self) -> int:
        return hash((self.order, self._a.tobytes()))

    def __repr__(self) -> str:
        return f"IntSquare({self._a.tolist()!r})"

    def __matmul__(self, other):
        return multiply(self, other)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, c):
        if isinstance(c, (int, np.integer)):
            return scale(int(c), self)
        return NotImplemented

    __rmul__ = __mul__


Matrix = Union[IntSquare, np.ndarray]


def as_real(values) -> np.ndarray:
    """Float64 matrix with finite entries."""
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != 2 or 0 in arr.shape:
        raise ShapeError(f"expected a non-empty 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise PreconditionError("matrix entries must be finite")
    return arr


def as_complex(values) -> np.ndarray:
    """Complex128 matrix with finite entries."""
    arr = np.array(values, dtype=np.complex128)
    if arr.ndim != 2 or 0 in arr.shape:
        raise ShapeError(f"expected a non-empty 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise PreconditionError("matrix entries must be finite")
    return arr


def ones_matrix(n: int) -> IntSquare:
    if n < 1:
        raise PreconditionError("order must be >= 1")
    return IntSquare(np.ones((n, n), dtype=np.int64))


def flip_matrix(n: int) -> IntSquare:
    """Exchange matrix: ones on the cross diagonal."""
    if n < 1:
        raise PreconditionError("order must be >= 1")
    return IntSquare(np.fliplr(np.eye(n, dtype=np.int64)))


def identity_matrix(n: int) -> IntSquare:
    if n < 1:
        raise PreconditionError("order must be >= 1")
    return IntSquare(np.eye(n, dtype=np.int64))


def _both_int(a, b) -> bool:
    return isinstance(a, IntSquare) and isinstance(b, IntSquare)


def _float_kind(a):
    if isinstance(a, IntSquare):
        return a.to_numpy(np.float64)
    return np.asarray(a)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; checked for integer squares."""
    if _both_int(a, b):
        if _maxabs(a.entries) * _maxabs(b.entries) <= INT64_MAX:
            return IntSquare(np.kron(a.entries, b.entries))
        return IntSquare(_to_int64(np.kron(_object(a.entries), _object(b.entries))))
    return np.kron(_float_kind(a), _float_kind(b))


def multiply(a: Matrix, b: Matrix) -> Matrix:
    if _both_int(a, b):
        if a.order != b.order:
            raise ShapeError(f"cannot multiply orders {a.order} and {b.order}")
        if _maxabs(a.entries) * _maxabs(b.entries) * a.order <= INT64_MAX:
            return IntSquare(a.entries @ b.entries)
        return IntSquare(_to_int64(_object(a.entries).dot(_object(b.entries))))
    x, y = _float_kind(a), _float_kind(b)
    if x.shape[-1] != y.shape[0]:
        raise ShapeError(f"cannot multiply shapes {x.shape} and {y.shape}")
    return x @ y


def add(a: Matrix, b: Matrix) -> Matrix:
    if _both_int(a, b):
        if a.order != b.order:
            raise ShapeError(f"cannot add orders {a.order} and {b.order}")
        if _maxabs(a.entries) + _maxabs(b.entries) <= INT64_MAX:
            return IntSquare(a.entries + b.entries)
        return IntSquare(_to_int64(_object(a.entries) + _object(b.entries)))
    x, y = _float_kind(a), _float_kind(b)
    if x.shape != y.shape:
        raise ShapeError(f"cannot add shapes {x.shape} and {y.shape}")
    return x + y


def scale(c, a: Matrix) -> Matrix:
    if isinstance(a, IntSquare) and isinstance(c, (int, np.integer)):
        c = int(c)
        if abs(c) * _maxabs(a.entries) <= INT64_MAX:
            return IntSquare(c * a.entries)
        return IntSquare(_to_int64(c * _object(a.entries)))
    return c * _float_kind(a)


def transpose(a: Matrix) -> Matrix:
    if isinstance(a, IntSquare):
        return IntSquare(a.entries.T)
    return np.asarray(a).T.copy()


def trace(a: Matrix):
    """Trace; a Python int for integer squares."""
    if isinstance(a, IntSquare):
        return sum(int(v) for v in np.diag(a.entries))
    x = np.asarray(a)
    if x.shape[0] != x.shape[1]:
        raise ShapeError("trace needs a square matrix")
    return np.trace(x)


def frobenius_norm(a: Matrix) -> float:
    if isinstance(a, IntSquare):
        return math.sqrt(sum(int(v) * int(v) for v in a.entries.ravel()))
    return float(np.linalg.norm(np.asarray(a), "fro"))


# ---------------------------------------------------------------------------
# exact polynomials


@dataclass(frozen=True)
class BigPoly:
    """Univariate polynomial over the integers; ``coeffs[k]`` multiplies L**k."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(v) for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "BigPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def linear(cls, a: int) -> "BigPoly":
        """L - a"""
        return cls((-a, 1))

    @classmethod
    def quadratic(cls, b: int) -> "BigPoly":
        """L^2 + b"""
        return cls((b, 0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "BigPoly") -> "BigPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return BigPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "BigPoly":
        return BigPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "BigPoly") -> "BigPoly":
        return self + (-other)

    def __mul__(self, other: "BigPoly") -> "BigPoly":
        if isinstance(other, int):
            return BigPoly(tuple(other * x for x in self.coeffs))
        if self.is_zero() or other.is_zero():
            return BigPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return BigPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BigPoly":
        out = BigPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def lowest_power(self) -> int:
        """Multiplicity of the root at zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return 0

    def float_roots(self) -> np.ndarray:
        """Numerical roots, with the exact zero roots split off first."""
        k = self.lowest_power()
        rest = self.coeffs[k:]
        nonzero = np.roots([float(c) for c in reversed(rest)]) if len(rest) > 1 else np.array([])
        return np.concatenate([np.zeros(k, dtype=complex), nonzero.astype(complex)])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            var = "" if k == 0 else ("L" if k == 1 else f"L^{k}")
            body = str(mag) if (mag != 1 or k == 0) else ""
            terms.append((sign, body + var))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, t in terms[1:]:
            text += f" {sign} {t}"
        return text


def charpoly_exact(m) -> BigPoly:
    """det(L*I - M) by the Faddeev-LeVerrier recurrence in Python integers.

    Accepts an :class:`IntSquare` or any square array of exact integers
    (including object arrays holding values beyond int64).
    """
    a = _object(m.entries if isinstance(m, IntSquare) else m)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ShapeError(f"charpoly needs a non-empty square matrix, got {a.shape}")
    n = a.shape[0]
    eye = _object(np.eye(n, dtype=np.int64))
    c = [0] * (n + 1)
    c[n] = 1
    mk = eye
    for k in range(1, n + 1):
        am = a.dot(mk)
        t = sum(am[i, i] for i in range(n))
        q, r = divmod(-t, k)
        if r != 0:
            raise AssertionError(f"Faddeev-LeVerrier: trace {t} not divisible by {k}")
        c[n - k] = q
        mk = am + q * eye
    return BigPoly(tuple(c))


def poly_product(factors: Iterable[BigPoly]) -> BigPoly:
    return reduce(lambda x, y: x * y, factors, BigPoly((1,)))


def exact_factor_check(p: BigPoly, factors: Sequence[BigPoly]) -> bool:
    """True iff the product of ``factors`` is exactly ``p``."""
    return poly_product(factors) == p
