"""Plain-text square files: a line holding n, then n rows of n integers."""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import FormatError
from .exact import IntSquare


def render(m: IntSquare, offset: int = 0) -> str:
    """Serialize with single spaces and a trailing newline.

    ``offset`` is added to every entry (1 gives one-based naturals).
    """
    rows = [" ".join(str(int(x) + offset) for x in row) for row in m.entries]
    return f"{m.order}\n" + "\n".join(rows) + "\n"


def parse(text: str, offset: int = 0) -> IntSquare:
    """Inverse of :func:`render`; ``offset`` is subtracted from every entry."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty square file")
    if len(lines[0]) != 1:
        raise FormatError("first line must hold the order alone")
    try:
        n = int(lines[0][0])
        rows = [[int(tok) - offset for tok in ln] for ln in lines[1:]]
    except ValueError as exc:
        raise FormatError(f"non-integer token: {exc}") from None
    if n < 1:
        raise FormatError(f"order must be positive, got {n}")
    if len(rows) != n or any(len(r) != n for r in rows):
        raise FormatError(f"expected {n} rows of {n} integers")
    try:
        return IntSquare(np.array(rows, dtype=object))
    except OverflowError as exc:
        raise FormatError(str(exc)) from None


def read_square(path: str | Path, offset: int = 0) -> IntSquare:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text, offset)


def write_square(path: str | Path, m: IntSquare, offset: int = 0) -> None:
    Path(path).write_text(render(m, offset))
