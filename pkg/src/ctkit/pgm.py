"""Plain PGM (P2) image reading and writing for the rotation demo."""
from __future__ import annotations

import numpy as np


class PgmError(ValueError):
    pass


def read_pgm(text: str) -> np.ndarray:
    tokens: list[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0]
        tokens.extend(line.split())
    if not tokens or tokens[0] != "P2":
        raise PgmError("not a plain P2 PGM")
    try:
        width, height, maxval = (int(t) for t in tokens[1:4])
        values = [int(t) for t in tokens[4:]]
    except ValueError as exc:
        raise PgmError(f"bad PGM token: {exc}") from exc
    if len(values) != width * height:
        raise PgmError(
            f"expected {width * height} samples, found {len(values)}"
        )
    if maxval < 1 or any(not 0 <= v <= maxval for v in values):
        raise PgmError("sample outside [0, maxval]")
    return np.array(values, dtype=np.int64).reshape(height, width)


def write_pgm(grid: np.ndarray, maxval: int | None = None) -> str:
    grid = np.asarray(grid)
    if grid.ndim != 2:
        raise PgmError("grid must be 2-D")
    if maxval is None:
        maxval = max(1, int(grid.max()))
    lines = ["P2", f"{grid.shape[1]} {grid.shape[0]}", str(maxval)]
    lines.extend(" ".join(str(int(v)) for v in row) for row in grid)
    return "\n".join(lines) + "\n"
