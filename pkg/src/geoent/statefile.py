"""Plain-text state files.

::

    # optional comments
    dims: 2 2 2
    0 0 0  0.94868329805051377  0
    1 1 1  0.31622776601683794  0

One line per nonzero amplitude: the 0-based local indices, then the real and
imaginary parts.  Unlisted amplitudes are zero.
"""
from __future__ import annotations

import io
from pathlib import Path

import numpy as np

from .errors import InvalidInputError, ShapeError
from .state import PureState


class StateFileError(InvalidInputError):
    """Malformed state file."""


def parse_state(text: str) -> PureState:
    dims = None
    amps = None
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("dims:"):
            if dims is not None:
                raise StateFileError(f"line {lineno}: duplicate dims header")
            try:
                dims = tuple(int(x) for x in line[5:].split())
            except ValueError:
                raise StateFileError(f"line {lineno}: bad dims header") from None
            if not dims or any(d < 2 for d in dims):
                raise StateFileError(f"line {lineno}: local dimensions must be >= 2")
            amps = np.zeros(dims, dtype=complex)
            continue
        if dims is None:
            raise StateFileError(f"line {lineno}: amplitude before dims header")
        fields = line.split()
        if len(fields) != len(dims) + 2:
            raise StateFileError(f"line {lineno}: expected {len(dims)} indices and re, im")
        try:
            idx = tuple(int(x) for x in fields[:-2])
            re, im = float(fields[-2]), float(fields[-1])
        except ValueError:
            raise StateFileError(f"line {lineno}: cannot parse {line!r}") from None
        if any(not 0 <= i < d for i, d in zip(idx, dims)):
            raise StateFileError(f"line {lineno}: index {idx} out of range for dims {dims}")
        if idx in seen:
            raise StateFileError(f"line {lineno}: duplicate index {idx}")
        seen.add(idx)
        amps[idx] = complex(re, im)
    if dims is None:
        raise StateFileError("missing dims header")
    return PureState(amps)


def format_state(s: PureState, comment: str | None = None) -> str:
    out = io.StringIO()
    if comment:
        for line in comment.splitlines():
            out.write(f"# {line}\n")
    out.write("dims: " + " ".join(map(str, s.dims)) + "\n")
    for idx in np.ndindex(*s.dims):
        a = s.amps[idx]
        if a != 0:
            out.write(" ".join(map(str, idx)) + f"  {a.real:.17g}  {a.imag:.17g}\n")
    return out.getvalue()


def read_state(path) -> PureState:
    try:
        return parse_state(Path(path).read_text())
    except ShapeError as exc:
        raise StateFileError(str(exc)) from None


def write_state(path, s: PureState, comment: str | None = None):
    Path(path).write_text(format_state(s, comment))
