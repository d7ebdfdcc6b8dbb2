"""Interleaved sequences: the K x T array form and its shift decomposition.

A (K, T) interleaved sequence u is read row-major out of a K x T array
whose i-th column is a period-K sequence: u(k*T + i) = column_i(k).
Columns are arbitrary here (the generalized form); ``is_classical`` reports
whether every nonzero column is a shift of one base sequence.

The zero-column / one-column pair built by ``construction_a`` and
``construction_b`` differs exactly on the K positions that are multiples
of T.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import BinarySequence


class SpecFormatError(ValueError):
    """Malformed interleaved-spec text."""


@dataclass(frozen=True)
class InterleavedSpec:
    """T columns of common period K; build() realizes the row-major readout."""

    columns: tuple[BinarySequence, ...]

    def __post_init__(self) -> None:
        if len(self.columns) < 2:
            raise ValueError(f"need at least 2 columns, got {len(self.columns)}")
        k = self.columns[0].period
        for i, col in enumerate(self.columns):
            if col.period != k:
                raise ValueError(
                    f"column {i} has period {col.period}, expected {k}"
                )

    @property
    def k(self) -> int:
        return self.columns[0].period

    @property
    def t(self) -> int:
        return len(self.columns)

    @property
    def period(self) -> int:
        return self.k * self.t


@dataclass(frozen=True)
class ShiftDecomposition:
    """tau = tau1*T + tau2 with 0 <= tau2 <= T-1."""

    tau1: int
    tau2: int


def shift_decompose(tau: int, t: int) -> ShiftDecomposition:
    if t < 1:
        raise ValueError(f"column count must be >= 1, got {t}")
    tau1, tau2 = divmod(tau, t)
    return ShiftDecomposition(tau1, tau2)


def build(spec: InterleavedSpec) -> BinarySequence:
    """Row-major readout: result(k*T + i) = columns[i](k)."""
    k, t = spec.k, spec.t
    word = 0
    for i, col in enumerate(spec.columns):
        for row in range(k):
            word |= ((col.word >> row) & 1) << (row * t + i)
    return BinarySequence(k * t, word)


def to_array(u: BinarySequence, k: int, t: int) -> InterleavedSpec:
    """Inverse of build: slice u into its T period-K columns."""
    if k < 1 or t < 2:
        raise ValueError(f"need K >= 1 and T >= 2, got K={k}, T={t}")
    if k * t != u.period:
        raise ValueError(f"K*T = {k * t} does not match the period {u.period}")
    cols = []
    for i in range(t):
        word = 0
        for row in range(k):
            word |= ((u.word >> (row * t + i)) & 1) << row
        cols.append(BinarySequence(k, word))
    return InterleavedSpec(tuple(cols))


def shifted_array(spec: InterleavedSpec, tau: int) -> InterleavedSpec:
    """Array form of the left tau-shift of build(spec).

    With tau = tau1*T + tau2 the columns rotate left by tau2; the first
    T - tau2 of them pick up a column shift of tau1, the wrapped ones tau1+1.
    Satisfies build(shifted_array(spec, tau)) == build(spec).shift_left(tau).
    """
    t = spec.t
    dec = shift_decompose(tau % spec.period, t)
    cols = []
    for i in range(t):
        src = dec.tau2 + i
        if src < t:
            cols.append(spec.columns[src].shift_left(dec.tau1))
        else:
            cols.append(spec.columns[src - t].shift_left(dec.tau1 + 1))
    return InterleavedSpec(tuple(cols))


def construction_a(columns: Sequence[BinarySequence]) -> InterleavedSpec:
    """Spec with an all-zero column 0 followed by the given columns."""
    cols = tuple(columns)
    if not cols:
        raise ValueError("need at least one column besides the constant one")
    return InterleavedSpec((BinarySequence.zeros(cols[0].period),) + cols)


def construction_b(columns: Sequence[BinarySequence]) -> InterleavedSpec:
    """Spec with an all-one column 0 followed by the given columns."""
    cols = tuple(columns)
    if not cols:
        raise ValueError("need at least one column besides the constant one")
    return InterleavedSpec((BinarySequence.ones(cols[0].period),) + cols)


def is_classical(spec: InterleavedSpec) -> bool:
    """True when every nonzero column is a shift of one base sequence
    (all-zero columns are allowed alongside)."""
    nonzero = [c for c in spec.columns if c.word != 0]
    if not nonzero:
        return True
    base = nonzero[0]
    shifts = {base.shift_left(d).word for d in range(base.period)}
    return all(c.word in shifts for c in nonzero)


ZERO_TOKEN = "ZERO"
ONE_TOKEN = "ONE"


def parse_spec(text: str, source: str = "<input>") -> InterleavedSpec:
    """Spec file format: first line "K T", then T lines each holding a
    K-character bitstring or the token ZERO / ONE for a constant column.
    '#' comment lines and blank lines are skipped.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((lineno, line))
    if not lines:
        raise SpecFormatError(f"{source}: empty spec file")
    header_lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise SpecFormatError(
            f"{source}:{header_lineno}: header must be 'K T', got {header!r}"
        )
    try:
        k, t = int(parts[0]), int(parts[1])
    except ValueError:
        raise SpecFormatError(
            f"{source}:{header_lineno}: header must hold two integers, got {header!r}"
        ) from None
    if k < 1 or t < 2:
        raise SpecFormatError(f"{source}:{header_lineno}: need K >= 1 and T >= 2")
    body = lines[1:]
    if len(body) != t:
        raise SpecFormatError(
            f"{source}: expected {t} column lines, found {len(body)}"
        )
    cols = []
    for lineno, token in body:
        if token == ZERO_TOKEN:
            cols.append(BinarySequence.zeros(k))
            continue
        if token == ONE_TOKEN:
            cols.append(BinarySequence.ones(k))
            continue
        if len(token) != k:
            raise SpecFormatError(
                f"{source}:{lineno}: column has length {len(token)}, expected {k}"
            )
        for col_idx, ch in enumerate(token, 1):
            if ch not in "01":
                raise SpecFormatError(
                    f"{source}:{lineno}:{col_idx}: invalid character {ch!r},"
                    " expected '0' or '1'"
                )
        cols.append(BinarySequence.from_string(token))
    return InterleavedSpec(tuple(cols))


def format_spec(spec: InterleavedSpec) -> str:
    lines = [f"{spec.k} {spec.t}"]
    for col in spec.columns:
        if col.word == 0:
            lines.append(ZERO_TOKEN)
        elif col.word == (1 << col.period) - 1:
            lines.append(ONE_TOKEN)
        else:
            lines.append(str(col))
    return "\n".join(lines) + "\n"


def read_spec(path: str) -> InterleavedSpec:
    with open(path, "r", encoding="ascii") as fh:
        return parse_spec(fh.read(), source=str(path))


def write_spec(spec: InterleavedSpec, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_spec(spec))
