"""Cyclic binary sequences and their elementary transforms.

A sequence of period N is a bit vector indexed t = 0..N-1 with cyclic
indexing.  Bits are packed LSB-first into a single Python int so that the
correlation kernel can work word-at-a-time with population counts; the
unpacked view is always available through ``bits`` / ``str()``.

Sign convention used throughout the package: bit 0 maps to +1 and bit 1
maps to -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class SequenceFormatError(ValueError):
    """Malformed sequence text (bad character, no data line, ...)."""


def rotate_bits(word: int, period: int, shift: int) -> int:
    """Rotate packed bits so that bit t of the result is bit (t+shift) mod period."""
    shift %= period
    if shift == 0:
        return word
    mask = (1 << period) - 1
    return ((word >> shift) | (word << (period - shift))) & mask


@dataclass(frozen=True)
class BinarySequence:
    """Immutable period-N cyclic bit vector.

    ``word`` holds the bits packed LSB-first: bit t of ``word`` is the
    sequence value at index t.  All transforms return new values, so
    instances are safe to share between concurrent workers.
    """

    period: int
    word: int

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ValueError(f"period must be >= 1, got {self.period}")
        if not 0 <= self.word < (1 << self.period):
            raise ValueError("packed word has bits set outside the period")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BinarySequence":
        word = 0
        n = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"sequence elements must be 0 or 1, got {b!r}")
            word |= b << n
            n += 1
        return cls(n, word)

    @classmethod
    def from_string(cls, text: str) -> "BinarySequence":
        bad = next((ch for ch in text if ch not in "01"), None)
        if bad is not None:
            raise ValueError(f"sequence string must contain only '0'/'1', got {bad!r}")
        return cls(len(text), int(text[::-1], 2) if text else 0)

    @classmethod
    def zeros(cls, period: int) -> "BinarySequence":
        return cls(period, 0)

    @classmethod
    def ones(cls, period: int) -> "BinarySequence":
        return cls(period, (1 << period) - 1)

    def bit(self, t: int) -> int:
        """Value at index t; indexing is cyclic, any integer t is accepted."""
        return (self.word >> (t % self.period)) & 1

    def sign(self, t: int) -> int:
        """(-1)**bit(t): +1 for bit 0, -1 for bit 1."""
        return 1 - 2 * self.bit(t)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.word >> t) & 1 for t in range(self.period))

    def __str__(self) -> str:
        return "".join("01"[b] for b in self.bits)

    def __len__(self) -> int:
        return self.period

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def weight(self) -> int:
        return self.word.bit_count()

    def support(self) -> frozenset[int]:
        """Positions t with value 1."""
        return frozenset(t for t in range(self.period) if (self.word >> t) & 1)

    def balance(self) -> int:
        """Balance difference 2*|support| - period."""
        return 2 * self.word.bit_count() - self.period

    def shift_left(self, tau: int) -> "BinarySequence":
        """Left shift: result(t) = self(t + tau).  tau may be negative or > period."""
        return BinarySequence(self.period, rotate_bits(self.word, self.period, tau))

    def complement(self) -> "BinarySequence":
        return BinarySequence(self.period, self.word ^ ((1 << self.period) - 1))

    def add_constant(self, c: int) -> "BinarySequence":
        """Bitwise XOR with the constant c: identity for c=0, complement for c=1."""
        if c not in (0, 1):
            raise ValueError(f"constant must be 0 or 1, got {c!r}")
        return self.complement() if c else self

    def is_constant(self) -> bool:
        return self.word == 0 or self.word == (1 << self.period) - 1


def parse_sequence(text: str, source: str = "<input>") -> BinarySequence:
    """Parse the one-line text format: optional '#' comment lines, then one
    line of ASCII '0'/'1' characters whose length is the period.

    Errors name the source and the 1-based line/column of the offending
    character.
    """
    data = None
    data_lineno = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if data is not None:
            raise SequenceFormatError(
                f"{source}:{lineno}: more than one data line in sequence file"
            )
        data, data_lineno = line, lineno
    if data is None:
        raise SequenceFormatError(f"{source}: no sequence data found")
    for col, ch in enumerate(data, 1):
        if ch not in "01":
            raise SequenceFormatError(
                f"{source}:{data_lineno}:{col}: invalid character {ch!r}, expected '0' or '1'"
            )
    return BinarySequence.from_string(data)


def format_sequence(seq: BinarySequence) -> str:
    return str(seq) + "\n"


def read_sequence(path: str) -> BinarySequence:
    with open(path, "r", encoding="ascii") as fh:
        return parse_sequence(fh.read(), source=str(path))


def write_sequence(seq: BinarySequence, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_sequence(seq))
