"""Concrete sequence families: Legendre, LFSR m-sequences, twin-prime.

Primality is checked by deterministic trial division; the inputs here are
desk scale and reproducibility matters more than speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .core import BinarySequence
from .interleave import InterleavedSpec

FIRST = "first"    # l(0) = 1
SECOND = "second"  # l'(0) = 0

# One primitive polynomial per degree.  Entries are the exponents of the
# terms below the degree (the x^n term is implied), e.g. (1, 0) at degree 4
# encodes x^4 + x + 1.  Every entry is validated by the full-period check
# in m_sequence, so a bad entry cannot produce output silently.
PRIMITIVE_TAPS: dict[int, tuple[int, ...]] = {
    1: (0,),
    2: (1, 0),
    3: (1, 0),
    4: (1, 0),
    5: (2, 0),
    6: (1, 0),
    7: (1, 0),
    8: (4, 3, 2, 0),
    9: (4, 0),
    10: (3, 0),
    11: (2, 0),
    12: (6, 4, 1, 0),
    13: (4, 3, 1, 0),
    14: (10, 6, 1, 0),
    15: (1, 0),
    16: (12, 3, 1, 0),
}

MAX_DEGREE = 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def quadratic_residues(p: int) -> frozenset[int]:
    """Nonzero squares mod p; always (p-1)/2 of them for an odd prime."""
    _require_odd_prime(p)
    return frozenset(x * x % p for x in range(1, p))


def legendre(p: int, kind: str = SECOND) -> BinarySequence:
    """Period-p sequence encoding quadratic residuosity: 0 on residues, 1 on
    non-residues; the value at t=0 is 1 for the first kind, 0 for the second.
    """
    if kind not in (FIRST, SECOND):
        raise ValueError(f"kind must be {FIRST!r} or {SECOND!r}, got {kind!r}")
    qr = quadratic_residues(p)
    bits = [1 if kind == FIRST else 0]
    bits.extend(0 if t in qr else 1 for t in range(1, p))
    return BinarySequence.from_bits(bits)


def _normalize_taps(degree: int, taps: Union[int, Iterable[int]]) -> int:
    if isinstance(taps, int):
        mask = taps
    else:
        mask = 0
        for e in taps:
            if not 0 <= e < degree:
                raise ValueError(
                    f"tap exponent {e} out of range 0..{degree - 1}"
                )
            mask |= 1 << e
    if not 0 < mask < (1 << degree):
        raise ValueError(f"tap mask {mask:#x} out of range for degree {degree}")
    return mask


def m_sequence(degree: int, taps: Optional[Union[int, Iterable[int]]] = None) -> BinarySequence:
    """Maximal-length LFSR sequence of period 2**degree - 1.

    ``taps`` selects the feedback polynomial (exponents below the degree, as
    a set or packed mask); by default it comes from the built-in table.  The
    recurrence s(t+n) = XOR of s(t+i) over the taps is run from the seed
    state 0...01, and the taps are rejected unless the state orbit has the
    full period 2**n - 1 (the definition of a primitive polynomial that
    needs no factorization machinery).
    """
    if not 1 <= degree <= MAX_DEGREE:
        raise ValueError(f"degree must be in 1..{MAX_DEGREE}, got {degree}")
    mask = _normalize_taps(degree, PRIMITIVE_TAPS[degree] if taps is None else taps)
    period = (1 << degree) - 1
    seed = 1 << (degree - 1)  # s(0..n-2) = 0, s(n-1) = 1
    state = seed
    word = 0
    first_return = None
    for step in range(period):
        word |= (state & 1) << step
        feedback = (state & mask).bit_count() & 1
        state = (state >> 1) | (feedback << (degree - 1))
        if state == seed and first_return is None:
            first_return = step + 1
    if first_return != period:
        raise ValueError(
            f"taps {mask:#x} are not primitive for degree {degree}: "
            f"state period {first_return or f'> {period}'} != {period}"
        )
    return BinarySequence(period, word)


@dataclass(frozen=True)
class TwinPrimeSpec:
    """Column recipe for the period p*(p+2) twin-prime interleaving.

    Entry j of each vector describes column j+1 (column 0 is the constant
    column): ``shifts[j] = (j+1) * inverse(p+2) mod p``, ``flips[j]`` is 1
    exactly when j+1 is a quadratic residue mod p+2, and ``kinds[j]`` picks
    the second-kind Legendre sequence on residues, first-kind otherwise.
    """

    p: int
    shifts: tuple[int, ...]
    flips: tuple[int, ...]
    kinds: tuple[str, ...]


def twin_prime_parameters(p: int) -> TwinPrimeSpec:
    if not (is_prime(p) and is_prime(p + 2)):
        raise ValueError(f"({p}, {p + 2}) is not a twin prime pair")
    inv = pow(p + 2, -1, p)
    qr = quadratic_residues(p + 2)
    shifts = tuple(i * inv % p for i in range(1, p + 2))
    flips = tuple(1 if i in qr else 0 for i in range(1, p + 2))
    kinds = tuple(SECOND if i in qr else FIRST for i in range(1, p + 2))
    return TwinPrimeSpec(p, shifts, flips, kinds)


def twin_prime_array(p: int, modified: bool = False) -> InterleavedSpec:
    """K=p, T=p+2 array: constant column 0 (all-one when modified), then
    column i = legendre(p, kind_i) shifted by e_i and flipped by b(i)."""
    params = twin_prime_parameters(p)
    first = legendre(p, FIRST)
    second = legendre(p, SECOND)
    constant = BinarySequence.ones(p) if modified else BinarySequence.zeros(p)
    cols = [constant]
    for e, b, kind in zip(params.shifts, params.flips, params.kinds):
        base = second if kind == SECOND else first
        cols.append(base.shift_left(e).add_constant(b))
    return InterleavedSpec(tuple(cols))


def twin_prime(p: int, modified: bool = False) -> BinarySequence:
    from .interleave import build

    return build(twin_prime_array(p, modified))
