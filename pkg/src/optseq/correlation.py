"""Periodic auto/cross-correlation and the optimality classification.

Two independent routes are provided on purpose:

* ``cross_correlation`` evaluates the defining sum term by term and is the
  reference oracle;
* the spectrum functions use the packed kernel
  ``R = N - 2 * popcount(a XOR rotate(b, tau))``, which is O(N^2 / wordsize)
  for a full spectrum.

Everything is exact integer arithmetic; there is deliberately no FFT path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import BinarySequence, rotate_bits

AUTO = "auto"
CROSS = "cross"

SYMMETRIC = "symmetric"
ANTISYMMETRIC = "antisymmetric"
NEITHER = "neither"

IDEAL = "ideal"
OPTIMAL = "optimal"
NOT_OPTIMAL = "not_optimal"

# Smallest admissible out-of-phase value sets, keyed by period mod 4.
OPTIMAL_OUT_OF_PHASE = {
    0: frozenset({0, -4, 4}),
    1: frozenset({1, -3}),
    2: frozenset({2, -2}),
    3: frozenset({-1}),
}


@dataclass(frozen=True)
class CorrelationSpectrum:
    """Integer correlation values R(tau) for tau = 0..period-1."""

    period: int
    kind: str
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in (AUTO, CROSS):
            raise ValueError(f"kind must be {AUTO!r} or {CROSS!r}, got {self.kind!r}")
        if len(self.values) != self.period:
            raise ValueError("spectrum length must equal the period")

    def out_of_phase(self) -> tuple[int, ...]:
        """Values at lags 1..period-1."""
        return self.values[1:]

    def distinct_values(self) -> tuple[int, ...]:
        """Sorted distinct values over all lags, lag 0 included."""
        return tuple(sorted(set(self.values)))

    def level_count(self) -> int:
        return len(set(self.values))


@dataclass(frozen=True)
class OptimalityClass:
    residue: int
    allowed_out_of_phase: frozenset[int]
    verdict: str


def cross_correlation(a: BinarySequence, b: BinarySequence, tau: int) -> int:
    """Defining sum: sum over t of (-1)**(a(t) + b(t + tau)), indices mod N."""
    if a.period != b.period:
        raise ValueError(
            f"correlation needs equal periods, got {a.period} and {b.period}"
        )
    total = 0
    for t in range(a.period):
        total += 1 if a.bit(t) == b.bit(t + tau) else -1
    return total


def kernel_cross_correlation(a: BinarySequence, b: BinarySequence, tau: int) -> int:
    """Packed-word route: N - 2 * popcount(a XOR rotate(b, tau))."""
    if a.period != b.period:
        raise ValueError(
            f"correlation needs equal periods, got {a.period} and {b.period}"
        )
    n = a.period
    return n - 2 * (a.word ^ rotate_bits(b.word, n, tau)).bit_count()


def _kernel_values(a: BinarySequence, b: BinarySequence) -> tuple[int, ...]:
    n = a.period
    mask = (1 << n) - 1
    wa = a.word
    doubled = b.word | (b.word << n)  # rotation becomes a plain slice
    return tuple(n - 2 * ((wa ^ ((doubled >> tau) & mask)).bit_count()) for tau in range(n))


def autocorrelation_spectrum(a: BinarySequence) -> CorrelationSpectrum:
    return CorrelationSpectrum(a.period, AUTO, _kernel_values(a, a))


def cross_correlation_spectrum(a: BinarySequence, b: BinarySequence) -> CorrelationSpectrum:
    if a.period != b.period:
        raise ValueError(
            f"correlation needs equal periods, got {a.period} and {b.period}"
        )
    return CorrelationSpectrum(a.period, CROSS, _kernel_values(a, b))


def autocorrelation_via_support(a: BinarySequence, tau: int) -> int:
    """Support-counting identity: R(tau) = N - 4*(|C| - |(tau + C) intersect C|)."""
    support = a.support()
    n = a.period
    shifted = {(tau + t) % n for t in support}
    return n - 4 * (len(support) - len(shifted & support))


def classify(spectrum: CorrelationSpectrum) -> OptimalityClass:
    """Four-type optimality verdict for an autocorrelation spectrum.

    Out-of-phase means lags 1..N-1; lag 0 never participates.  For period
    N = 3 mod 4 the only admissible value is -1, in which case the verdict
    is reported as ideal (the strongest form of optimal).
    """
    if spectrum.kind != AUTO:
        raise ValueError("classification is defined for autocorrelation spectra only")
    residue = spectrum.period % 4
    allowed = OPTIMAL_OUT_OF_PHASE[residue]
    out = set(spectrum.out_of_phase())
    if out <= allowed:
        verdict = IDEAL if residue == 3 else OPTIMAL
    else:
        verdict = NOT_OPTIMAL
    return OptimalityClass(residue, allowed, verdict)


def is_ideal(a: BinarySequence) -> bool:
    return classify(autocorrelation_spectrum(a)).verdict == IDEAL


def symmetry_type(s: BinarySequence) -> str:
    """Classify s against the mirror identities over t = 1..N-1 (t = 0 exempt):
    s(t) = s(N-t) everywhere -> symmetric; s(t) + s(N-t) = 1 everywhere ->
    antisymmetric; otherwise neither.
    """
    n = s.period
    if all(s.bit(t) == s.bit(n - t) for t in range(1, n)):
        return SYMMETRIC
    if all(s.bit(t) + s.bit(n - t) == 1 for t in range(1, n)):
        return ANTISYMMETRIC
    return NEITHER


def spectrum_to_dict(spectrum: CorrelationSpectrum) -> dict:
    obj: dict = {
        "period": spectrum.period,
        "kind": spectrum.kind,
        "values": list(spectrum.values),
    }
    if spectrum.kind == AUTO:
        verdict = classify(spectrum)
        obj["classification"] = {
            "residue": verdict.residue,
            "verdict": verdict.verdict,
        }
    return obj


def spectrum_to_json(spectrum: CorrelationSpectrum) -> str:
    """Stable-key JSON used by the CLI and by golden-file tests."""
    return json.dumps(spectrum_to_dict(spectrum), indent=2)
