"""Target spectra: representation, necessary realizability checks, classification.

A spectrum here is an ordered multiset of real eigenvalue targets, stored
sorted descending.  Two classical necessary conditions for realizability by
an entrywise nonnegative matrix are checked: all power sums s_k = sum(l_i^k)
must be nonnegative, and the spectral radius max|l_i| must itself appear in
the spectrum (as a nonnegative value).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Union

from .errors import EmptyInputError, NonFiniteEntryError

Scalar = Union[float, Fraction]

#: Depth at which the all-k power-sum condition is truncated by default.
DEFAULT_POWER_DEPTH = 50

#: Relative half-width of the band used to call an entry "positive" or a
#: trace "zero"; scaled by max(1, |l_1|).
DEFAULT_CLASSIFY_TOL = 1e-12


def _band(tol: float, scale: float) -> float:
    """Tolerance half-width tol * scale, with 0 * inf pinned to 0."""
    return 0.0 if tol == 0 else tol * scale


class SpectrumKind(enum.Enum):
    """Dispatch classes for the realization methods."""

    SULEIMANOVA = "suleimanova"
    ZERO_TRACE_SULEIMANOVA = "zero-trace-suleimanova"
    SMALL_ORDER = "small-order"
    ALL_NONNEGATIVE = "all-nonnegative"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class Spectrum:
    """Immutable multiset of real eigenvalue targets, sorted descending."""

    values: tuple[Scalar, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def is_exact(self) -> bool:
        """True when every entry is a Fraction (exact-arithmetic mode)."""
        return all(isinstance(v, Fraction) for v in self.values)

    @cached_property
    def trace(self) -> Scalar:
        """s_1: the sum of the targets, in sorted order."""
        return sum(self.values[1:], start=self.values[0])

    @cached_property
    def spectral_radius(self) -> Scalar:
        return max(abs(v) for v in self.values)

    def scale(self) -> float:
        """max(1, |l_1|): the reference magnitude for tolerance bands."""
        return max(1.0, abs(float(self.values[0])))

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class Classification:
    kind: SpectrumKind
    positives: int
    trace: Scalar


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the necessary-condition checks, truncated at depth K."""

    power_sums: tuple[Scalar, ...]
    power_sum_ok: bool
    perron_ok: bool
    spectral_radius: Scalar
    K: int


def make_spectrum(raw: Iterable, exact: bool = False) -> Spectrum:
    """Build a Spectrum from any iterable of reals.

    Entries are sorted descending; duplicates are preserved.  With
    ``exact=True`` every entry is coerced to Fraction and all downstream
    arithmetic on the spectrum stays exact.
    """
    items = list(raw)
    if not items:
        raise EmptyInputError("a spectrum needs at least one target eigenvalue")
    coerced = []
    for v in items:
        if exact:
            coerced.append(v if isinstance(v, Fraction) else Fraction(v))
        else:
            f = float(v)
            if not math.isfinite(f):
                raise NonFiniteEntryError(f"non-finite spectrum entry: {v!r}")
            coerced.append(f)
    coerced.sort(reverse=True)
    return Spectrum(tuple(coerced))


def power_sum(sigma: Spectrum, k: int) -> Scalar:
    """s_k = sum of k-th powers, accumulated in sorted order.

    Powers are formed by repeated multiplication so float inputs overflow to
    inf instead of raising.
    """
    if k < 1:
        raise ValueError(f"power-sum exponent must be >= 1, got {k}")
    total = None
    for v in sigma.values:
        p = v
        for _ in range(k - 1):
            p = p * v
        total = p if total is None else total + p
    return total


def check_necessary(
    sigma: Spectrum, K: int = DEFAULT_POWER_DEPTH, tol: float = DEFAULT_CLASSIFY_TOL
) -> ConditionReport:
    """Check the two classical necessary conditions up to power depth K.

    The power-sum condition quantifies over every k; here it is truncated at
    K (the constructions never rely on this check for correctness).  Each
    s_k is compared against ``-tol * max(1, sum|l_i|^k)`` so the test stays
    meaningful at any magnitude.  The Perron check requires the largest
    entry itself to attain max|l_i|: a spectrum whose radius is only hit by
    a negative entry fails.
    """
    if K < 1:
        raise ValueError(f"power depth must be >= 1, got {K}")
    powers = list(sigma.values)
    abs_powers = [abs(v) for v in sigma.values]
    sums = []
    ok = True
    for _ in range(K):
        s_k = sum(powers[1:], start=powers[0])
        mag_k = sum(abs_powers[1:], start=abs_powers[0])
        sums.append(s_k)
        if not s_k >= -_band(tol, max(1.0, float(mag_k))):
            ok = False
        powers = [p * v for p, v in zip(powers, sigma.values)]
        abs_powers = [p * a for p, a in zip(abs_powers, (abs(v) for v in sigma.values))]
    sr = sigma.spectral_radius
    band = _band(tol, max(1.0, float(sr)))
    perron_ok = bool(sr - sigma.values[0] <= band)
    return ConditionReport(
        power_sums=tuple(sums),
        power_sum_ok=ok,
        perron_ok=perron_ok,
        spectral_radius=sr,
        K=K,
    )


def classify(sigma: Spectrum, tol: float = DEFAULT_CLASSIFY_TOL) -> Classification:
    """Classify a spectrum for method dispatch.

    An entry counts as positive iff it exceeds ``tol * max(1, |l_1|)``, so
    zeros sit with the non-positive entries.  A spectrum with exactly one
    positive entry and nonnegative trace is Suleimanova (zero-trace variant
    when the trace vanishes within the same band).  Otherwise: small-order
    for n <= 4, all-nonnegative when no entry is below the band, and
    unclassified as the fallback.
    """
    band = _band(tol, sigma.scale())
    positives = sum(1 for v in sigma.values if v > band)
    s1 = sigma.trace
    if positives == 1 and s1 >= -band:
        kind = (
            SpectrumKind.ZERO_TRACE_SULEIMANOVA
            if abs(s1) <= band
            else SpectrumKind.SULEIMANOVA
        )
    elif sigma.n <= 4:
        kind = SpectrumKind.SMALL_ORDER
    elif sigma.values[-1] >= -band:
        kind = SpectrumKind.ALL_NONNEGATIVE
    else:
        kind = SpectrumKind.UNCLASSIFIED
    return Classification(kind=kind, positives=positives, trace=s1)


def is_all_zero(sigma: Spectrum, tol: float = DEFAULT_CLASSIFY_TOL) -> bool:
    """True when every entry vanishes within the classification band."""
    band = _band(tol, sigma.scale())
    return all(abs(v) <= band for v in sigma.values)
