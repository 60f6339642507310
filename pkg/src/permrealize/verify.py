"""Certification of realizations without any general eigensolver.

A certificate is assembled from four checks: entrywise nonnegativity,
structure (permutativity of the matrix or of each direct-sum block),
characteristic-polynomial coefficient matching against the target spectrum,
and — for alpha-pattern permutative matrices — closed-form eigenpair
residuals ||P v - d v||_inf together with the row-sum eigenpair P e = s e.
Checks that do not apply to a given construction are reported as
not-applicable rather than silently passed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import DimensionMismatchError, NotSquareError
from .linalg import (
    CHAR_POLY_MAX_N,
    DenseMatrix,
    Tolerances,
    char_poly,
    is_nonnegative,
    is_permutative,
    max_coeff_diff,
    poly_from_roots,
    polys_close,
)
from .spectrum import Spectrum, make_spectrum

# Method tags attached to Realizations by the construction modules.
METHOD_SULEIMANOVA = "suleimanova-permutative"
METHOD_ZERO_TRACE = "zero-trace-permutative"
METHOD_SMALL_ORDER = "small-order"
METHOD_COMPANION = "companion"
METHOD_EXPLORER = "explorer-permutative"

#: Methods whose output is a single alpha-pattern permutative matrix with a
#: closed-form eigensystem determined by its first row.
_ALPHA_METHODS = frozenset({METHOD_SULEIMANOVA, METHOD_ZERO_TRACE})

#: Methods whose output is permutative as a whole matrix.
_WHOLE_PERMUTATIVE_METHODS = _ALPHA_METHODS | {METHOD_EXPLORER}

#: Largest order at which a float matrix gets the characteristic-polynomial
#: check.  Float64 Faddeev-LeVerrier is numerically treacherous (its own
#: rounding noise reaches ~1e-9 relative by n = 9 even for a perfect
#: matrix), so the check lifts the matrix and target to exact rationals and
#: compares the true coefficients; the limit only bounds the cost of that
#: exact computation, whose big-integer terms grow quickly with n.
#: Exact-arithmetic matrices use the full guard limit instead.
CHARPOLY_FLOAT_CERTIFY_MAX_N = 12


class CheckState(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class VerificationReport:
    """Tri-state outcome of each certification check plus the worst residual."""

    nonneg_ok: CheckState
    structure_ok: CheckState
    charpoly_ok: CheckState
    eigenpair_ok: CheckState
    max_residual: float
    tolerances: Tolerances

    @property
    def passed(self) -> bool:
        """Overall pass: no applicable check failed."""
        states = (
            self.nonneg_ok,
            self.structure_ok,
            self.charpoly_ok,
            self.eigenpair_ok,
        )
        return CheckState.FAIL not in states

    def to_json_obj(self) -> dict:
        return {
            "nonneg": self.nonneg_ok.value,
            "structure": self.structure_ok.value,
            "charpoly": self.charpoly_ok.value,
            "eigenpairs": self.eigenpair_ok.value,
            "max_residual": self.max_residual,
            "tolerances": {
                "absolute": self.tolerances.absolute,
                "relative": self.tolerances.relative,
            },
            "passed": self.passed,
        }


@dataclass(frozen=True)
class Realization:
    """A constructed matrix, its target spectrum, and how it was built."""

    matrix: DenseMatrix
    method: str
    target: Spectrum
    params: dict = field(default_factory=dict)
    certificate: Optional[VerificationReport] = None

    def __post_init__(self):
        if not self.matrix.is_square:
            raise NotSquareError("a Realization's matrix must be square")
        if self.matrix.n_rows != self.target.n:
            raise DimensionMismatchError(
                f"matrix order {self.matrix.n_rows} != spectrum size "
                f"{self.target.n}"
            )

    def with_certificate(self, report: VerificationReport) -> "Realization":
        return replace(self, certificate=report)


def detect_blocks(M: DenseMatrix, tol: float = 0.0) -> list[tuple[int, int]]:
    """Finest contiguous block-diagonal decomposition under threshold tol.

    Returns half-open index ranges (start, stop).  An entry couples indices
    i and j when |M[i,j]| > tol or |M[j,i]| > tol; blocks are the contiguous
    ranges closed under coupling.  The zero matrix decomposes into n 1x1
    blocks.
    """
    if not M.is_square:
        raise NotSquareError(
            f"block detection needs a square matrix, got {M.n_rows}x{M.n_cols}"
        )
    n = M.n_rows
    ranges: list[tuple[int, int]] = []
    start = 0
    while start < n:
        end = start  # inclusive extent of the current block
        i = start
        while i <= end:
            for j in range(n - 1, end, -1):
                if abs(M.data[i, j]) > tol or abs(M.data[j, i]) > tol:
                    end = j
                    break
            i += 1
        ranges.append((start, end + 1))
        start = end + 1
    return ranges


def _submatrix(M: DenseMatrix, start: int, stop: int) -> DenseMatrix:
    return DenseMatrix(M.data[start:stop, start:stop].copy())


def _exact_lift(M: DenseMatrix) -> DenseMatrix:
    """Exact-rational copy of a float matrix (already-exact ones pass through)."""
    if M.is_exact:
        return M
    lifted = np.empty(M.data.shape, dtype=object)
    for idx, v in np.ndenumerate(M.data):
        lifted[idx] = Fraction(float(v))
    return DenseMatrix(lifted)


def _exact_lift_spectrum(sigma: Spectrum) -> Spectrum:
    if sigma.is_exact:
        return sigma
    return make_spectrum([Fraction(float(v)) for v in sigma.values], exact=True)


def _alpha_eigensystem_residuals(
    M: DenseMatrix, target: Spectrum
) -> list[tuple[float, float]]:
    """(residual, scale) pairs certifying the first-row closed eigensystem.

    For an alpha-pattern matrix P with first row x and s = sum(x), checks
    P e = s e, P v_i = d_i v_i for the closed-form eigenvectors v_i (entries
    x_i except x_1 - s at position i, d_i = x_1 - x_i), and that {s, d_i}
    reproduces the target spectrum.  Each residual is paired with the
    magnitude scale its tolerance band should use.
    """
    x = M.data[0]
    n = M.n_rows
    s = sum(x[1:], start=x[0])
    x_inf = max(abs(float(v)) for v in x) if n else 0.0
    pair_scale = max(1.0, x_inf * x_inf)
    out: list[tuple[float, float]] = []

    # Row-sum eigenpair P e = s e.
    row_sums = M.data.sum(axis=1)
    rs_res = max(abs(float(r - s)) for r in row_sums)
    out.append((rs_res, pair_scale))

    if n > 1:
        # All v_i as columns of one matrix: the column for eigenvalue
        # d_i = x_1 - x_i is constant x_i except x_1 - s at position i;
        # P V should equal V scaled columnwise by the deltas.
        V = np.tile(x[1:].reshape(1, n - 1), (n, 1)).astype(M.data.dtype)
        for col, i in enumerate(range(1, n)):
            V[i, col] = x[0] - s
        deltas = np.array([x[0] - x[i] for i in range(1, n)], dtype=M.data.dtype)
        resid = np.dot(M.data, V) - V * deltas.reshape(1, n - 1)
        eig_res = max(abs(float(v)) for v in resid.flat)
        out.append((eig_res, pair_scale))

    # Spectrum identification: {s} + deltas vs the target multiset.
    target_scale = max(1.0, abs(float(target.values[0])))
    eigs = sorted([s] + [x[0] - x[i] for i in range(1, n)], reverse=True)
    id_res = max(
        abs(float(a - b)) for a, b in zip(eigs, target.values)
    )
    out.append((id_res, target_scale))
    return out


def certify(r: Realization, tol: Optional[Tolerances] = None) -> VerificationReport:
    """Run every applicable check on a Realization; failures are reported.

    The structure check is strict for the construction methods (they promise
    permutativity of the whole matrix or of each block recorded in
    ``params["blocks"]``); for matrices of unknown origin it is
    informational — pass when the matrix decomposes into permutative
    diagonal blocks, not-applicable otherwise.  The characteristic
    polynomial is compared up to n = 12 in float mode (n = 64 in exact
    mode; see CHARPOLY_FLOAT_CERTIFY_MAX_N); alpha-pattern methods
    additionally get closed-form eigenpair residuals at every size.
    """
    if tol is None:
        tol = Tolerances.exact() if r.matrix.is_exact else Tolerances()
    M = r.matrix
    n = M.n_rows
    entry_scale = max(1.0, M.max_abs())
    entry_band = tol.band(entry_scale)
    residuals: list[float] = [0.0]

    nonneg = CheckState.PASS if is_nonnegative(M, entry_band) else CheckState.FAIL

    if r.method in _WHOLE_PERMUTATIVE_METHODS:
        ok = is_permutative(M, entry_band)
        structure = CheckState.PASS if ok else CheckState.FAIL
    elif r.method == METHOD_SMALL_ORDER:
        blocks = r.params.get("blocks") or [(0, n)]
        ok = all(
            is_permutative(_submatrix(M, a, b), entry_band) for a, b in blocks
        )
        structure = CheckState.PASS if ok else CheckState.FAIL
    elif r.method == METHOD_COMPANION:
        structure = CheckState.NOT_APPLICABLE
    else:
        # Unknown origin: report permutative block structure when
        # present, but do not fail a matrix that never claimed it.
        blocks = detect_blocks(M, entry_band)
        ok = all(
            is_permutative(_submatrix(M, a, b), entry_band) for a, b in blocks
        )
        structure = CheckState.PASS if ok else CheckState.NOT_APPLICABLE

    charpoly_limit = (
        CHAR_POLY_MAX_N if M.is_exact else CHARPOLY_FLOAT_CERTIFY_MAX_N
    )
    if n <= charpoly_limit:
        if M.is_exact:
            p = char_poly(M)
            q = poly_from_roots(r.target)
        else:
            # Lift to exact rationals (Fraction(float) is exact) so the
            # comparison measures the matrix's true coefficient deviation,
            # not float Faddeev-LeVerrier noise.
            p = char_poly(_exact_lift(M))
            q = poly_from_roots(_exact_lift_spectrum(r.target))
        charpoly = (
            CheckState.PASS if polys_close(p, q, tol) else CheckState.FAIL
        )
        residuals.append(max_coeff_diff(p, q))
    else:
        charpoly = CheckState.NOT_APPLICABLE

    if r.method in _ALPHA_METHODS:
        eig = CheckState.PASS
        for res, scale in _alpha_eigensystem_residuals(M, r.target):
            residuals.append(res)
            if res > tol.band(scale):
                eig = CheckState.FAIL
    else:
        eig = CheckState.NOT_APPLICABLE

    return VerificationReport(
        nonneg_ok=nonneg,
        structure_ok=structure,
        charpoly_ok=charpoly,
        eigenpair_ok=eig,
        max_residual=max(residuals),
        tolerances=tol,
    )
