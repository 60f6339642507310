"""Companion-matrix baseline realization.

The companion matrix of p(t) = prod (t - l_k) always has spectrum sigma;
it is entrywise nonnegative exactly when every non-leading coefficient c_k
is nonpositive, which holds for every Suleimanova spectrum.  Coefficients
come from the O(n^2) one-root-at-a-time expansion; the exponential cost
sometimes associated with this route applies only to naive enumeration of
all root subsets, not to the incremental recurrence used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    DenseMatrix,
    Polynomial,
    eval_poly,
    from_rows,
    poly_from_roots,
)
from .spectrum import DEFAULT_CLASSIFY_TOL, Spectrum
from .verify import METHOD_COMPANION, Realization


@dataclass(frozen=True)
class CompanionRealization:
    """Companion form of the target's characteristic polynomial.

    Orientation: subdiagonal of ones, coefficients in the last column
    (entry (i, n-1) is -c_i for the degree-ascending coefficients c_0 ..
    c_{n-1}).  ``nonneg`` reports whether the matrix is a valid nonnegative
    realization, i.e. whether every c_k is nonpositive within tolerance.
    """

    poly: Polynomial
    matrix: DenseMatrix
    nonneg: bool


def realize_companion(sigma: Spectrum) -> CompanionRealization:
    """Companion matrix of prod (t - l_k); works for any real spectrum."""
    poly = poly_from_roots(sigma)
    n = sigma.n
    exact = sigma.is_exact
    zero = Fraction(0) if exact else 0.0
    one = Fraction(1) if exact else 1.0
    rows = [[zero] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = one
    for i in range(n):
        rows[i][n - 1] = -poly.coeffs[i]
    matrix = from_rows(rows, exact=exact)
    if exact:
        band = 0.0
    else:
        scale = max(1.0, max(abs(float(c)) for c in poly.coeffs))
        band = DEFAULT_CLASSIFY_TOL * scale
    nonneg = all(float(c) <= band for c in poly.coeffs[:-1])
    return CompanionRealization(poly=poly, matrix=matrix, nonneg=nonneg)


def verify_roots(
    cr: CompanionRealization, sigma: Spectrum, tol: float = 1e-10
) -> bool:
    """True iff |p(l_i)| <= tol * max(1, max|c_k|) for every target l_i."""
    scale = max(1.0, max(abs(float(c)) for c in cr.poly.coeffs))
    bound = tol * scale
    return all(
        abs(float(eval_poly(cr.poly, v))) <= bound for v in sigma.values
    )


def as_realization(cr: CompanionRealization, sigma: Spectrum) -> Realization:
    """Wrap a companion construction for the shared certification path."""
    return Realization(
        matrix=cr.matrix,
        method=METHOD_COMPANION,
        target=sigma,
        params={"nonneg": cr.nonneg, "orientation": "last-column"},
    )
