"""Dense real matrices and polynomials for construction and certification.

Matrices wrap a numpy array in one of two scalar modes sharing a single code
path: float64 for everyday work, or object arrays of ``fractions.Fraction``
when exact rational arithmetic is requested.  Characteristic polynomials are
computed by the Faddeev-LeVerrier trace recurrence (exact over the rationals,
no eigensolver involved), and monic polynomials store their leading 1
explicitly with degree-ascending coefficients.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import (
    DimensionMismatchError,
    DimensionTooLargeError,
    EmptyInputError,
    NonFiniteEntryError,
    NotSquareError,
    ParseError,
)
from .spectrum import Spectrum

Scalar = Union[float, Fraction]

#: Largest order accepted by char_poly (the recurrence is O(n^4)).
CHAR_POLY_MAX_N = 64


@dataclass(frozen=True)
class Tolerances:
    """Mixed absolute/relative tolerance profile threaded through all checks.

    The band at a given magnitude ``scale`` is ``max(absolute, relative *
    scale)``.  ``Tolerances.exact()`` is the all-zero profile used with
    Fraction arithmetic, where every comparison must hold exactly.
    """

    absolute: float = 1e-10
    relative: float = 1e-9

    @staticmethod
    def exact() -> "Tolerances":
        return Tolerances(absolute=0.0, relative=0.0)

    @property
    def is_exact(self) -> bool:
        return self.absolute == 0.0 and self.relative == 0.0

    def band(self, scale: float) -> float:
        if self.relative == 0.0:
            return self.absolute
        return max(self.absolute, self.relative * scale)


def _coerce(value, exact: bool) -> Scalar:
    if exact:
        return value if isinstance(value, Fraction) else Fraction(value)
    f = float(value)
    if not math.isfinite(f):
        raise NonFiniteEntryError(f"non-finite matrix entry: {value!r}")
    return f


def _array(rows: Sequence[Sequence], exact: bool) -> np.ndarray:
    if exact:
        arr = np.empty((len(rows), len(rows[0])), dtype=object)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                arr[i, j] = _coerce(v, True)
        return arr
    arr = np.array(rows, dtype=np.float64)
    if not np.isfinite(arr).all():
        raise NonFiniteEntryError("matrix contains a non-finite entry")
    return arr


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    """Immutable dense real matrix (float64 or exact-Fraction entries)."""

    data: np.ndarray

    def __post_init__(self):
        self.data.setflags(write=False)

    @property
    def n_rows(self) -> int:
        return self.data.shape[0]

    @property
    def n_cols(self) -> int:
        return self.data.shape[1]

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    @property
    def is_exact(self) -> bool:
        return self.data.dtype == object

    def entry(self, i: int, j: int) -> Scalar:
        return self.data[i, j]

    def row(self, i: int) -> np.ndarray:
        return self.data[i]

    def trace(self) -> Scalar:
        d = [self.data[i, i] for i in range(min(self.data.shape))]
        return sum(d[1:], start=d[0])

    def max_abs(self) -> float:
        """Largest entry magnitude as a float (inf on float overflow)."""
        return max(abs(float(v)) for v in self.data.flat)

    def to_lists(self) -> list[list[Scalar]]:
        return self.data.tolist()

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.n_cols != other.n_rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.n_rows}x{self.n_cols} by "
                f"{other.n_rows}x{other.n_cols}"
            )
        # np.dot (unlike np.matmul) also handles object arrays of Fractions.
        return DenseMatrix(np.dot(self.data, other.data))

    def matvec(self, x: np.ndarray) -> np.ndarray:
        return np.dot(self.data, x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.data.shape == other.data.shape and bool(
            (self.data == other.data).all()
        )


def from_rows(rows: Iterable[Sequence], exact: bool = False) -> DenseMatrix:
    """Build a DenseMatrix from nested sequences, validating shape."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        raise EmptyInputError("matrix needs at least one row and one column")
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise DimensionMismatchError(
                f"row {i} has {len(row)} entries, expected {width}"
            )
    return DenseMatrix(_array(rows, exact))


def zeros(n_rows: int, n_cols: int, exact: bool = False) -> np.ndarray:
    """Writable zero array in the requested scalar mode (internal helper)."""
    if exact:
        arr = np.empty((n_rows, n_cols), dtype=object)
        arr[:] = Fraction(0)
        return arr
    return np.zeros((n_rows, n_cols))


def identity(n: int, exact: bool = False) -> DenseMatrix:
    if n < 1:
        raise EmptyInputError("identity needs n >= 1")
    arr = zeros(n, n, exact)
    one = Fraction(1) if exact else 1.0
    for i in range(n):
        arr[i, i] = one
    return DenseMatrix(arr)


def ones_matrix(n: int, exact: bool = False) -> DenseMatrix:
    if n < 1:
        raise EmptyInputError("ones_matrix needs n >= 1")
    arr = zeros(n, n, exact)
    arr[:] = Fraction(1) if exact else 1.0
    return DenseMatrix(arr)


def ones_vector(n: int, exact: bool = False) -> np.ndarray:
    if n < 1:
        raise EmptyInputError("ones_vector needs n >= 1")
    if exact:
        v = np.empty(n, dtype=object)
        v[:] = Fraction(1)
        return v
    return np.ones(n)


def is_nonnegative(M: DenseMatrix, tol: float = 0.0) -> bool:
    """True iff every entry is >= -tol."""
    neg = -tol
    return all(v >= neg for v in M.data.flat)


def is_permutative(M: DenseMatrix, tol: float = 0.0) -> bool:
    """True iff every row is a permutation of the first row, within tol.

    Rows are compared as sorted multisets; entries match when they differ by
    at most tol.  The identity matrix is permutative under this definition
    (each row is a permutation of (1, 0, ..., 0)).
    """
    if not M.is_square:
        raise NotSquareError(
            f"permutativity is defined for square matrices, got "
            f"{M.n_rows}x{M.n_cols}"
        )
    ref = np.sort(M.data[0])
    for i in range(1, M.n_rows):
        row = np.sort(M.data[i])
        if not all(abs(a - b) <= tol for a, b in zip(ref, row)):
            return False
    return True


@dataclass(frozen=True)
class Polynomial:
    """Real polynomial, coefficients degree-ascending, leading term explicit.

    Characteristic polynomials are monic: ``coeffs[-1] == 1`` and
    ``degree == n`` for an n x n matrix.
    """

    coeffs: tuple[Scalar, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)


def char_poly_coeffs(A: np.ndarray) -> tuple[Scalar, ...]:
    """Faddeev-LeVerrier coefficients of det(tI - A), degree-ascending.

    Works directly on a square float64 or object(Fraction) array; used by
    char_poly and by search loops that avoid wrapper overhead.
    """
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotSquareError(
            f"characteristic polynomial needs a square matrix, got shape "
            f"{A.shape}"
        )
    n = A.shape[0]
    if n > CHAR_POLY_MAX_N:
        raise DimensionTooLargeError(
            f"char_poly is limited to n <= {CHAR_POLY_MAX_N}, got {n}"
        )
    exact = A.dtype == object
    one: Scalar = Fraction(1) if exact else 1.0
    if exact:
        eye = np.empty((n, n), dtype=object)
        eye[:] = Fraction(0)
        for i in range(n):
            eye[i, i] = Fraction(1)
    else:
        eye = np.eye(n)
    coeffs: list[Scalar] = [one] * (n + 1)
    B = A.copy()
    coeffs[n - 1] = -_diag_sum(B)
    for k in range(2, n + 1):
        B = np.dot(A, B + coeffs[n - k + 1] * eye)
        c = -_diag_sum(B)
        coeffs[n - k] = c / k if exact else c / float(k)
    return tuple(coeffs)


def char_poly(M: DenseMatrix) -> Polynomial:
    """Characteristic polynomial det(tI - M) by Faddeev-LeVerrier.

    The trace recurrence B_1 = A, c_{n-1} = -tr B_1, B_k = A (B_{k-1} +
    c_{n-k+1} I), c_{n-k} = -tr(B_k)/k needs only matrix products and is
    exact over the rationals; over float64 it is exact for small-integer
    matrices.  Guarded to n <= 64 since the cost is O(n^4).
    """
    return Polynomial(char_poly_coeffs(M.data))


def _diag_sum(arr: np.ndarray) -> Scalar:
    d = [arr[i, i] for i in range(arr.shape[0])]
    return sum(d[1:], start=d[0])


def poly_from_roots(sigma: Spectrum) -> Polynomial:
    """Monic expansion of prod (t - l_k), one root at a time, O(n^2).

    Roots are folded in sorted-descending order (the Spectrum's own order)
    so the result is deterministic; with Fraction entries it is exact.
    """
    exact = sigma.is_exact
    one: Scalar = Fraction(1) if exact else 1.0
    zero: Scalar = Fraction(0) if exact else 0.0
    coeffs: list[Scalar] = [one]  # degree-descending while folding
    for r in sigma.values:
        coeffs.append(zero)
        for k in range(len(coeffs) - 1, 0, -1):
            coeffs[k] = coeffs[k] - r * coeffs[k - 1]
    coeffs.reverse()
    return Polynomial(tuple(coeffs))


def eval_poly(p: Polynomial, t: Scalar) -> Scalar:
    """Horner evaluation."""
    acc = p.coeffs[-1]
    for c in reversed(p.coeffs[:-1]):
        acc = acc * t + c
    return acc


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """Coefficient convolution (used to cross-check direct sums)."""
    exact = p.is_exact and q.is_exact
    zero: Scalar = Fraction(0) if exact else 0.0
    out = [zero] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return Polynomial(tuple(out))


def polys_close(p: Polynomial, q: Polynomial, tol: Tolerances) -> bool:
    """Coefficientwise comparison within tol.band(max coefficient size)."""
    if len(p.coeffs) != len(q.coeffs):
        return False
    scale = max(
        (abs(float(c)) for c in (*p.coeffs, *q.coeffs)), default=0.0
    )
    band = tol.band(max(1.0, scale))
    return all(abs(a - b) <= band for a, b in zip(p.coeffs, q.coeffs))


def max_coeff_diff(p: Polynomial, q: Polynomial) -> float:
    """Largest |p_k - q_k| as a float; inf on length mismatch."""
    if len(p.coeffs) != len(q.coeffs):
        return math.inf
    return max(abs(float(a - b)) for a, b in zip(p.coeffs, q.coeffs))


def direct_sum(blocks: Sequence[DenseMatrix]) -> DenseMatrix:
    """Block-diagonal assembly of square blocks, zeros elsewhere."""
    blocks = list(blocks)
    if not blocks:
        raise EmptyInputError("direct_sum needs at least one block")
    for b in blocks:
        if not b.is_square:
            raise NotSquareError(
                f"direct_sum blocks must be square, got {b.n_rows}x{b.n_cols}"
            )
    exact = all(b.is_exact for b in blocks)
    n = sum(b.n_rows for b in blocks)
    out = zeros(n, n, exact)
    off = 0
    for b in blocks:
        k = b.n_rows
        data = b.data if (exact or not b.is_exact) else b.data.astype(float)
        out[off : off + k, off : off + k] = data
        off += k
    return DenseMatrix(out)


def matrices_close(A: DenseMatrix, B: DenseMatrix, tol: Tolerances) -> bool:
    """Entrywise comparison within tol.band(max entry size)."""
    if A.data.shape != B.data.shape:
        return False
    scale = max(A.max_abs(), B.max_abs(), 1.0)
    band = tol.band(scale)
    return all(abs(a - b) <= band for a, b in zip(A.data.flat, B.data.flat))


# ---------------------------------------------------------------------------
# Serialization: JSON nested arrays and CSV (one row per line), both ways.
# ---------------------------------------------------------------------------


def _scalar_to_json(v: Scalar):
    return str(v) if isinstance(v, Fraction) else v


def _scalar_from_token(token, exact: bool) -> Scalar:
    if isinstance(token, str):
        try:
            f = Fraction(token)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"cannot parse matrix entry {token!r}") from e
        return f if exact else float(f)
    if isinstance(token, bool) or not isinstance(token, (int, float)):
        raise ParseError(f"cannot parse matrix entry {token!r}")
    return Fraction(token) if exact else float(token)


def matrix_to_json_obj(M: DenseMatrix) -> list[list]:
    """Nested lists with JSON-safe scalars (Fractions become strings)."""
    return [[_scalar_to_json(v) for v in row] for row in M.data]


def matrix_to_json(M: DenseMatrix) -> str:
    return json.dumps(matrix_to_json_obj(M))


def matrix_from_json(text: str, exact: bool = False) -> DenseMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON matrix: {e}") from e
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise ParseError("JSON matrix must be a list of rows")
    rows = [[_scalar_from_token(v, exact) for v in row] for row in obj]
    return from_rows(rows, exact=exact)


def format_scalar(v: Scalar) -> str:
    """Shortest faithful text form: %.17g for floats, p/q for Fractions."""
    if isinstance(v, Fraction):
        return str(v)
    return "%.17g" % v


def matrix_to_csv(M: DenseMatrix) -> str:
    lines = [",".join(format_scalar(v) for v in row) for row in M.data]
    return "\n".join(lines) + "\n"


def matrix_from_csv(text: str, exact: bool = False) -> DenseMatrix:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        rows.append(
            [_scalar_from_token(tok.strip(), exact) for tok in line.split(",")]
        )
    if not rows:
        raise EmptyInputError("CSV matrix text contains no rows")
    return from_rows(rows, exact=exact)
