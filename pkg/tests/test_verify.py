"""Certification logic: check dispatch, block detection, report shape."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from permrealize import (
    DimensionMismatchError,
    NotSquareError,
    Realization,
    Tolerances,
    certify,
    detect_blocks,
    direct_sum,
    from_rows,
    make_spectrum,
    realize_suleimanova,
    realize_small,
)
from permrealize.verify import (
    CHARPOLY_FLOAT_CERTIFY_MAX_N,
    CheckState,
    METHOD_SULEIMANOVA,
)


# ---------------------------------------------------------------------------
# block detection
# ---------------------------------------------------------------------------


def test_detect_blocks_direct_sum():
    M = direct_sum(
        [from_rows([[1.0, 1.0], [1.0, 1.0]]), from_rows([[2.0]])]
    )
    assert detect_blocks(M) == [(0, 2), (2, 3)]


def test_detect_blocks_zero_matrix():
    M = from_rows([[0.0] * 3] * 3)
    assert detect_blocks(M) == [(0, 1), (1, 2), (2, 3)]


def test_detect_blocks_full_matrix():
    M = from_rows([[1.0, 0.0, 2.0], [0.0, 1.0, 0.0], [0.0, 3.0, 1.0]])
    assert detect_blocks(M) == [(0, 3)]


def test_detect_blocks_threshold():
    M = from_rows([[1.0, 1e-14], [0.0, 2.0]])
    assert detect_blocks(M, tol=1e-12) == [(0, 1), (1, 2)]
    assert detect_blocks(M, tol=0.0) == [(0, 2)]


def test_detect_blocks_needs_square():
    with pytest.raises(NotSquareError):
        detect_blocks(from_rows([[1.0, 2.0]]))


# ---------------------------------------------------------------------------
# Realization validation
# ---------------------------------------------------------------------------


def test_realization_rejects_nonsquare():
    with pytest.raises(NotSquareError):
        Realization(
            matrix=from_rows([[1.0, 2.0]]),
            method=METHOD_SULEIMANOVA,
            target=make_spectrum([1.0, -1.0]),
        )


def test_realization_rejects_order_mismatch():
    with pytest.raises(DimensionMismatchError):
        Realization(
            matrix=from_rows([[1.0, 0.0], [0.0, 1.0]]),
            method=METHOD_SULEIMANOVA,
            target=make_spectrum([1.0, 1.0, 1.0]),
        )


def test_with_certificate_attaches_report():
    r = realize_suleimanova(make_spectrum([10, -1, -2, -3]))
    assert r.certificate is None
    report = certify(r)
    r2 = r.with_certificate(report)
    assert r2.certificate is report
    assert r.certificate is None  # original untouched


# ---------------------------------------------------------------------------
# certify outcomes
# ---------------------------------------------------------------------------


def test_certify_full_pass(sigma_integer_example):
    report = certify(realize_suleimanova(sigma_integer_example))
    assert report.passed
    assert report.nonneg_ok is CheckState.PASS
    assert report.structure_ok is CheckState.PASS
    assert report.charpoly_ok is CheckState.PASS
    assert report.eigenpair_ok is CheckState.PASS
    assert report.max_residual == 0.0


def test_certify_flags_wrong_matrix(sigma_integer_example):
    # Perturb one entry: structure breaks and the polynomial drifts.
    M = from_rows(
        [
            [1.0, 2.0, 3.0, 4.0],
            [2.0, 1.0, 3.0, 4.0],
            [3.0, 2.0, 1.5, 4.0],
            [4.0, 2.0, 3.0, 1.0],
        ]
    )
    r = Realization(matrix=M, method=METHOD_SULEIMANOVA,
                    target=sigma_integer_example)
    report = certify(r)
    assert report.structure_ok is CheckState.FAIL
    assert report.charpoly_ok is CheckState.FAIL
    assert not report.passed


def test_certify_flags_negative_entry():
    sigma = make_spectrum([1.0, -1.0])
    M = from_rows([[0.0, 1.0], [1.0, 0.0]])
    bad = from_rows([[0.0, -1.0], [-1.0, 0.0]])
    good = Realization(matrix=M, method=METHOD_SULEIMANOVA, target=sigma)
    r = Realization(matrix=bad, method=METHOD_SULEIMANOVA, target=sigma)
    assert certify(good).nonneg_ok is CheckState.PASS
    report = certify(r)
    assert report.nonneg_ok is CheckState.FAIL
    assert not report.passed


def test_certify_unknown_method_is_informational(sigma_integer_example):
    # A companion-shaped matrix under an empty method tag: the structure
    # check must report not-applicable, never fail, and the certificate
    # can still pass on the polynomial.
    from permrealize import realize_companion

    cr = realize_companion(sigma_integer_example)
    r = Realization(matrix=cr.matrix, method="", target=sigma_integer_example)
    report = certify(r)
    assert report.structure_ok is CheckState.NOT_APPLICABLE
    assert report.charpoly_ok is CheckState.PASS
    assert report.passed


def test_certify_unknown_method_passes_block_permutative():
    sigma = make_spectrum([5.0, 2.0, -3.0])
    r_small = realize_small(sigma)
    r = Realization(matrix=r_small.matrix, method="", target=sigma)
    report = certify(r)
    assert report.structure_ok is CheckState.PASS
    assert report.passed


def test_certify_charpoly_gate_beyond_float_limit():
    n = CHARPOLY_FLOAT_CERTIFY_MAX_N + 8
    values = [float(n - 1)] + [-1.0] * (n - 1)
    r = realize_suleimanova(make_spectrum(values))
    report = certify(r)
    assert report.charpoly_ok is CheckState.NOT_APPLICABLE
    assert report.eigenpair_ok is CheckState.PASS
    assert report.passed


def test_certify_exact_mode_uses_zero_tolerances():
    sigma = make_spectrum([Fraction(2), Fraction(-2)], exact=True)
    r = realize_suleimanova(sigma)
    report = certify(r)
    assert report.tolerances.absolute == 0.0
    assert report.tolerances.relative == 0.0
    assert report.passed


def test_certify_small_order_checks_blocks():
    sigma = make_spectrum([5.0, 2.0, -3.0])
    r = realize_small(sigma)
    report = certify(r)
    assert report.structure_ok is CheckState.PASS
    assert report.passed
    # Same matrix, but with a wrong block map claiming the whole matrix is
    # one permutative block: the structure check must fail.
    wrong = Realization(
        matrix=r.matrix,
        method=r.method,
        target=sigma,
        params={"case": r.params["case"], "blocks": [(0, 3)]},
    )
    assert certify(wrong).structure_ok is CheckState.FAIL


def test_report_json_shape(sigma_integer_example):
    report = certify(realize_suleimanova(sigma_integer_example))
    obj = report.to_json_obj()
    assert set(obj) == {
        "nonneg",
        "structure",
        "charpoly",
        "eigenpairs",
        "max_residual",
        "tolerances",
        "passed",
    }
    assert obj["passed"] is True
    assert obj["tolerances"] == {"absolute": 1e-10, "relative": 1e-9}


def test_certify_custom_tolerances(sigma_integer_example):
    report = certify(
        realize_suleimanova(sigma_integer_example), Tolerances(1e-6, 1e-6)
    )
    assert report.tolerances.absolute == 1e-6
    assert report.passed
