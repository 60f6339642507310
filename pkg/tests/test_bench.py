"""Benchmark plumbing (full-size runs live in the acceptance suite)."""

from __future__ import annotations

import json
import math

from permrealize import run_bench, synthetic_spectrum
from permrealize.spectrum import SpectrumKind, classify


def test_synthetic_spectrum_family():
    sigma = synthetic_spectrum(6)
    assert sigma.values == (5.0, -1.0, -1.0, -1.0, -1.0, -1.0)
    assert sigma.trace == 0.0
    assert classify(sigma).kind is SpectrumKind.ZERO_TRACE_SULEIMANOVA


def test_run_bench_small_sizes():
    report = run_bench((4, 8, 16))
    assert [e.n for e in report.entries] == [4, 8, 16]
    for e in report.entries:
        assert e.suleimanova_s > 0.0
        assert e.poly_s > 0.0
        assert e.companion_s > 0.0
        assert not e.coeff_overflow
        assert math.isfinite(e.peak_coeff)
    assert len(report.poly_ratios) == 2
    obj = report.to_json_obj()
    json.dumps(obj)
    assert "naive enumeration" in obj["note"]
    assert obj["sizes"] == [4, 8, 16]


def test_bench_peak_coefficient_is_exactly_tracked():
    # For {n-1, -1 x (n-1)} the constant coefficient is (n-1)^2 at n = 4:
    # (t - 3)(t + 1)^3 expands with |c_0| = 3.
    report = run_bench((4,))
    assert report.entries[0].peak_coeff >= 3.0
