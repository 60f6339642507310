"""Command-line entry point.

Subcommands: check (necessary conditions + classification), realize
(construct and certify a matrix), verify (certify a matrix file against a
spectrum), bench (timing report), explore (pattern search).  Exit codes are
a stable contract: 0 pass, 1 usage/parse failure, 2 verified failure or no
available method, 3 inconclusive search.

Spectra are given inline as a comma list ("10,-1,-2,-3") or via --file
(JSON array or one value per line).  The default tolerance profile can be
set with the PERMREALIZE_TOLERANCES environment variable ("abs,rel");
--abs-tol/--rel-tol override it, and --exact switches to Fraction
arithmetic with zero tolerances.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import bench as bench_mod
from . import explorer as explorer_mod
from .companion import as_realization, realize_companion
from .errors import (
    DimensionOutOfRangeError,
    NecessaryConditionViolationError,
    ParseError,
    RealizationError,
)
from .linalg import (
    Tolerances,
    format_scalar,
    from_rows,
    matrix_from_csv,
    matrix_from_json,
    matrix_to_csv,
    matrix_to_json_obj,
)
from .spectrum import (
    DEFAULT_POWER_DEPTH,
    Spectrum,
    SpectrumKind,
    check_necessary,
    classify,
    make_spectrum,
)
from .small_order import realize_small
from .suleimanova import realize_suleimanova, realize_zero_trace
from .verify import METHOD_EXPLORER, Realization, certify

EXIT_PASS = 0
EXIT_PARSE = 1
EXIT_FAIL = 2
EXIT_INCONCLUSIVE = 3

TOLERANCE_ENV_VAR = "PERMREALIZE_TOLERANCES"

METHOD_CHOICES = ("auto", "suleimanova", "small", "companion", "explore")


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    spectrum: Optional[str]
    file: Optional[str]
    method: str = "auto"
    abs_tol: Optional[float] = None
    rel_tol: Optional[float] = None
    K: int = DEFAULT_POWER_DEPTH
    seed: int = 0
    budget: int = explorer_mod.DEFAULT_BUDGET
    fmt: str = "pretty"
    exact: bool = False
    out: Optional[str] = None
    matrix_path: Optional[str] = None
    strategy: str = "alpha"
    parallel: bool = False
    sizes: Optional[tuple[int, ...]] = None


class _Parser(argparse.ArgumentParser):
    """argparse that exits 1 (not 2) on usage errors, per the exit contract.

    Also widens the negative-number matcher so an inline spectrum that
    starts with a negative entry ("-1,0.5") parses as a positional instead
    of being mistaken for an option flag.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d[\d.,eE+-]*$")

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _tolerances(cfg: CliConfig) -> Tolerances:
    if cfg.exact:
        return Tolerances.exact()
    default = Tolerances()
    abs_tol, rel_tol = default.absolute, default.relative
    env = os.environ.get(TOLERANCE_ENV_VAR)
    if env:
        try:
            a, r = env.split(",")
            abs_tol, rel_tol = float(a), float(r)
        except ValueError as e:
            raise ParseError(
                f"{TOLERANCE_ENV_VAR} must be 'abs,rel', got {env!r}"
            ) from e
    if cfg.abs_tol is not None:
        abs_tol = cfg.abs_tol
    if cfg.rel_tol is not None:
        rel_tol = cfg.rel_tol
    return Tolerances(absolute=abs_tol, relative=rel_tol)


def _parse_values(tokens: Sequence[str], exact: bool) -> list:
    values = []
    for tok in tokens:
        tok = tok.strip()
        if not tok:
            continue
        try:
            f = Fraction(tok)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"cannot parse spectrum entry {tok!r}") from e
        values.append(f if exact else float(f))
    return values


def _load_spectrum(cfg: CliConfig) -> Spectrum:
    if (cfg.spectrum is None) == (cfg.file is None):
        raise ParseError(
            "give the spectrum either inline or with --file, not both"
        )
    if cfg.spectrum is not None:
        return make_spectrum(
            _parse_values(cfg.spectrum.split(","), cfg.exact), exact=cfg.exact
        )
    with open(cfg.file, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("["):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON spectrum file: {e}") from e
        if not isinstance(obj, list):
            raise ParseError("JSON spectrum file must be an array")
        tokens = [str(v) for v in obj]
    else:
        tokens = text.split()
    return make_spectrum(_parse_values(tokens, cfg.exact), exact=cfg.exact)


def _spectrum_json(sigma: Spectrum) -> list:
    return [
        str(v) if isinstance(v, Fraction) else float(v) for v in sigma.values
    ]


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------


def cmd_check(cfg: CliConfig) -> int:
    sigma = _load_spectrum(cfg)
    tol = _tolerances(cfg)
    report = check_necessary(sigma, K=cfg.K, tol=max(tol.absolute, tol.relative))
    cls = classify(sigma)
    ok = report.power_sum_ok and report.perron_ok
    if cfg.fmt == "json":
        print(
            json.dumps(
                {
                    "spectrum": _spectrum_json(sigma),
                    "classification": cls.kind.value,
                    "positives": cls.positives,
                    "trace": float(cls.trace),
                    "power_sum_ok": report.power_sum_ok,
                    "perron_ok": report.perron_ok,
                    "spectral_radius": float(report.spectral_radius),
                    "K": report.K,
                    "conditions_hold": ok,
                }
            )
        )
    else:
        print(f"spectrum:        {', '.join(format_scalar(v) for v in sigma.values)}")
        print(f"classification:  {cls.kind.value}")
        print(f"positives:       {cls.positives}")
        print(f"trace:           {format_scalar(cls.trace)}")
        print(f"spectral radius: {format_scalar(report.spectral_radius)}")
        print(f"power sums ok:   {report.power_sum_ok} (k = 1..{report.K})")
        print(f"perron ok:       {report.perron_ok}")
        print(f"conditions hold: {ok}")
    return EXIT_PASS if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# realize
# ---------------------------------------------------------------------------


def _dispatch_realize(cfg: CliConfig, sigma: Spectrum) -> Realization:
    method = cfg.method
    if method == "auto":
        kind = classify(sigma).kind
        if kind == SpectrumKind.ZERO_TRACE_SULEIMANOVA:
            return realize_zero_trace(sigma)
        if kind == SpectrumKind.SULEIMANOVA:
            method = "suleimanova"
        elif sigma.n <= 4:
            method = "small"
        else:
            cr = realize_companion(sigma)
            if cr.nonneg:
                return as_realization(cr, sigma)
            print(
                "warning: no closed-form method applies; falling back to a "
                "budgeted pattern search",
                file=sys.stderr,
            )
            method = "explore"
    if method == "suleimanova":
        return realize_suleimanova(sigma)
    if method == "small":
        return realize_small(sigma)
    if method == "companion":
        return as_realization(realize_companion(sigma), sigma)
    if method == "explore":
        results = explorer_mod.explore(
            sigma,
            strategy=cfg.strategy,
            budget=cfg.budget,
            seed=cfg.seed,
            parallel=cfg.parallel,
        )
        for r in results:
            if r.certified:
                return Realization(
                    matrix=explorer_mod.assemble(r.tuple, r.x),
                    method=METHOD_EXPLORER,
                    target=sigma,
                    params={"x": r.x, "tuple": r.tuple.encoding},
                )
        raise NecessaryConditionViolationError(
            "the pattern search found no certified realization within budget"
        )
    raise ParseError(f"unknown method {cfg.method!r}")


def _emit_realization(cfg: CliConfig, r: Realization, passed: bool) -> None:
    case = r.params.get("case")
    if cfg.fmt == "json":
        print(
            json.dumps(
                {
                    "matrix": matrix_to_json_obj(r.matrix),
                    "method": r.method,
                    "case": case,
                    "target": _spectrum_json(r.target),
                    "certificate": r.certificate.to_json_obj(),
                }
            )
        )
    elif cfg.fmt == "csv":
        # Matrix on stdout for piping; metadata on stderr.
        sys.stdout.write(matrix_to_csv(r.matrix))
        meta = f"method={r.method}" + (f" case={case}" if case else "")
        print(
            f"{meta} certified={'pass' if passed else 'FAIL'}",
            file=sys.stderr,
        )
    else:
        print(f"method: {r.method}" + (f"  case: {case}" if case else ""))
        _print_matrix(r)
        rep = r.certificate
        print(
            "certificate: "
            f"nonneg={rep.nonneg_ok.value} structure={rep.structure_ok.value} "
            f"charpoly={rep.charpoly_ok.value} eigenpairs={rep.eigenpair_ok.value} "
            f"max_residual={rep.max_residual:.3g}"
        )
        print(f"certified: {'pass' if passed else 'FAIL'}")


def _print_matrix(r: Realization) -> None:
    cells = [
        [format_scalar(v) for v in row] for row in r.matrix.data
    ]
    width = max(len(c) for row in cells for c in row)
    for row in cells:
        print("  " + "  ".join(c.rjust(width) for c in row))


def cmd_realize(cfg: CliConfig) -> int:
    sigma = _load_spectrum(cfg)
    tol = _tolerances(cfg)
    try:
        r = _dispatch_realize(cfg, sigma)
    except (NecessaryConditionViolationError, DimensionOutOfRangeError) as e:
        print(f"not realizable by the available methods: {e}", file=sys.stderr)
        return EXIT_FAIL
    report = certify(r, tol)
    r = r.with_certificate(report)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(matrix_to_csv(r.matrix))
    _emit_realization(cfg, r, report.passed)
    return EXIT_PASS if report.passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(cfg: CliConfig) -> int:
    sigma = _load_spectrum(cfg)
    with open(cfg.matrix_path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("["):
        M = matrix_from_json(text, exact=cfg.exact)
    else:
        M = matrix_from_csv(text, exact=cfg.exact)
    tol = _tolerances(cfg)
    r = Realization(matrix=M, method="", target=sigma)
    report = certify(r, tol)
    if cfg.fmt == "json":
        print(json.dumps(report.to_json_obj()))
    else:
        for name, state in (
            ("nonneg", report.nonneg_ok),
            ("structure", report.structure_ok),
            ("charpoly", report.charpoly_ok),
            ("eigenpairs", report.eigenpair_ok),
        ):
            print(f"{name:<12} {state.value}")
        print(f"max residual {report.max_residual:.6g}")
        print(f"passed       {report.passed}")
    return EXIT_PASS if report.passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------


def cmd_bench(cfg: CliConfig) -> int:
    sizes = cfg.sizes or bench_mod.DEFAULT_SIZES
    report = bench_mod.run_bench(sizes)
    # Cross-check at n = 4: both methods agree on the integer reference
    # example.
    sigma = make_spectrum([10, -1, -2, -3])
    sule_ok = certify(realize_suleimanova(sigma)).passed
    comp_ok = certify(as_realization(realize_companion(sigma), sigma)).passed
    obj = report.to_json_obj()
    obj["n4_cross_check"] = {"suleimanova": sule_ok, "companion": comp_ok}
    print(json.dumps(obj, indent=2))
    return EXIT_PASS


# ---------------------------------------------------------------------------
# explore
# ---------------------------------------------------------------------------


def cmd_explore(cfg: CliConfig) -> int:
    sigma = _load_spectrum(cfg)
    results = explorer_mod.explore(
        sigma,
        strategy=cfg.strategy,
        budget=cfg.budget,
        seed=cfg.seed,
        parallel=cfg.parallel,
    )
    log = explorer_mod.results_to_jsonl(results)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(log)
    else:
        sys.stdout.write(log)
    found = any(r.certified for r in results)
    return EXIT_PASS if found else EXIT_INCONCLUSIVE


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="permrealize",
        description=(
            "Construct and certify nonnegative matrices realizing "
            "prescribed real spectra."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "spectrum",
        nargs="?",
        help="inline comma-separated spectrum, e.g. \"10,-1,-2,-3\"",
    )
    common.add_argument(
        "--file", help="spectrum file (JSON array or one value per line)"
    )
    common.add_argument(
        "--format",
        dest="fmt",
        choices=("json", "csv", "pretty"),
        default="pretty",
    )
    common.add_argument("--exact", action="store_true",
                        help="exact rational arithmetic, zero tolerances")
    common.add_argument("--abs-tol", type=float, default=None)
    common.add_argument("--rel-tol", type=float, default=None)

    p = sub.add_parser(
        "check", parents=[common], help="necessary conditions + classification"
    )
    p.add_argument("--power-depth", dest="K", type=int,
                   default=DEFAULT_POWER_DEPTH)

    p = sub.add_parser(
        "realize", parents=[common], help="construct and certify a matrix"
    )
    p.add_argument("--method", choices=METHOD_CHOICES, default="auto")
    p.add_argument("--out", help="also write the matrix as CSV to this file")
    p.add_argument("--strategy", choices=explorer_mod.STRATEGIES,
                   default="alpha")
    p.add_argument("--budget", type=int, default=explorer_mod.DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--parallel", action="store_true")

    p = sub.add_parser(
        "verify", parents=[common],
        help="certify a matrix file against a spectrum",
    )
    p.add_argument("--matrix", dest="matrix_path", required=True,
                   help="matrix file (CSV rows or JSON nested arrays)")

    p = sub.add_parser("bench", parents=[common], help="timing report (JSON)")
    p.add_argument("--sizes", help="comma list of matrix orders",
                   default=None)

    p = sub.add_parser(
        "explore", parents=[common], help="pattern search (JSON-lines log)"
    )
    p.add_argument("--strategy", choices=explorer_mod.STRATEGIES,
                   default="alpha")
    p.add_argument("--budget", type=int, default=explorer_mod.DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--out", help="write the JSON-lines log to this file")

    return parser


def _config_from_args(ns: argparse.Namespace) -> CliConfig:
    sizes = None
    if getattr(ns, "sizes", None):
        sizes = tuple(int(tok) for tok in ns.sizes.split(","))
    return CliConfig(
        subcommand=ns.subcommand,
        spectrum=getattr(ns, "spectrum", None),
        file=getattr(ns, "file", None),
        method=getattr(ns, "method", "auto"),
        abs_tol=getattr(ns, "abs_tol", None),
        rel_tol=getattr(ns, "rel_tol", None),
        K=getattr(ns, "K", DEFAULT_POWER_DEPTH),
        seed=getattr(ns, "seed", 0),
        budget=getattr(ns, "budget", explorer_mod.DEFAULT_BUDGET),
        fmt=getattr(ns, "fmt", "pretty"),
        exact=getattr(ns, "exact", False),
        out=getattr(ns, "out", None),
        matrix_path=getattr(ns, "matrix_path", None),
        strategy=getattr(ns, "strategy", "alpha"),
        parallel=getattr(ns, "parallel", False),
        sizes=sizes,
    )


_COMMANDS = {
    "check": cmd_check,
    "realize": cmd_realize,
    "verify": cmd_verify,
    "bench": cmd_bench,
    "explore": cmd_explore,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
        cfg = _config_from_args(ns)
        return _COMMANDS[cfg.subcommand](cfg)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_PARSE
    except (ParseError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except RealizationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


def entry() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
