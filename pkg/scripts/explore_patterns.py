"""Pattern search for permutative realizations of a real spectrum.

Enumerates permutation-tuple patterns under the chosen strategy, fits a
first row to each by coordinate descent, and certifies any hit whose
objective crosses the certification threshold.

    python scripts/explore_patterns.py "3,3,-2,-2,-2" --strategy random \\
        --budget 8000 --seed 7 --out results.jsonl
"""

from __future__ import annotations

import argparse
import json
import sys

from permrealize import explore, make_spectrum
from permrealize.explorer import DEFAULT_BUDGET, STRATEGIES, results_to_jsonl


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("spectrum", help='comma list, e.g. "3,3,-2,-2,-2"')
    parser.add_argument("--strategy", choices=STRATEGIES, default="alpha")
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--parallel", action="store_true")
    parser.add_argument("--out", help="write one JSON object per pattern here")
    args = parser.parse_args(argv)

    sigma = make_spectrum(
        [float(tok) for tok in args.spectrum.split(",") if tok.strip()]
    )
    results = explore(
        sigma,
        strategy=args.strategy,
        budget=args.budget,
        seed=args.seed,
        parallel=args.parallel,
    )

    certified = [r for r in results if r.certified]
    print(
        f"{len(results)} patterns searched, {len(certified)} certified "
        f"(strategy={args.strategy}, budget={args.budget}, seed={args.seed})"
    )
    for r in results[:5]:
        flag = "certified" if r.certified else "         "
        print(f"  {flag}  objective={r.objective:.3e}  tuple={r.tuple.encoding}")
    if certified:
        best = certified[0]
        print("best first row:", json.dumps(list(best.x)))

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(results_to_jsonl(results))
        print(f"log written to {args.out}")
    return 0 if certified else 3


if __name__ == "__main__":
    sys.exit(main())
