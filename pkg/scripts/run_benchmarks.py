"""Build a benchmark suite on disk and time every instance.

Writes random ideals at several sizes, the bundled Boolean models and a few
Shidoku puzzles into ``--suite`` (default ``bench_suite/``), then runs the
same harness as ``boolgb bench`` and prints a table (or JSON lines).

    python scripts/run_benchmarks.py
    python scripts/run_benchmarks.py --no-empty-shidoku --json > results.jsonl
"""

import argparse
import json
import shutil
import sys
from dataclasses import asdict
from pathlib import Path

from boolgb.cli import format_table, run_bench
from boolgb.encoders import RandomIdealParams, random_ideal
from boolgb.ring import render_poly_file

ROOT = Path(__file__).resolve().parent.parent
MODELS = ROOT / "tests" / "data" / "models"

RANDOM_SIZES = [
    # name, nvars, npolys, max_terms, max_degree
    ("rand_s2", 10, 4, 4, 2),
    ("rand_s3", 12, 5, 5, 3),
    ("rand_16", 16, 8, 5, 3),
    ("rand_24", 24, 12, 4, 2),
    ("rand_32", 32, 16, 4, 2),
]

PUZZLES = {
    "shidoku_unique": "123.........4..1",
    "shidoku_two": "1....2....3....4",
    "shidoku_contradiction": "11..............",
    "shidoku_empty": "................",
}


def build_suite(suite: Path, seed: int, empty_shidoku: bool) -> None:
    suite.mkdir(parents=True, exist_ok=True)
    (suite / "xy_z.poly").write_text("ring 3 : x y z\nx*y+z\n")
    for name, n, k, t, d in RANDOM_SIZES:
        ring, polys = random_ideal(RandomIdealParams(n, k, t, d, seed))
        (suite / f"{name}.poly").write_text(render_poly_file(ring, polys))
    for model in MODELS.glob("*.model"):
        shutil.copy(model, suite)
    for name, clues in PUZZLES.items():
        if name == "shidoku_empty" and not empty_shidoku:
            continue
        (suite / f"{name}.clues").write_text(clues + "\n")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--suite", type=Path, default=Path("bench_suite"))
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--no-empty-shidoku", action="store_true", help="skip the ~30 s empty grid")
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)

    build_suite(args.suite, args.seed, not args.no_empty_shidoku)
    records = run_bench(args.suite)
    if args.json:
        for r in records:
            print(json.dumps(asdict(r)))
    else:
        print(format_table(records))
    return 0 if all(r.verified for r in records) else 2


if __name__ == "__main__":
    sys.exit(main())
