"""Command line entry point: ``boolgb <command> ...``.

Exit codes: 0 success, 1 input error, 2 verification failure.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from .buchberger import buchberger_gb, is_groebner_basis
from .encoders import (
    RandomIdealParams,
    decode_linear_basis,
    encode_shidoku,
    fixed_point_ideal,
    parse_clues,
    parse_model,
    point_to_grid,
    random_ideal,
)
from .oracle import VARIETY_CAP, enumerate_variety, varieties_equal
from .ring import ParseError, Polynomial, Ring, parse_poly_file, render_poly, render_poly_file

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2


class InputError(Exception):
    pass


@dataclass
class BenchRecord:
    name: str
    nvars: int
    ngens: int
    gb_size: int
    wall_time: float
    verified: bool


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_polys(path: str) -> tuple[Ring, list[Polynomial]]:
    try:
        return parse_poly_file(_read(path))
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _print_basis(ring: Ring, elements: list[Polynomial]) -> None:
    for g in elements:
        print(render_poly(g, ring))


def _print_stats(stats) -> None:
    _err(
        f"basis pairs {stats.basis_pairs}, field pairs {stats.field_pairs}, "
        f"criterion 1 skips {stats.criterion1_skips}, chain skips {stats.chain_skips}, "
        f"reductions {stats.reductions}, to zero {stats.zero_reductions}, "
        f"wall time {stats.wall_time:.6f} s"
    )


def _verify(ring: Ring, gens: list[Polynomial], basis: list[Polynomial]) -> bool:
    if not is_groebner_basis(basis, ring):
        _err("verification failed: result is not a Groebner basis")
        return False
    if ring.nvars <= VARIETY_CAP and not varieties_equal(gens, basis, ring):
        _err("verification failed: varieties differ")
        return False
    return True


def cmd_gb(args) -> int:
    ring, gens = _load_polys(args.file)
    gb = buchberger_gb(gens, ring)
    _print_basis(ring, gb.elements)
    if args.stats:
        _print_stats(gb.stats)
    if args.verify and not _verify(ring, gens, gb.elements):
        return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args) -> int:
    ring, polys = _load_polys(args.file)
    if is_groebner_basis(polys, ring):
        print("groebner basis: yes")
        return EXIT_OK
    print("groebner basis: no")
    return EXIT_VERIFY


def cmd_shidoku(args) -> int:
    try:
        puzzle = parse_clues(args.clues)
    except ParseError as exc:
        raise InputError(f"bad clues: {exc}") from None
    ring, gens = encode_shidoku(puzzle)
    gb = buchberger_gb(gens, ring)
    _err(f"{len(gens)} generators, basis of {len(gb)} polynomials in {gb.stats.wall_time:.2f} s")
    if not args.solve:
        _print_basis(ring, gb.elements)
        return EXIT_OK
    if gb.is_unit():
        print("no solution")
        return EXIT_OK
    point = decode_linear_basis(gb.elements, ring)
    grid = None if point is None else point_to_grid(point)
    if grid is None:
        print(f"multiple solutions (basis size {len(gb)})")
        return EXIT_OK
    for r in range(4):
        print("".join(str(v) for v in grid[r * 4:r * 4 + 4]))
    return EXIT_OK


def cmd_fixpoints(args) -> int:
    try:
        model = parse_model(_read(args.file))
    except ParseError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    ring = model.ring
    gens = fixed_point_ideal(model)
    gb = buchberger_gb(gens, ring)
    _print_basis(ring, gb.elements)
    if args.enumerate:
        if ring.nvars > VARIETY_CAP:
            _err(f"not enumerating: {ring.nvars} variables exceeds cap {VARIETY_CAP}")
        else:
            report = enumerate_variety(gb.elements, ring)
            print(f"# {len(report)} fixed points ({' '.join(ring.var_names)})")
            for s in report.as_bitstrings():
                print(s)
    return EXIT_OK


def cmd_random(args) -> int:
    try:
        params = RandomIdealParams(args.vars, args.polys, args.max_terms, args.max_degree, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    ring, polys = random_ideal(params)
    print(
        f"# random --vars {args.vars} --polys {args.polys} --max-terms {args.max_terms} "
        f"--max-degree {args.max_degree} --seed {args.seed}"
    )
    sys.stdout.write(render_poly_file(ring, polys))
    return EXIT_OK


def load_instance(path: Path) -> tuple[Ring, list[Polynomial]]:
    """Polynomial file, ``.model`` update file, or ``.clues`` Shidoku puzzle."""
    text = _read(str(path))
    try:
        if path.suffix == ".model":
            model = parse_model(text)
            return model.ring, fixed_point_ideal(model)
        if path.suffix == ".clues":
            return encode_shidoku(parse_clues(text))
        return parse_poly_file(text)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


BENCH_SUFFIXES = {".poly", ".model", ".clues"}


def run_bench(directory: Path) -> list[BenchRecord]:
    records = []
    for path in sorted(p for p in directory.iterdir() if p.suffix in BENCH_SUFFIXES):
        ring, gens = load_instance(path)
        start = time.perf_counter()
        gb = buchberger_gb(gens, ring)
        elapsed = time.perf_counter() - start
        ok = is_groebner_basis(gb.elements, ring)
        records.append(BenchRecord(path.stem, ring.nvars, len(gens), len(gb), elapsed, ok))
    return records


def format_table(records: list[BenchRecord]) -> str:
    head = f"{'name':<24} {'nvars':>5} {'ngens':>6} {'gb_size':>7} {'wall_time':>11} verified"
    lines = [head, "-" * len(head)]
    for r in records:
        lines.append(
            f"{r.name:<24} {r.nvars:>5} {r.ngens:>6} {r.gb_size:>7} {r.wall_time:>11.6f} {'yes' if r.verified else 'NO'}"
        )
    return "\n".join(lines)


def cmd_bench(args) -> int:
    directory = Path(args.dir)
    if not directory.is_dir():
        raise InputError(f"{directory}: not a directory")
    records = run_bench(directory)
    if args.json:
        for r in records:
            print(json.dumps(asdict(r)))
    else:
        print(format_table(records))
    return EXIT_OK if all(r.verified for r in records) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boolgb", description="Groebner bases of Boolean polynomial ideals")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="reduced lex Groebner basis of a polynomial file")
    p.add_argument("file")
    p.add_argument("--verify", action="store_true", help="check the result independently")
    p.add_argument("--stats", action="store_true", help="print pair and timing counters to stderr")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("verify", help="is the polynomial file already a Groebner basis?")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("shidoku", help="Groebner basis of a 4x4 puzzle (16 chars of 1234.)")
    p.add_argument("clues")
    p.add_argument("--solve", action="store_true", help="decode the basis into a grid")
    p.set_defaults(func=cmd_shidoku)

    p = sub.add_parser("fixpoints", help="fixed-point ideal of a Boolean update model")
    p.add_argument("file")
    p.add_argument("--enumerate", action="store_true", help="also list fixed points by brute force")
    p.set_defaults(func=cmd_fixpoints)

    p = sub.add_parser("random", help="print a seeded random instance")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--polys", type=int, required=True)
    p.add_argument("--max-terms", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("bench", help="time every instance in a directory")
    p.add_argument("dir")
    p.add_argument("--json", action="store_true", help="one JSON record per line")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; usage errors are input errors here
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        _err(f"error: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
