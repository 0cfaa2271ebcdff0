"""Command line entry point: ``mscb solve|verify|reduce|gen|bench``.

Exit status is 0 on success, 1 when solving or validation fails, 2 on a
usage error (argparse's own convention).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from mscb import io as mio
from mscb.bench import run_bench, write_csv
from mscb.core import InvalidColoringError, MSCBError, check_coloring, cost, require_valid
from mscb.dispatch import SOLVERS, dispatch
from mscb.generate import FAMILIES, SHAPES, GeneratorSpec, generate
from mscb.reductions import (
    reduce_is_to_matching,
    reduce_listcol_to_bipartite3_weighted,
    reduce_listcol_to_bipartite4,
    reduce_matching_to_path,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _colors(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _cmd_solve(args: argparse.Namespace) -> int:
    instance = mio.read_instance(args.file)
    result = dispatch(instance, args.algo)
    print(mio.result_json(result) if args.json else mio.result_line(result))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    instance = mio.read_instance(args.file)
    require_valid(instance)
    if len(args.colors) != instance.n:
        raise InvalidColoringError(f"expected {instance.n} colors, got {len(args.colors)}")
    check_coloring(instance.graph, args.colors)
    value = cost(instance, args.colors)
    line = f"cost={value} proper=yes"
    if instance.budget is not None:
        within = value <= instance.budget
        line += f" budget={instance.budget} within={'yes' if within else 'no'}"
    print(line)
    return EXIT_OK


def _cmd_reduce(args: argparse.Namespace) -> int:
    text = Path(args.input).read_text(encoding="utf-8")
    if args.kind == "is2match":
        if args.k is None:
            raise argparse.ArgumentTypeError("is2match needs --k")
        target, trace = reduce_is_to_matching(mio.parse(text).graph, args.k)
    elif args.kind == "match2path":
        target, trace = reduce_matching_to_path(mio.parse(text))
    elif args.kind == "lc2bip4":
        target, trace = reduce_listcol_to_bipartite4(mio.parse_list_coloring(text))
    else:
        target, trace = reduce_listcol_to_bipartite3_weighted(mio.parse_list_coloring(text))
    mio.write_instance(target, args.output, comments=[f"{args.kind} of {Path(args.input).name}"])
    print(f"wrote {args.output}: n={target.n} bundles={len(target.bundles)} budget={trace.budget}")
    return EXIT_OK


def _spec(args: argparse.Namespace, n: int) -> GeneratorSpec:
    return GeneratorSpec(
        shape=args.shape,
        n=n,
        family=args.family,
        bundles=args.bundles,
        width=args.width,
        wmin=args.wmin,
        wmax=args.wmax,
        seed=args.seed,
        edge_prob=args.edge_prob,
    )


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = _spec(args, args.n)
    instance = generate(spec)
    note = (f"gen shape={spec.shape} n={spec.n} family={spec.family} bundles={spec.bundles}"
            f" width={spec.width} weights={spec.wmin}..{spec.wmax} rng=mt19937 seed={spec.seed}")
    mio.write_instance(instance, args.output, comments=[note])
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    specs = [_spec(args, n) for n in args.n]
    rows = run_bench(specs, args.reps, args.algo, args.jobs)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_csv(rows, fh)
    else:
        write_csv(rows, sys.stdout)
    return EXIT_OK


def _add_gen_flags(p: argparse.ArgumentParser, many: bool) -> None:
    p.add_argument("--shape", choices=SHAPES, default="tree")
    p.add_argument("--family", choices=FAMILIES, default="partition")
    if many:
        p.add_argument("--n", type=int, nargs="*", default=[], help="one spec per value")
    else:
        p.add_argument("--n", type=int, default=8)
    p.add_argument("--bundles", type=int, default=None, help="family size (random if omitted)")
    p.add_argument("--width", type=int, default=3, help="max size of an overlapping bundle")
    p.add_argument("--wmin", type=int, default=1)
    p.add_argument("--wmax", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--edge-prob", type=float, default=0.4)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mscb", description="Minimum sum coloring with bundles.")
    sub = parser.add_subparsers(dest="command", required=True)
    algos = ["auto", *SOLVERS]

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("--algo", choices=algos, default="auto")
    p.add_argument("--json", action="store_true", help="print a JSON document")
    p.add_argument("file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a coloring and print its cost")
    p.add_argument("file")
    p.add_argument("--colors", type=_colors, required=True, help="comma-separated, vertex order")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reduce", help="build a hardness-reduction target")
    p.add_argument("kind", choices=["is2match", "match2path", "lc2bip4", "lc2bip3w"])
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--k", type=int, default=None, help="independent set size (is2match)")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("gen", help="generate a random instance")
    _add_gen_flags(p, many=False)
    p.add_argument("output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="time dispatch over generated instances, CSV out")
    _add_gen_flags(p, many=True)
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--algo", choices=algos, default="auto")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="CSV path (stdout if omitted)")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except (MSCBError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
