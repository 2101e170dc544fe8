"""Command line interface: ``convexmeans <command> ...``.

Exit codes are 0 on success, 1 for invalid input (unreadable or malformed body
files, bad arguments, failed suite checks) and 2 when a computation fails.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import constructions
from .bodies import negate
from .bodyfile import dumps, read_body
from .containment import covering_radius, minkowski_asymmetry, r0_max
from .errors import DomainError, InvalidBodyError, UnsupportedExactError
from .gmean import DEFAULT_MAX_ITER, DEFAULT_TOL, gmean_iterate
from .means import LOWER, UPPER, MeanSpec, default_grid, mean
from .suite import CHECKS, format_report, run_suite
from .svg import write_svg

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_COMPUTE = 2


class _InputError(Exception):
    pass


def parse_exponent(text):
    """Float parser that also takes inf, +inf and -inf."""
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if math.isnan(value):
        raise argparse.ArgumentTypeError("the exponent cannot be nan")
    return value


def _load(path):
    try:
        body, _ = read_body(path)
    except OSError as exc:
        raise _InputError(f"{path}: {exc.strerror or exc}") from exc
    except (InvalidBodyError, DomainError) as exc:
        raise _InputError(f"{path}: {exc}") from exc
    return body


def _load_planar(path):
    body = _load(path)
    if body.vertices.shape[1] != 2:
        raise _InputError(f"{path}: only planar bodies are supported here")
    return body


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args):
    body = _load(args.path)
    print(f"ok: dim {body.vertices.shape[1]}, {len(body.vertices)} vertices, "
          f"{len(body.normals)} facets")
    return EXIT_OK


def cmd_mean(args):
    K = _load_planar(args.K)
    L = _load_planar(args.L)
    if args.kind == "dispatch":
        spec = MeanSpec.dispatch(args.p)
    else:
        spec = MeanSpec(UPPER if args.kind == "upper" else LOWER, args.p)
    grid = default_grid(K, L, n_angles=args.grid) if args.grid else None
    body = mean(K, L, spec, grid)
    _emit(dumps(body, args.name or f"{spec.kind}_{spec.p:g}"), args.out)
    return EXIT_OK


def cmd_gmean(args):
    K = _load_planar(args.K)
    L = _load_planar(args.L)
    body, trace = gmean_iterate(K, L, args.p, args.tol, args.max_iter,
                                approximate=args.approximate)
    if args.trace:
        for s in trace.steps:
            print(f"step {s.i:3d}  gap {s.gap:.6e}  bound {s.bound:.6e}", file=sys.stderr)
    _emit(dumps(body, args.name or f"G_{args.p:g}"), args.out)
    return EXIT_OK


def cmd_radius(args):
    K = _load(args.K)
    L = _load(args.L)
    out = {"R0(K,L)": covering_radius(K, L), "R0(L,K)": covering_radius(L, K),
           "R0max": r0_max(K, L)}
    for k, v in out.items():
        print(f"{k} = {v:.17g}")
    return EXIT_OK


def cmd_asymmetry(args):
    res = minkowski_asymmetry(_load(args.path))
    print(f"s = {res.s:.17g}")
    print("center = " + " ".join(f"{c:.17g}" for c in res.center))
    return EXIT_OK


def cmd_suite(args):
    if args.filter and not any(args.filter in n for n in CHECKS):
        raise _InputError(f"no check id contains {args.filter!r}; ids: {', '.join(CHECKS)}")
    results = run_suite(seed=args.seed, filter=args.filter, jobs=args.jobs)
    if args.report == "json":
        _emit(json.dumps([r.to_dict() for r in results], indent=2) + "\n", args.out)
    else:
        _emit(format_report(results) + "\n", args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_INVALID


def cmd_plot(args):
    bodies = [_load(p) for p in args.paths]
    labels = None
    if args.labels is not None:
        labels = [s.strip() for s in args.labels.split(",")]
        if len(labels) != len(bodies):
            raise _InputError(f"got {len(labels)} labels for {len(bodies)} bodies")
    for path, body in zip(args.paths, bodies):
        if body.vertices.shape[1] != 2:
            raise _InputError(f"{path}: only planar bodies can be plotted")
    write_svg(args.out, bodies, labels, fill=args.fill)
    return EXIT_OK


_BUILTIN = {
    "triangle": lambda a: constructions.regular_triangle(),
    "pentagon": lambda a: constructions.bm_pentagon(),
    "cross": lambda a: constructions.cross_body(a.dim, a.param if a.param is not None else 3.0),
    "shifted-cube": lambda a: constructions.shifted_cube(a.dim, a.param if a.param is not None else 3.0),
    "triangle-family": lambda a: constructions.triangle_family(a.param if a.param is not None else 1.5),
    "boxes-outer": lambda a: constructions.shifted_boxes()[0],
    "boxes-inner": lambda a: constructions.shifted_boxes()[1],
    "b1": lambda a: constructions.b1(),
    "binf": lambda a: constructions.b_inf(),
    "b2": lambda a: constructions.b2_approx(int(a.param) if a.param is not None else 4096),
}


def cmd_example(args):
    body = _BUILTIN[args.which](args)
    if args.negate:
        body = negate(body)
    name = args.which + ("-neg" if args.negate else "")
    _emit(dumps(body, name), args.out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="convexmeans",
                                     description="p-means of convex bodies and their geometric mean")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a body file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("mean", help="upper or lower p-mean of two planar bodies")
    p.add_argument("K")
    p.add_argument("L")
    p.add_argument("--p", type=parse_exponent, required=True)
    p.add_argument("--kind", choices=("upper", "lower", "dispatch"), default="dispatch")
    p.add_argument("--grid", type=int, default=None,
                   help="number of directions for sampled means (p > 1 upper, p < -1 lower)")
    p.add_argument("--name")
    p.add_argument("--out")
    p.set_defaults(func=cmd_mean)

    p = sub.add_parser("gmean", help="geometric mean G_p by alternating iteration")
    p.add_argument("K")
    p.add_argument("L")
    p.add_argument("--p", type=parse_exponent, default=0.0)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p.add_argument("--approximate", action="store_true",
                   help="allow |p| > 1 through sampled means")
    p.add_argument("--trace", action="store_true", help="print gap and bound per step to stderr")
    p.add_argument("--name")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gmean)

    p = sub.add_parser("radius", help="covering radii R_0(K, L), R_0(L, K) and R_0^max")
    p.add_argument("K")
    p.add_argument("L")
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("asymmetry", help="Minkowski asymmetry and a Minkowski center")
    p.add_argument("path")
    p.set_defaults(func=cmd_asymmetry)

    p = sub.add_parser("suite", help="run the verification checks")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--filter", default=None, help="run checks whose id contains this text")
    p.add_argument("--report", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("plot", help="draw planar bodies as SVG")
    p.add_argument("paths", nargs="+")
    p.add_argument("--out", required=True)
    p.add_argument("--labels", help="comma separated, one per body")
    p.add_argument("--fill", action="store_true")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("example", help="write a built-in body as a body file")
    p.add_argument("which", choices=sorted(_BUILTIN))
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--param", type=float, default=None,
                   help="R for cross and shifted-cube, r for triangle-family, vertex count for b2")
    p.add_argument("--negate", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (_InputError, DomainError, InvalidBodyError, UnsupportedExactError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ArithmeticError, RuntimeError, ValueError, np.linalg.LinAlgError) as exc:
        print(f"computation failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
