"""Command-line surface: count / prune / vc / witness / loss / sweep / pac.

Exit codes: 0 success (including a witness search that finds nothing),
1 usage or parse error, 2 budget refusal, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from .dotgraph import build_graph, count_report
from .errors import BudgetExceededError
from .experiments import (
    SweepConfig,
    load_pointset,
    random_subset,
    run_sweep,
    save_pointset,
)
from .geometry import PointSet, check_t, loss
from .gf import Field
from .errors import ValueOutOfRangeError, DimensionMismatchError
from .prune import prune_both, prune_lower, prune_upper
from .shatter import (
    PacParams,
    find_vc2_witness,
    find_vc3_witness,
    pac_sample_bounds,
    vc_dimension,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we use 1
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_input_flags(sp):
    sp.add_argument("--p", type=int, required=True, help="field characteristic")
    sp.add_argument("--k", type=int, default=1, help="extension degree (q = p^k)")
    sp.add_argument("--t", type=int, default=1, help="target dot product (nonzero)")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--full", action="store_true", help="E = all of F_q^3")
    src.add_argument("--in", dest="infile", metavar="FILE", help="point file")
    src.add_argument("--random", type=int, metavar="SIZE", help="seeded random subset")
    sp.add_argument("--seed", type=int, default=0, help="seed for --random / search")


def _build_input(args):
    ctx = Field(args.p, args.k)
    t = args.t % ctx.q
    check_t(t, ctx)
    if args.full:
        pset = PointSet.full_space(ctx, 3)
    elif args.infile is not None:
        pset = load_pointset(args.infile, ctx, 3)
    else:
        pset = random_subset(ctx, 3, args.random, args.seed)
    return ctx, pset, t


def _parse_point(text: str, ctx: Field):
    parts = text.split(",")
    if len(parts) != 3:
        raise DimensionMismatchError(f"expected 3 coordinates, got {len(parts)}")
    coords = []
    for tok in parts:
        val = int(tok.strip())
        if not 0 <= val < ctx.q:
            raise ValueOutOfRangeError(f"coordinate {val} outside [0, {ctx.q})")
        coords.append(val)
    return tuple(coords)


def _fmt_bool(x) -> str:
    return "true" if x else "false"


def _cmd_count(args):
    _, pset, t = _build_input(args)
    g = build_graph(pset, t)
    rep = count_report(g, naive=args.naive)
    print(f"n={len(pset)}")
    print(f"q={pset.ctx.q}")
    print(f"t={t}")
    for name, count in [
        ("edge", rep.edge_count),
        ("p5", rep.p5_count),
        ("c4", rep.c4_count),
        ("a", rep.a_count),
        ("a_degenerate", rep.a_degenerate_count),
        ("a_prime", rep.a_prime_count),
    ]:
        band = rep.bands["edges" if name == "edge" else name]
        print(f"{name}_count={count}")
        print(f"{name}_band_lower={band.lower}")
        print(f"{name}_band_upper={band.upper}")
        print(f"{name}_in_band={_fmt_bool(band.in_band)}")
    print(f"f_sum={rep.f_sum}")
    print(f"f_sum_sq={rep.f_sum_sq}")
    print(f"f_support={rep.f_support}")
    cs_ok = rep.f_sum**2 <= rep.f_sum_sq * rep.f_support if rep.f_support else True
    print(f"cauchy_schwarz_ok={_fmt_bool(cs_ok)}")


def _cmd_prune(args):
    _, pset, t = _build_input(args)
    g = build_graph(pset, t)
    if args.upper:
        rep = prune_upper(g)
    elif args.lower:
        rep = prune_lower(g)
    else:
        rep = prune_both(g)
    print(f"direction={rep.direction}")
    print(f"input_size={rep.input_size}")
    print(f"output_size={rep.output_size}")
    print(f"threshold={rep.threshold if rep.threshold is not None else 'none'}")
    print(f"size_guarantee_met={_fmt_bool(rep.size_guarantee_met)}")
    print(f"internal_max_degree={rep.internal_max_degree}")
    if rep.direction == "upper":
        print(f"internal_bound={rep.internal_bound}")
        print(f"internal_bound_holds={_fmt_bool(rep.internal_bound_holds)}")
    if rep.stages is not None:
        up, low = rep.stages
        print(f"upper_threshold={up.threshold}")
        print(f"upper_output_size={up.output_size}")
        if low is not None:
            print(f"lower_threshold={low.threshold}")
            print(f"lower_output_size={low.output_size}")
    if args.out:
        save_pointset(pset.subset(rep.kept_indices), args.out)
        print(f"saved={args.out}")


def _cmd_vc(args):
    _, pset, t = _build_input(args)
    g = build_graph(pset, t)
    result = vc_dimension(g, args.max, budget=args.budget)
    print(f"vc_dimension={result.dimension}")
    print(f"truncated={_fmt_bool(result.truncated)}")


def _cmd_witness(args):
    _, pset, t = _build_input(args)
    g = build_graph(pset, t)
    find = find_vc2_witness if args.vc2 else find_vc3_witness
    w = find(g, strategy=args.strategy, seed=args.seed, budget=args.budget)
    if w is None:
        print("none")
        return
    for name in w.__dataclass_fields__:
        pt = getattr(w, name)
        print(f"{name}=" + ",".join(str(c) for c in pt))


def _cmd_loss(args):
    ctx = Field(args.p, args.k)
    t = args.t % ctx.q
    check_t(t, ctx)
    y = _parse_point(args.y, ctx)
    ystar = _parse_point(args.ystar, ctx)
    rep = loss(y, ystar, t, ctx)
    print(f"mismatches={rep.mismatches}")
    print(f"total={rep.total}")
    print(f"loss={rep.loss}")
    print(f"loss_decimal={float(rep.loss)!r}")


def _cmd_sweep(args):
    cfg = SweepConfig.from_toml(args.config)
    records = run_sweep(cfg, out_path=args.out)
    print(f"records={len(records)}")
    print(f"out={args.out}")


def _cmd_pac(args):
    params = PacParams(
        n=args.n, epsilon=args.eps, delta=args.delta, c1=args.c1, c2=args.c2
    )
    lower, upper = pac_sample_bounds(params)
    print(f"lower={float(lower)!r}")
    print(f"upper={float(upper)!r}")


def build_parser() -> _Parser:
    parser = _Parser(prog="dotvc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("count", parents=[], help="configuration counts with bands")
    _add_input_flags(sp)
    sp.add_argument("--naive", action="store_true", help="use the oracle enumerators")
    sp.set_defaults(func=_cmd_count)

    sp = sub.add_parser("prune", help="degree filters")
    _add_input_flags(sp)
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--upper", action="store_true")
    mode.add_argument("--lower", action="store_true")
    mode.add_argument("--both", action="store_true")
    sp.add_argument("--out", metavar="FILE", help="write kept points")
    sp.set_defaults(func=_cmd_prune)

    sp = sub.add_parser("vc", help="brute-force VC dimension")
    _add_input_flags(sp)
    sp.add_argument("--max", type=int, default=4)
    sp.add_argument("--budget", type=int, default=5_000_000)
    sp.set_defaults(func=_cmd_vc)

    sp = sub.add_parser("witness", help="shattering certificate search")
    _add_input_flags(sp)
    which = sp.add_mutually_exclusive_group(required=True)
    which.add_argument("--vc2", action="store_true")
    which.add_argument("--vc3", action="store_true")
    sp.add_argument("--strategy", choices=("exhaustive", "random"), default="exhaustive")
    sp.add_argument("--budget", type=int, default=1_000_000)
    sp.set_defaults(func=_cmd_witness)

    sp = sub.add_parser("loss", help="exact hypothesis disagreement")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--y", required=True, metavar="a,b,c")
    sp.add_argument("--ystar", required=True, metavar="a,b,c")
    sp.set_defaults(func=_cmd_loss)

    sp = sub.add_parser("sweep", help="density sweep to CSV")
    sp.add_argument("--config", required=True, metavar="FILE.toml")
    sp.add_argument("--out", required=True, metavar="FILE.csv")
    sp.set_defaults(func=_cmd_sweep)

    sp = sub.add_parser("pac", help="sample-size bracket")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--eps", type=float, required=True)
    sp.add_argument("--delta", type=float, required=True)
    sp.add_argument("--c1", type=float, default=1.0)
    sp.add_argument("--c2", type=float, default=1.0)
    sp.set_defaults(func=_cmd_pac)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except BudgetExceededError as exc:
        print(f"dotvc: budget refusal: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"dotvc: i/o error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"dotvc: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
