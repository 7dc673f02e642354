"""Reproduction harness: seeded point sampling, density sweeps, CSV output.

Everything here is deterministic given the configuration. Sampling uses
numpy's legacy RandomState (its streams are frozen by numpy's backward
compatibility policy): a seeded permutation of the integer encodings
0 .. q^d - 1, truncated to the requested size. Sweep cells derive their
seed from (base seed, p, k, trial) only - not from the density exponent -
so the sampled sets at one trial are nested across the alpha grid, which
makes the empirical phase curve monotone witness-for-witness.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .dotgraph import build_graph, edge_band, edge_count
from .errors import (
    DuplicatePointError,
    InvalidConfigError,
    PointParseError,
    SizeOutOfRangeError,
    ValueOutOfRangeError,
)
from .geometry import PointSet, decode_point
from .gf import Field
from .prune import prune_both
from .shatter import find_vc2_witness, find_vc3_witness

CSV_HEADER = (
    "p,k,q,t,alpha,target_size,actual_size,seed,pruned_size,"
    "edge_count,in_edge_band,vc2_found,vc3_found,vc_dim_lb,elapsed_ms"
)

DEFAULT_ALPHAS = (
    Fraction(2),
    Fraction(9, 4),
    Fraction(5, 2),
    Fraction(11, 4),
    Fraction(3),
)


def _seed_words(seed: int):
    seed = int(seed)
    if 0 <= seed < 2**32:
        return seed
    return [seed & 0xFFFFFFFF, (seed >> 32) & 0xFFFFFFFF]


def random_subset(ctx: Field, d: int, size: int, seed: int) -> PointSet:
    """Uniform sample without replacement from F_q^d.

    Fixed algorithm: seeded permutation of the encodings 0 .. q^d - 1, take
    the first `size`. Same seed, same set - and a smaller size with the
    same seed yields a subset of the larger sample.
    """
    space = ctx.q**d
    if not 1 <= size <= space:
        raise SizeOutOfRangeError(f"size {size} outside [1, {space}]")
    rng = np.random.RandomState(_seed_words(seed))
    chosen = rng.permutation(space)[:size]
    return PointSet(
        ctx, d, tuple(decode_point(int(e), ctx.q, d) for e in chosen)
    )


# -- point files --------------------------------------------------------------


def load_pointset(path, ctx: Field, d: int) -> PointSet:
    """Read one point per line, d comma-separated integer encodings.

    Blank lines are ignored; anything else malformed reports its line (and
    column for a bad token). Line order becomes index order.
    """
    points = []
    seen = set()
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != d:
                raise PointParseError(
                    f"expected {d} comma-separated values, got {len(parts)}", lineno
                )
            coords = []
            for col, tok in enumerate(parts, 1):
                try:
                    val = int(tok.strip())
                except ValueError:
                    raise PointParseError(f"not an integer: {tok.strip()!r}", lineno, col)
                if not 0 <= val < ctx.q:
                    raise ValueOutOfRangeError(
                        f"line {lineno}: coordinate {val} outside [0, {ctx.q})"
                    )
                coords.append(val)
            pt = tuple(coords)
            if pt in seen:
                raise DuplicatePointError(f"line {lineno}: duplicate point {pt}")
            seen.add(pt)
            points.append(pt)
    return PointSet(ctx, d, tuple(points))


def save_pointset(pset: PointSet, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for pt in pset:
            fh.write(",".join(str(c) for c in pt) + "\n")


# -- sweep configuration and records ------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    q_list: tuple  # ((p, k), ...)
    trials: int
    seed: int
    t: int = 1
    alphas: tuple = DEFAULT_ALPHAS
    budget: int = 200_000
    output_path: str | None = None
    prune: bool = True

    def __post_init__(self):
        if self.trials < 1:
            raise InvalidConfigError("trials must be >= 1")
        if not self.q_list:
            raise InvalidConfigError("q_list must be nonempty")
        for pk in self.q_list:
            if len(pk) != 2 or pk[0] < 2 or pk[1] < 1:
                raise InvalidConfigError(f"bad field spec {pk}")
        object.__setattr__(
            self, "alphas", tuple(Fraction(a) for a in self.alphas)
        )
        for a in self.alphas:
            if not 0 < a <= 3:
                raise InvalidConfigError(f"alpha {a} outside (0, 3]")
        if self.t == 0:
            raise InvalidConfigError("t must be nonzero")
        if self.budget < 1:
            raise InvalidConfigError("budget must be >= 1")

    @classmethod
    def from_toml(cls, path) -> "SweepConfig":
        with open(path, "rb") as fh:
            try:
                data = tomllib.load(fh)
            except tomllib.TOMLDecodeError as exc:
                raise InvalidConfigError(f"bad TOML: {exc}") from exc
        known = {"qs", "trials", "seed", "t", "alphas", "budget", "out", "prune"}
        unknown = set(data) - known
        if unknown:
            raise InvalidConfigError(f"unknown config keys: {sorted(unknown)}")
        try:
            return cls(
                q_list=tuple(tuple(pk) for pk in data["qs"]),
                trials=int(data["trials"]),
                seed=int(data["seed"]),
                t=int(data.get("t", 1)),
                alphas=tuple(
                    Fraction(str(a)) for a in data.get("alphas", DEFAULT_ALPHAS)
                ),
                budget=int(data.get("budget", 200_000)),
                output_path=data.get("out"),
                prune=bool(data.get("prune", True)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidConfigError(f"bad config: {exc}") from exc


@dataclass(frozen=True)
class SweepRecord:
    p: int
    k: int
    q: int
    t: int
    alpha: Fraction
    target_size: int
    actual_size: int
    seed: int
    pruned_size: int
    edge_count: int
    in_edge_band: bool
    vc2_found: bool
    vc3_found: bool
    vc_dim_lb: int
    elapsed_ms: int

    def csv_row(self) -> str:
        def b(x):
            return "true" if x else "false"

        return ",".join(
            [
                str(self.p),
                str(self.k),
                str(self.q),
                str(self.t),
                str(float(self.alpha)),
                str(self.target_size),
                str(self.actual_size),
                str(self.seed),
                str(self.pruned_size),
                str(self.edge_count),
                b(self.in_edge_band),
                b(self.vc2_found),
                b(self.vc3_found),
                str(self.vc_dim_lb),
                str(self.elapsed_ms),
            ]
        )


def cell_seed(base: int, p: int, k: int, trial: int) -> int:
    """Per-cell seed; deliberately independent of alpha (nested samples)."""
    return (base * 1_000_003 + p * 10_007 + k * 101 + trial) % 2**63


def _singleton_shattered(g) -> bool:
    """Some one-point set is shattered iff a point has 0 < degree < |E|."""
    return any(0 < d < g.n for d in g.degrees)


def run_sweep(cfg: SweepConfig, out_path=None) -> list:
    """Execute every (q, alpha, trial) cell; append one CSV row per record.

    Cells run in deterministic configuration order; each row is written and
    flushed as soon as its cell finishes. Rerunning the same config
    reproduces the file except for the elapsed_ms column.
    """
    path = out_path if out_path is not None else cfg.output_path
    records = []
    fh = open(path, "w", encoding="ascii") if path else None
    try:
        if fh:
            fh.write(CSV_HEADER + "\n")
            fh.flush()
        ctx_cache = {}
        for p, k in cfg.q_list:
            if (p, k) not in ctx_cache:
                ctx_cache[(p, k)] = Field(p, k)
            ctx = ctx_cache[(p, k)]
            q = ctx.q
            t = cfg.t % q
            for alpha in cfg.alphas:
                for trial in range(cfg.trials):
                    seed = cell_seed(cfg.seed, p, k, trial)
                    target = min(max(round(q ** float(alpha)), 1), q**3)
                    started = time.monotonic()
                    pset = random_subset(ctx, 3, target, seed)
                    g = build_graph(pset, t)
                    ec = edge_count(g)
                    band = edge_band(g, ec)
                    if cfg.prune:
                        rep = prune_both(g)
                        pruned = len(rep.kept_indices)
                        sg = (
                            build_graph(pset.subset(rep.kept_indices), t)
                            if pruned
                            else None
                        )
                    else:
                        pruned = len(pset)
                        sg = g
                    if sg is None:
                        w2 = w3 = None
                        lb = 0
                    else:
                        w2 = find_vc2_witness(
                            sg, strategy="random", seed=seed, budget=cfg.budget
                        )
                        w3 = find_vc3_witness(
                            sg, strategy="random", seed=seed + 1, budget=cfg.budget
                        )
                        if w3 is not None:
                            lb = 3
                        elif w2 is not None:
                            lb = 2
                        else:
                            lb = 1 if _singleton_shattered(sg) else 0
                    elapsed = int((time.monotonic() - started) * 1000)
                    rec = SweepRecord(
                        p=p,
                        k=k,
                        q=q,
                        t=t,
                        alpha=alpha,
                        target_size=target,
                        actual_size=len(pset),
                        seed=seed,
                        pruned_size=pruned,
                        edge_count=ec,
                        in_edge_band=band.in_band,
                        vc2_found=w2 is not None,
                        vc3_found=w3 is not None,
                        vc_dim_lb=lb,
                        elapsed_ms=elapsed,
                    )
                    records.append(rec)
                    if fh:
                        fh.write(rec.csv_row() + "\n")
                        fh.flush()
    finally:
        if fh:
            fh.close()
    return records
