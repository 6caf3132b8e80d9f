"""Command-line front end.

Exit codes: 0 success, 1 classifier/oracle divergence, 2 usage or parse
error, 3 size guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .classify import classify, clean
from .complexes import GuardError
from .ideal import path_complex, path_ideal, stanley_reisner_complex
from .oracles import check_instance, cross_validate, sweep
from .tree import RootedTree, TreeParseError, parse_tree, random_corpus

EXIT_OK, EXIT_DIVERGENCE, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    t: int | None = None
    n_max: int = 10
    count: int = 100
    seed: int = 0
    format: str = "json"
    out: str | None = None
    which: str = "ideal"

    def __post_init__(self):
        if self.command in ("analyze", "oracle-check", "export"):
            if self.input is None or self.t is None:
                raise UsageError(f"{self.command} needs --input and --t")
        if self.t is not None and self.t < 2:
            raise UsageError(f"--t must be at least 2, got {self.t}")
        if self.count < 0 or self.n_max < 2:
            raise UsageError("--count must be >= 0 and --n-max >= 2")


def _load_tree(cfg: RunConfig) -> RootedTree:
    try:
        text = sys.stdin.read() if cfg.input == "-" else Path(cfg.input).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {cfg.input}: {exc}") from None
    tree = parse_tree(text)
    if not 2 <= cfg.t <= tree.n:
        raise UsageError(f"--t must satisfy 2 <= t <= n={tree.n}, got {cfg.t}")
    return tree


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


def _report_text(d: dict) -> str:
    keys = ["n", "t", "zero_ideal", "clean_removed", "partitioned", "fitting",
            "unmixed", "cohen_macaulay", "serre_sr", "gorenstein",
            "complete_intersection", "matroid", "all_powers_cm",
            "height", "krull_dim", "depth", "proj_dim", "failure_witness"]
    lines = [f"{k:>22}: {d[k]}" for k in keys]
    gens = ", ".join("*".join(f"x{i}" for i in g) for g in d["generators"]) or "0"
    lines.insert(2, f"{'generators':>22}: {gens}")
    return "\n".join(lines) + "\n"


def cmd_analyze(cfg: RunConfig) -> int:
    tree = _load_tree(cfg)
    d = classify(tree, cfg.t).to_dict()
    _emit(cfg, _report_text(d) if cfg.format == "text" else json.dumps(d, indent=2) + "\n")
    return EXIT_OK


def cmd_oracle_check(cfg: RunConfig) -> int:
    tree = _load_tree(cfg)
    rec = check_instance(tree, cfg.t)
    _emit(cfg, json.dumps(rec, indent=2, sort_keys=True) + "\n")
    return EXIT_DIVERGENCE if rec["mismatches"] else EXIT_OK


def cmd_batch(cfg: RunConfig) -> int:
    trees = random_corpus(cfg.count, cfg.n_max, cfg.seed)
    result = cross_validate(sweep(trees))
    summary = {"trees": cfg.count, "n_max": cfg.n_max, "seed": cfg.seed, **result.summary()}
    if cfg.format == "text":
        tail = "".join(f"{k}: {v}\n" for k, v in summary.items())
    else:
        tail = json.dumps({"summary": summary}, sort_keys=True) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(result.jsonl())
        sys.stdout.write(tail)
    else:
        sys.stdout.write(result.jsonl() + tail)
    return EXIT_OK if result.ok else EXIT_DIVERGENCE


def cmd_gen(cfg: RunConfig) -> int:
    trees = random_corpus(cfg.count, cfg.n_max, cfg.seed)
    _emit(cfg, "".join(t.to_json() + "\n" for t in trees))
    return EXIT_OK


def _dot(tree: RootedTree, removed: frozenset[int]) -> str:
    lines = ["digraph tree {"]
    for v in tree.vertices:
        style = ' [style=dashed, color=gray, fontcolor=gray, label="%d (cleaned)"]' % v \
            if v in removed else ""
        lines.append(f"  {v}{style};")
    for u, v in tree.edges():
        style = " [style=dashed, color=gray]" if v in removed else ""
        lines.append(f"  {u} -> {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export(cfg: RunConfig) -> int:
    tree = _load_tree(cfg)
    if cfg.which == "ideal":
        payload = path_ideal(tree, cfg.t).to_dict()
    elif cfg.which == "facet":
        payload = path_complex(tree, cfg.t).to_dict()
    elif cfg.which == "stanley-reisner":
        payload = stanley_reisner_complex(path_ideal(tree, cfg.t)).to_dict()
    else:
        _, removed = clean(tree, cfg.t)
        _emit(cfg, _dot(tree, removed))
        return EXIT_OK
    _emit(cfg, json.dumps(payload) + "\n")
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "oracle-check": cmd_oracle_check,
    "batch": cmd_batch,
    "gen": cmd_gen,
    "export": cmd_export,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pathideals",
                                description="Classify path ideals of rooted trees.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--input", help="tree file (text or JSON); '-' for stdin")
        s.add_argument("--t", type=int)
        s.add_argument("--n-max", type=int, default=10)
        s.add_argument("--count", type=int, default=100)
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--format", choices=["json", "text"], default="json")
        s.add_argument("--out")
        s.add_argument("--which", choices=["facet", "stanley-reisner", "ideal", "dot"],
                       default="ideal")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(**{k: v for k, v in vars(args).items()})
        return COMMANDS[cfg.command](cfg)
    except (UsageError, TreeParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardError as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
