"""
Command-line interface.

Subcommands:
  analyze      analyze a subgroup given by generator words on the command line
  certify      analyze a subgroup described by a JSON spec file
  entropy      classify a single braid word
  perm         induced permutation of a braid word
  tree-center  canonical fixed point of a tree given as an edge list

Exit codes: 0 analysis consistent / nothing to flag, 2 theorem violation
or flagged anomaly, 1 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .analysis import AnalysisConfig, SubgroupSpec, analyze
from .braids import BraidWord, permutation_of
from .dynnikov import EntropyConfig, classify
from .reporting import (
    emit_report,
    word_to_mapping,
    write_report_files,
    write_word_files,
)
from .treecenter import CenterKind, Tree, canonical_center


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def _add_budget_flags(p):
    p.add_argument("--iterations", type=int, default=None, help="entropy iteration budget")
    p.add_argument("--seeds", type=int, default=None, help="extra random seed curves")
    p.add_argument("--grid", type=int, default=None, help="Burau unit-circle sample count")


def _build_parser() -> _Parser:
    parser = _Parser(prog="solbraid", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a finitely generated subgroup")
    p.add_argument("-n", type=int, required=True, help="strand count")
    p.add_argument("-g", dest="generators", action="append", required=True,
                   metavar="WORD", help="generator word, e.g. '1 -2 1' (repeatable)")
    p.add_argument("--structure", choices=("DISJOINT_TWISTS", "CYCLIC"), default=None)
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--outdir", default=None, help="write report files and figures here")
    p.add_argument("--max-len", type=int, default=None, help="search word-length budget")
    p.add_argument("--kernel-max-len", type=int, default=None, help="kernel sampling budget")
    _add_budget_flags(p)

    p = sub.add_parser("certify", help="analyze a subgroup from a JSON spec file")
    p.add_argument("specfile")
    p.add_argument("--json", action="store_true")
    p.add_argument("--outdir", default=None)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--kernel-max-len", type=int, default=None)
    _add_budget_flags(p)

    p = sub.add_parser("entropy", help="entropy classification of one word")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.add_argument("--outdir", default=None)
    _add_budget_flags(p)

    p = sub.add_parser("perm", help="induced permutation of one word")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("word")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("tree-center", help="canonical center of a tree edge list")
    p.add_argument("edgefile")
    return parser


def _config_from(args) -> AnalysisConfig:
    cfg = AnalysisConfig()
    entropy_kwargs = {}
    if getattr(args, "iterations", None) is not None:
        entropy_kwargs["iterations"] = args.iterations
    if getattr(args, "seeds", None) is not None:
        entropy_kwargs["seeds"] = args.seeds
    if entropy_kwargs:
        cfg = replace(cfg, entropy=replace(cfg.entropy, **entropy_kwargs))
    if getattr(args, "grid", None) is not None:
        cfg = replace(cfg, burau_grid=args.grid)
    if getattr(args, "max_len", None) is not None:
        cfg = replace(cfg, search_max_len=args.max_len)
    if getattr(args, "kernel_max_len", None) is not None:
        cfg = replace(cfg, kernel_max_len=args.kernel_max_len)
    return cfg


def _run_analysis(spec: SubgroupSpec, args) -> int:
    cfg = _config_from(args)
    report = analyze(spec, cfg)
    print(emit_report(report, "json" if args.json else "text"), end="")
    if args.outdir:
        for path in write_report_files(report, args.outdir):
            print(f"wrote {path}", file=sys.stderr)
    return report.exit_code


def _cmd_analyze(args) -> int:
    words = [BraidWord.parse(text, args.n) for text in args.generators]
    spec = SubgroupSpec.from_words(args.n, words, structure=args.structure)
    return _run_analysis(spec, args)


def _cmd_certify(args) -> int:
    try:
        with open(args.specfile) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read spec file: {exc}")
    except json.JSONDecodeError as exc:
        raise CliError(f"spec file is not valid JSON: {exc}")
    spec = SubgroupSpec.from_mapping(data)
    return _run_analysis(spec, args)


def _cmd_entropy(args) -> int:
    word = BraidWord.parse(args.word, args.n)
    entropy_cfg = EntropyConfig()
    if args.iterations is not None:
        entropy_cfg = replace(entropy_cfg, iterations=args.iterations)
    if args.seeds is not None:
        entropy_cfg = replace(entropy_cfg, seeds=args.seeds)
    grid = args.grid if args.grid is not None else 64
    cw = classify(word, config=entropy_cfg, grid=grid)
    if args.json:
        print(json.dumps(word_to_mapping(cw), indent=2))
    else:
        label = cw.label.value.replace("_ENTROPY", "")
        print(f"word: {word}")
        print(f"strands: {word.n}")
        print(f"classification: {label}")
        print(f"estimate: {cw.estimate.value:.6f} nats/iteration "
              f"(verdict {cw.estimate.verdict.value}, {cw.estimate.iterations} iterations)")
        if cw.exact is not None:
            print(f"exact entropy: {cw.exact:.6f}")
        print(f"burau lower bound: {cw.burau_bound:.6f}")
        print(f"rigorous: {'yes' if cw.rigorous else 'no'}")
    if args.outdir:
        for path in write_word_files(cw, args.outdir):
            print(f"wrote {path}", file=sys.stderr)
    return 0


def _cmd_perm(args) -> int:
    word = BraidWord.parse(args.word, args.n)
    perm = permutation_of(word)
    if args.json:
        print(json.dumps({
            "word": str(word),
            "n": word.n,
            "cycles": str(perm),
            "images": list(perm.images),
            "is_identity": perm.is_identity(),
        }, indent=2))
    else:
        print(str(perm))
    return 0


def _cmd_tree_center(args) -> int:
    try:
        with open(args.edgefile) as fh:
            tree = Tree.parse_edge_list(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read edge file: {exc}")
    center = canonical_center(tree)
    if center.kind is CenterKind.VERTEX:
        print(json.dumps({"kind": "VERTEX", "vertex": center.vertex}))
    else:
        print(json.dumps({"kind": "EDGE_MIDPOINT", "edge": sorted(center.edge)}))
    return 0


_HANDLERS = {
    "analyze": _cmd_analyze,
    "certify": _cmd_certify,
    "entropy": _cmd_entropy,
    "perm": _cmd_perm,
    "tree-center": _cmd_tree_center,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
