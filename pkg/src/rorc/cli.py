"""Command-line front end: analyze, diagram, tableau, verify, witness.

Exit codes: 0 success / all checks pass, 1 violation found or search budget
exhausted, 2 invalid arguments or configuration.  The seed defaults to the
RORC_SEED environment variable, then 0.  JSON written with --json / --out is
deterministic for a fixed invocation (reports omit wall-clock timing).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .compositions import (
    Composition,
    gamma_pairs,
    lambda_pairs,
    richardson_partition,
)
from .diagrams import chain_lengths, complete_diagram, render_ascii, subdiagram
from .matrices import ExactMatrix
from .strata import WitnessSearchError, decompose, defect_profile, in_stratum, witness
from .tableaux import minimal_movement, richardson_tableau
from .verify import (
    ConfigError,
    ExperimentConfig,
    check_component_count,
    check_lemmas,
    check_theorem_exhaustive,
    check_theorem_sampled,
)


def _parse_d(text: str) -> Composition:
    try:
        return Composition(tuple(int(x) for x in text.split(",")))
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"bad composition {text!r}: {exc}") from exc


def _parse_pair(text: str, d: Composition) -> tuple[int, int]:
    try:
        i, j = (int(x) for x in text.split(","))
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"bad pair {text!r}; expected 'i,j'") from exc
    d.check_pair(i, j)
    return i, j


def _default_seed() -> int:
    raw = os.environ.get("RORC_SEED", "")
    try:
        return int(raw) if raw else 0
    except ValueError:
        return 0


def _emit(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def _fmt_pairs(pairs) -> str:
    return " ".join(f"({i},{j})" for i, j in sorted(pairs)) or "-"


def _cmd_analyze(args) -> int:
    d = _parse_d(args.d)
    dec = decompose(d)
    if args.json:
        _emit(json.dumps(dec.to_json_dict(), indent=2), args.out)
        return 0
    lines = [
        f"d = {d}   n = {d.n}   t = {d.t}",
        f"lambda(d) = {richardson_partition(d)}",
        f"Gamma(d)  = {_fmt_pairs(gamma_pairs(d))}",
        f"Lambda(d) = {_fmt_pairs(lambda_pairs(d))}",
        f"components: {len(dec.strata)}",
    ]
    for s in dec.strata:
        lines.append(
            f"  ({s.pair[0]},{s.pair[1]}): kappa={s.kappa} "
            f"rank_threshold={s.rank_threshold} codim={s.codim} mu={s.mu}"
        )
        lines.extend("      " + row for row in s.tableau.render_ascii().splitlines())
    _emit("\n".join(lines), args.out)
    return 0


def _cmd_diagram(args) -> int:
    d = _parse_d(args.d)
    diagram = complete_diagram(d)
    label = f"complete diagram for d = {d}"
    if args.pair:
        i, j = (int(x) for x in args.pair.split(","))
        d.check_window(i, j)
        diagram = subdiagram(diagram, i, j)
        label = f"subdiagram of columns {i}..{j} for d = {d}"
    if args.json:
        payload = {
            "d": list(diagram.columns.parts),
            "edges": sorted(list(e) for e in diagram.edges),
            "chain_lengths": list(chain_lengths(diagram)),
        }
        _emit(json.dumps(payload, indent=2), args.out)
        return 0
    text = f"{label}\n{render_ascii(diagram)}\nchain lengths: {chain_lengths(diagram)}"
    _emit(text, args.out)
    return 0


def _cmd_tableau(args) -> int:
    d = _parse_d(args.d)
    if args.pair:
        i, j = _parse_pair(args.pair, d)
        tab = minimal_movement(d, i, j).tableau
    else:
        tab = richardson_tableau(d)
    if args.json:
        _emit(json.dumps(tab.to_json_dict()), args.out)
    else:
        _emit(tab.render_ascii(), args.out)
    return 0


def _cmd_verify(args) -> int:
    d = _parse_d(args.d)
    cfg = ExperimentConfig(
        d=d, mode=args.mode, fieldsize=args.field, trials=args.trials,
        seed=args.seed, dim_cap=args.dim_cap,
    )
    reports = []
    if "counts" in args.checks:
        reports.append(check_component_count(cfg))
    if "theorem" in args.checks:
        if cfg.mode == "exhaustive":
            reports.append(check_theorem_exhaustive(cfg))
        else:
            reports.append(check_theorem_sampled(cfg))
    if "lemmas" in args.checks:
        reports.append(check_lemmas(cfg))
    checks = [c for rep in reports for c in rep.checks]
    passed = all(c.passed for c in checks)
    payload = {
        "schema": "rorc.report/1",
        "config": cfg.to_json_dict(),
        "components": len(lambda_pairs(d)),
        "passed": passed,
        "checks": [c.to_json_dict() for c in checks],
    }
    if args.json or args.out:
        _emit(json.dumps(payload, indent=2), args.out)
    if not args.json:
        print(f"d = {d}: components = {payload['components']}")
        for c in checks:
            print(f"  [{'pass' if c.passed else 'FAIL'}] {c.name}  {c.counts}")
    return 0 if passed else 1


def _cmd_witness(args) -> int:
    d = _parse_d(args.d)
    i, j = _parse_pair(args.pair, d)
    if (i, j) not in lambda_pairs(d):
        raise ConfigError(f"pair ({i},{j}) is not in Lambda({d})")
    if args.verify_matrix:
        with open(args.verify_matrix, encoding="utf-8") as fh:
            a = ExactMatrix.from_json_dict(json.load(fh))
        good = in_stratum(a, d, i, j) and all(
            not in_stratum(a, d, k, l)
            for k, l in lambda_pairs(d) if (k, l) != (i, j)
        )
        print(f"matrix {'separates' if good else 'does NOT separate'} stratum ({i},{j})")
        return 0 if good else 1
    try:
        a = witness(d, (i, j), seed=args.seed, budget=args.budget)
    except WitnessSearchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    profile = defect_profile(a, d)
    if args.json:
        payload = {
            "d": list(d.parts),
            "pair": [i, j],
            "matrix": a.to_json_dict(),
            "defect_profile": [list(v) for v in profile],
        }
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        _emit(
            f"witness for stratum ({i},{j}) of d = {d}\n{a.pretty()}\n"
            f"defect profile: {profile}",
            args.out,
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rorc",
        description="Components of the complement of the dense parabolic orbit: "
                    "parameter sets, tableaux, rank thresholds, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    seed = _default_seed()

    def common(p, pair_help=None):
        p.add_argument("-d", required=True, help="composition, e.g. 7,5,2,3,5,1,2,6,5")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", help="write output to a file")
        if pair_help:
            p.add_argument("--pair", help=pair_help)

    p = sub.add_parser("analyze", help="lambda(d), Gamma(d), Lambda(d), per-component data")
    common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("diagram", help="render the complete line diagram")
    common(p, pair_help="window i,j: render the subdiagram of columns i..j")
    p.set_defaults(func=_cmd_diagram)

    p = sub.add_parser("tableau", help="render the maximal tableau or a component tableau")
    common(p, pair_help="pair i,j: render the moved tableau of the pair")
    p.set_defaults(func=_cmd_tableau)

    p = sub.add_parser("verify", help="run verification checks, write a report")
    common(p)
    p.add_argument("--mode", choices=("exhaustive", "sample"), default="sample")
    p.add_argument("--field", type=int, default=2, help="prime field size")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--dim-cap", type=int, default=20, dest="dim_cap")
    p.add_argument(
        "--checks", default="theorem,lemmas",
        help="comma list from: theorem, lemmas, counts",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("witness", help="find a separating witness for a component")
    common(p, pair_help="component pair i,j (required)")
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--verify-matrix", help="check a matrix JSON file instead of searching")
    p.set_defaults(func=_cmd_witness)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "checks"):
        args.checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        bad = set(args.checks) - {"theorem", "lemmas", "counts"}
        if bad:
            print(f"error: unknown checks {sorted(bad)}", file=sys.stderr)
            return 2
    try:
        if args.command == "witness" and not args.pair:
            raise ConfigError("witness requires --pair i,j")
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
