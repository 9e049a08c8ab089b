"""Command-line front end.

Exit codes: 0 ok, 1 mismatch or violation, 2 input error, 3 budget exceeded.
Only the json and csv formats are stable; table output is for reading.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from typing import Sequence

from . import block_monoid
from .block_monoid import ElementTuple, atoms_up_to
from .config import FORMATS, RunConfig, load_config
from .errors import BudgetExceeded, NotZeroSum, ParseError, SepNoetherError
from .group_atom import is_group_atom
from .group_core import FiniteAbelianGroup
from .noether import beta_sep, main_theorem_value, verify_main_theorem
from .theory_checks import run_checks

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def parse_group(text: str) -> FiniteAbelianGroup:
    G = FiniteAbelianGroup.parse(text)
    if G.rank() == 0:
        raise ParseError("the trivial group is not accepted")
    return G


def parse_tuple(G: FiniteAbelianGroup, text: str) -> ElementTuple:
    try:
        return ElementTuple(G, tuple(G.parse_elements(text)))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_vector(text: str) -> list[int]:
    s = re.sub(r"[\s\[\]]", "", text)
    if not re.fullmatch(r"\d+(,\d+)*", s):
        raise ParseError(f"bad vector {text!r}: expected comma-separated non-negative integers")
    return [int(x) for x in s.split(",")]


def parse_range(text: str) -> list[int]:
    """``"1..3"``, ``"2,5"`` or ``"4"``."""
    out = []
    for part in text.replace(" ", "").split(","):
        m = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", part)
        if m is None:
            raise ParseError(f"bad range {text!r}")
        lo = int(m.group(1))
        hi = int(m.group(2)) if m.group(2) else lo
        if hi < lo:
            raise ParseError(f"empty range {part!r}")
        out.extend(range(lo, hi + 1))
    return out


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _vec(v) -> str:
    return "[" + ",".join(map(str, v)) + "]"


# ---------------------------------------------------------------- commands

def cmd_atoms(args, cfg: RunConfig) -> tuple[str, int]:
    G = parse_group(args.group)
    T = parse_tuple(G, args.tuple)
    atoms = atoms_up_to(T, args.max_len, cfg.budget_candidates)
    if cfg.output_format == "json":
        return _dump({"group": str(G), "tuple": T.to_json(), "max_len": args.max_len,
                      "atoms": [list(a) for a in atoms]}), EXIT_OK
    if cfg.output_format == "csv":
        return _csv(["vector", "length"], [[_vec(a), a.length()] for a in atoms]), EXIT_OK
    lines = [f"atoms of B({T}) in {G} with length <= {args.max_len}: {len(atoms)}"]
    lines += [f"  {_vec(a)}  length {a.length()}" for a in atoms]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_group_atom(args, cfg: RunConfig) -> tuple[str, int]:
    G = parse_group(args.group)
    T = parse_tuple(G, args.tuple)
    m = parse_vector(args.vector)
    if len(m) != T.k:
        raise ParseError(f"vector has {len(m)} entries for a {T.k}-element tuple")
    if not any(m):
        raise ParseError("the zero vector is not a valid query")
    if not T.is_zero_sum(m):
        raise NotZeroSum(f"{_vec(m)} is not zero-sum over ({T})")
    v = is_group_atom(T, m, cfg.budget_candidates)
    if cfg.output_format == "json":
        return _dump(v.to_json()), EXIT_OK
    if cfg.output_format == "csv":
        return _csv(["vector", "length", "group_atom", "witness"],
                    [[_vec(m), sum(m), str(v.is_group_atom).lower(), v.describe_witness()]]), EXIT_OK
    text = f"{_vec(m)} in B({T}) over {G}: group atom = {str(v.is_group_atom).lower()}\n"
    if v.is_group_atom:
        text += f"  shorter elements span the lattice with basis {[list(b) for b in v.lattice_basis]}\n"
    else:
        text += f"  witness: {_vec(m)} = {v.describe_witness()}\n"
    return text, EXIT_OK


def cmd_beta_sep(args, cfg: RunConfig) -> tuple[str, int]:
    G = parse_group(args.group)
    if G.rank() > 3:
        raise ParseError("beta-sep supports rank <= 3")
    res = beta_sep(G, cfg.budget_candidates, cfg.workers, cfg.automorphism_pruning)
    code = EXIT_MISMATCH if res.match is False else EXIT_OK
    if cfg.output_format == "json":
        return _dump(res.to_json()), code
    if cfg.output_format == "csv":
        return _csv(["group", "beta_sep", "predicted", "match", "wall_time_ms"],
                    [[str(G), res.beta_sep, res.predicted, res.match, f"{res.wall_time_ms:.1f}"]]), code
    lines = [f"beta_sep({G}) = {res.beta_sep}"]
    if res.predicted is not None:
        lines.append(f"  predicted {res.predicted} ({res.prediction_source}): {'match' if res.match else 'MISMATCH'}")
    lines.append(f"  upper bound {res.upper}" + (f", lower bound {res.lower}" if res.lower is not None else ""))
    lines.append(f"  {res.subsets_checked} subsets, {res.wall_time_ms:.0f} ms")
    lines.append(f"  extremal group atoms ({len(res.extremal)}):")
    for T, v in res.extremal[:20]:
        lines.append(f"    ({T}) {_vec(v)}")
    if len(res.extremal) > 20:
        lines.append(f"    ... {len(res.extremal) - 20} more")
    return "\n".join(lines) + "\n", code


def cmd_davenport(args, cfg: RunConfig) -> tuple[str, int]:
    G = parse_group(args.group)
    d = block_monoid.davenport(G, cfg.budget_candidates)
    formula = block_monoid.davenport_formula(G)
    agrees = None if formula is None else formula == d
    code = EXIT_MISMATCH if agrees is False else EXIT_OK
    if cfg.output_format == "json":
        return _dump({"group": str(G), "davenport": d, "formula": formula, "formula_matches": agrees}), code
    if cfg.output_format == "csv":
        return _csv(["group", "davenport", "formula", "formula_matches"], [[str(G), d, formula, agrees]]), code
    extra = "" if formula is None else f" (closed form {formula}: {'agrees' if agrees else 'DISAGREES'})"
    return f"D({G}) = {d}{extra}\n", code


def cmd_verify(args, cfg: RunConfig) -> tuple[str, int]:
    rows = []
    for l in parse_range(args.l):
        for n in parse_range(args.n):
            if l < 1 or n < 2:
                raise ParseError("verify needs l >= 1 and n >= 2")
            G = FiniteAbelianGroup((l * n, n))
            predicted = main_theorem_value(l, n)
            start = time.perf_counter()
            try:
                res = verify_main_theorem(l, n, cfg.budget_candidates, cfg.workers, cfg.automorphism_pruning)
                computed, status = res.beta_sep, ("match" if res.match else "mismatch")
            except BudgetExceeded:
                computed, status = None, "skipped"
            ms = (time.perf_counter() - start) * 1000.0
            rows.append({"l": l, "n": n, "group": str(G), "computed": computed, "predicted": predicted,
                         "match": None if computed is None else computed == predicted,
                         "status": status, "wall_time_ms": ms})
    code = EXIT_MISMATCH if any(r["status"] == "mismatch" for r in rows) else EXIT_OK
    if cfg.output_format == "json":
        # timings are left out so repeated runs are byte-identical
        body = [{k: v for k, v in r.items() if k != "wall_time_ms"} for r in rows]
        return _dump({"rows": body, "all_match": code == EXIT_OK and all(r["match"] for r in rows)}), code
    if cfg.output_format == "csv":
        return _csv(["l", "n", "group", "computed", "predicted", "match", "status", "wall_time_ms"],
                    [[r["l"], r["n"], r["group"], r["computed"], r["predicted"], r["match"], r["status"],
                      f"{r['wall_time_ms']:.1f}"] for r in rows]), code
    lines = [f"{'l':>3} {'n':>3} {'group':<10} {'computed':>8} {'predicted':>9}  status     time"]
    for r in rows:
        comp = "-" if r["computed"] is None else r["computed"]
        lines.append(f"{r['l']:>3} {r['n']:>3} {r['group']:<10} {comp:>8} {r['predicted']:>9}  "
                     f"{r['status']:<9} {r['wall_time_ms'] / 1000:.2f}s")
    return "\n".join(lines) + "\n", code


def cmd_checks(args, cfg: RunConfig) -> tuple[str, int]:
    G = parse_group(args.group)
    if G.rank() > 3:
        raise ParseError("checks support rank <= 3")
    res = beta_sep(G, cfg.budget_candidates, cfg.workers, cfg.automorphism_pruning)
    reports = run_checks(G, cfg.budget_candidates, cfg.workers, result=res)
    ok = all(r.ok for r in reports)
    code = EXIT_OK if ok else EXIT_MISMATCH
    if cfg.output_format == "json":
        return _dump({"group": str(G), "beta_sep": res.beta_sep, "ok": ok,
                      "reports": [r.to_json() for r in reports]}), code
    if cfg.output_format == "csv":
        return _csv(["lemma", "applicable", "instances", "violations"],
                    [[r.lemma, r.applicable, r.instances, len(r.violations)] for r in reports]), code
    lines = [f"checks on {G} (beta_sep = {res.beta_sep})"]
    for r in reports:
        if not r.applicable:
            lines.append(f"  {r.lemma:<26} not applicable ({r.notes.get('reason', '')})")
            continue
        status = "ok" if r.ok else f"{len(r.violations)} VIOLATIONS"
        lines.append(f"  {r.lemma:<26} {r.instances:>7} instances  {status}")
        if r.lemma == "case_theorem":
            lines.append(f"  {'':<26} max length {r.notes.get('max_group_atom_length')}, "
                         f"bound {r.notes.get('bound')}, attained {r.notes.get('attained')}")
        lines.extend(f"      {v}" for v in r.violations[:10])
    return "\n".join(lines) + "\n", code


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, help="candidate-vector cap (default 1e8)")
    common.add_argument("--workers", type=int, help="worker processes (default: all cores)")
    common.add_argument("--format", choices=FORMATS, help="output format")
    common.add_argument("--aut-pruning", action="store_true", default=None,
                        help="sweep one subset per automorphism orbit")
    common.add_argument("--config", metavar="PATH", help="TOML config file")

    parser = argparse.ArgumentParser(prog="sepnoether", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("atoms", parents=[common], help="atoms of B(g_1,...,g_k) up to a length")
    p.add_argument("group")
    p.add_argument("tuple")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_atoms)

    p = sub.add_parser("group-atom", parents=[common], help="group-atom verdict with certificate")
    p.add_argument("group")
    p.add_argument("tuple")
    p.add_argument("vector")
    p.set_defaults(func=cmd_group_atom)

    p = sub.add_parser("beta-sep", parents=[common], help="separating Noether number")
    p.add_argument("group")
    p.set_defaults(func=cmd_beta_sep)

    p = sub.add_parser("davenport", parents=[common], help="Davenport constant")
    p.add_argument("group")
    p.set_defaults(func=cmd_davenport)

    p = sub.add_parser("verify", parents=[common], help="sweep beta_sep(C_ln + C_n) against ln + n/p")
    p.add_argument("--l", required=True, help="range such as 1..3")
    p.add_argument("--n", required=True, help="range such as 2..3")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("checks", parents=[common], help="run the structural checks on a group")
    p.add_argument("group")
    p.set_defaults(func=cmd_checks)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = load_config(args.config).override(
            budget_candidates=args.budget, workers=args.workers, output_format=args.format,
            automorphism_pruning=args.aut_pruning,
        )
        text, code = args.func(args, cfg)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (SepNoetherError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out.write(text)
    return code


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
