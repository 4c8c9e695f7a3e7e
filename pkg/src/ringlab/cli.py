"""Command-line front end: ``ringlab gen|validate|search|prove``.

Exit codes: 0 pass/found/conclusive, 1 negative/inconclusive, 2 usage or
input error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import RinglabError
from .leads import extent_feasibility, leadhead_graph, scheme_from_name
from .methods import (
    Method, ccdd_course, expand_leads, grandsire_course, plain_bob_course, plain_hunt, sjt_extent,
)
from .notation import (
    format_row, parse_generators, parse_row, parse_word, read_composition_file, read_method_file,
)
from .perm import Perm
from .rules import validate
from .unicursal import (
    CayleyGraph, GroupTable, all_even, alternating_group, closure, hamiltonian_cycle, longest_cycle,
    parity_audit, random_trace, rankin_oracle, symmetric_group,
)
from .unicursal.search import DEFAULT_BUDGET

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
GEN_FAMILIES = ("sjt", "plain-hunt", "plain-bob", "grandsire", "ccdd")

log = logging.getLogger("ringlab")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    subcommand: str | None
    stage: int | None = None
    scheme: str | None = None
    group: str | None = None
    gens: str | None = None
    fmt: str = "text"
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    path: str | None = None
    comp: str | None = None
    ruleset: str = "ringers"
    steps: int = 50
    seed: int | None = None

    def __post_init__(self):
        if self.budget < 1:
            raise UsageError("budget must be at least 1")
        if self.workers < 1:
            raise UsageError("workers must be at least 1")

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> CliConfig:
        return cls(
            command=ns.command,
            subcommand=getattr(ns, "kind", None) or getattr(ns, "family", None),
            stage=getattr(ns, "n", None),
            scheme=getattr(ns, "scheme", None),
            group=getattr(ns, "group", None),
            gens=getattr(ns, "gens", None),
            fmt=getattr(ns, "format", "text"),
            budget=getattr(ns, "budget", None) or _default_budget(),
            workers=getattr(ns, "workers", 1),
            path=getattr(ns, "path", None),
            comp=getattr(ns, "comp", None),
            ruleset=getattr(ns, "ruleset", "ringers"),
            steps=getattr(ns, "steps", 50),
            seed=getattr(ns, "seed", None),
        )


def _default_budget() -> int:
    env = os.environ.get("RINGLAB_BUDGET")
    if env is None:
        return DEFAULT_BUDGET
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"RINGLAB_BUDGET must be an integer, got {env!r}") from None


def _emit(obj: dict) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


# -- gen -------------------------------------------------------------------

def _load_comp(spec: str):
    p = Path(spec)
    if p.suffix == ".json" or p.exists():
        return read_composition_file(p)
    return parse_word(spec)


def _build_method(cfg: CliConfig) -> Method:
    fam, n = cfg.subcommand, cfg.stage
    if fam == "sjt":
        if n is None:
            raise UsageError("gen sjt needs --n")
        return sjt_extent(n)
    if fam == "ccdd":
        n = 5 if n is None else n
    if n is None:
        raise UsageError(f"gen {fam} needs --bells")
    if fam == "plain-hunt":
        return plain_hunt(n)
    if cfg.comp is not None:
        scheme = scheme_from_name(f"{fam}-{n}")
        comp = _load_comp(cfg.comp)
        if getattr(comp, "scheme", scheme.name) != scheme.name:
            raise UsageError(f"composition is for {comp.scheme}, not {scheme.name}")
        return expand_leads(scheme, comp)
    if fam == "plain-bob":
        return plain_bob_course(n)
    if fam == "grandsire":
        return grandsire_course(n)
    if n != 5:
        raise UsageError("ccdd is defined on 5 bells only")
    return ccdd_course()


def cmd_gen(cfg: CliConfig) -> int:
    m = _build_method(cfg)
    out = sys.stdout
    if cfg.fmt == "json":
        _emit(m.to_file().to_json())
    elif cfg.fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        for row in m.iter_rows():
            w.writerow(row)
    else:
        for row in m.iter_rows():
            out.write(format_row(row) + "\n")
    return EXIT_OK


# -- validate --------------------------------------------------------------

def _read_method(path: str) -> Method:
    text = Path(path).read_text() if path != "-" else sys.stdin.read()
    if text.lstrip().startswith("{"):
        return Method.from_file(read_method_file(io.StringIO(text)))
    rows = [parse_row(line) for line in text.splitlines() if line.strip()]
    return Method.from_rows(rows, name=Path(path).stem)


def cmd_validate(cfg: CliConfig) -> int:
    m = _read_method(cfg.path)
    report = validate(m, cfg.ruleset)
    _emit(report.to_json())
    return EXIT_OK if report.passed else EXIT_NEGATIVE


# -- groups ----------------------------------------------------------------

def _group_and_gens(cfg: CliConfig) -> tuple[GroupTable, list[Perm]]:
    if not cfg.gens:
        raise UsageError("--gens is required")
    spec = (cfg.group or "closure").strip()
    n = int(spec[1:]) if spec[:1] in "SA" and spec[1:].isdigit() else None
    if spec != "closure" and n is None:
        raise UsageError(f"group must be Sn, An or closure, got {spec!r}")
    gens = parse_generators(cfg.gens)
    if n is not None and gens[0].degree < n:
        gens = parse_generators(cfg.gens, n)
    H = closure(gens)
    if spec == "closure":
        return H, gens
    # Sn / An on the points the generators move, e.g. A6 on bells 2..7.
    moved = {i for g in gens for i in range(1, g.degree + 1) if g(i) != i}
    target = math.factorial(n) // (1 if spec[0] == "S" else 2)
    ok = len(moved) <= n and len(H) == target and (spec[0] == "S" or all_even(H))
    if not ok:
        raise UsageError(f"generators generate a group of order {len(H)}, not {spec} (order {target})")
    if gens[0].degree == n:
        return (symmetric_group(n) if spec[0] == "S" else alternating_group(n)), gens
    return H, gens


def _graph(cfg: CliConfig) -> CayleyGraph:
    if cfg.scheme:
        return leadhead_graph(scheme_from_name(cfg.scheme))
    G, gens = _group_and_gens(cfg)
    return CayleyGraph(G, gens)


# -- search ----------------------------------------------------------------

def cmd_search(cfg: CliConfig) -> int:
    graph = _graph(cfg)
    if cfg.workers > 1:
        log.info("search runs single-threaded; --workers %d ignored", cfg.workers)
    if cfg.subcommand == "hamiltonian":
        res = hamiltonian_cycle(graph, budget=cfg.budget)
        _emit(res.to_json())
        return {"found": EXIT_OK, "none": EXIT_NEGATIVE}.get(res.status, EXIT_BUDGET)
    res = longest_cycle(graph, budget=cfg.budget)
    if res.chain is None:
        status = "none" if res.optimal else "exhausted"
    else:
        status = "found" if res.optimal else "exhausted"
    _emit({"status": status, **res.to_json()})
    return {"found": EXIT_OK, "none": EXIT_NEGATIVE}.get(status, EXIT_BUDGET)


# -- prove -----------------------------------------------------------------

def cmd_prove(cfg: CliConfig) -> int:
    if cfg.subcommand == "rankin":
        G, gens = _group_and_gens(cfg)
        if len(gens) != 2:
            raise UsageError("rankin needs exactly two generators")
        v = rankin_oracle(G, *gens)
        _emit(v.to_json())
        return EXIT_OK if v.verdict == "impossible" else EXIT_NEGATIVE
    if cfg.subcommand == "feasibility":
        if not cfg.scheme:
            raise UsageError("feasibility needs --scheme")
        f = extent_feasibility(scheme_from_name(cfg.scheme), budget=cfg.budget)
        _emit(f.to_json())
        return EXIT_NEGATIVE if f.verdict == "unknown" else EXIT_OK
    # parity-audit
    if cfg.scheme:
        s = scheme_from_name(cfg.scheme)
        G, P, B = s.leadhead_group, s.P, s.B
    else:
        G, gens = _group_and_gens(cfg)
        if len(gens) != 2:
            raise UsageError("parity-audit needs exactly two generators")
        P, B = gens
    trace = random_trace(G, P, B, cfg.steps, cfg.seed)
    report = parity_audit(G, P, B, trace).to_json()
    _emit(report)
    return EXIT_OK if report["parity_law_held"] and report["identities_held"] else EXIT_NEGATIVE


# -- parser ----------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ringlab", description="Change-ringing mathematics toolkit.")
    p.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="print the rows of a method")
    g.add_argument("family", choices=GEN_FAMILIES)
    g.add_argument("--n", "--bells", dest="n", type=_positive, help="number of bells")
    g.add_argument("--comp", help="composition: a JSON file or a word such as PPPPB")
    g.add_argument("--format", choices=("text", "json", "csv"), default="text")

    v = sub.add_parser("validate", help="check a method file against the rules")
    v.add_argument("path", help="method JSON or one row per line ('-' for stdin)")
    v.add_argument("--ruleset", choices=("ringers", "motel"), default="ringers")

    def group_args(q: argparse.ArgumentParser) -> None:
        q.add_argument("--group", help="Sn, An or closure (default closure)")
        q.add_argument("--gens", help='semicolon-separated cycles, e.g. "(1 2 3);(3 4)"')
        q.add_argument("--scheme", help="lead scheme such as plain-bob-6 or grandsire-7")
        q.add_argument("--budget", type=_positive, help="node expansions (default $RINGLAB_BUDGET or 1e9)")

    s = sub.add_parser("search", help="Hamiltonian or longest cycle in a Cayley graph")
    s.add_argument("kind", choices=("hamiltonian", "longest"))
    group_args(s)
    s.add_argument("--workers", type=_positive, default=1)

    r = sub.add_parser("prove", help="impossibility proofs and audits")
    r.add_argument("kind", choices=("rankin", "feasibility", "parity-audit"))
    group_args(r)
    r.add_argument("--steps", type=int, default=50, help="rearrangement steps for parity-audit")
    r.add_argument("--seed", type=int, help="seed for parity-audit traces")
    return p


COMMANDS = {"gen": cmd_gen, "validate": cmd_validate, "search": cmd_search, "prove": cmd_prove}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        cfg = CliConfig.from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except (UsageError, RinglabError, OSError, json.JSONDecodeError) as exc:
        print(f"ringlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
