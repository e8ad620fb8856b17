"""Command-line front end.

Every subcommand prints one JSON record (or CSV with ``--format csv``)::

    {"command": ..., "inputs": {...}, "outputs": {...},
     "validity_flags": [...], "version": ...}

Exit codes: 0 ok, 2 usage error, 3 precondition failure, 4 integrality or
consistency failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from typing import Callable, Dict, List

from . import __version__
from .chains import (
    ChainSpec,
    assumption_degree_checks,
    build_secant_construction,
    count_chain_series,
    enumerate_chain_series,
    gamma_dimension_identity,
    separation_condition,
)
from .counts import castelnuovo, cayley_r3, consistency_check
from .errors import IntegralityError, PreconditionError, SecplanesError
from .ramify import power_bound, riemann_roch_ceiling, square_bound
from .secant import (
    SecantProblem,
    coppens_martens_dim,
    expected_cycle_dim,
    family_dim_bound,
    rho_zero_emptiness,
    secant_verdict,
    very_ample_guaranteed,
)
from .series import SchubertIndex, SeriesParams, rho, rho_ramified

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_INTEGRALITY = 4


class UsageError(Exception):
    pass


def parse_index(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _fmt_index(entries) -> str:
    return ",".join(str(x) for x in entries)


def _index(entries, r, d, name="alpha") -> SchubertIndex:
    try:
        return SchubertIndex(entries, r, d)
    except ValueError as exc:
        raise UsageError(f"--{name}: {exc}")


# Each command: (flags, builder). flags is a list of (name, kind, required/default)
# where kind is "int" or "index". builder(args: dict) -> (outputs, flags).

def _rho(a):
    return {"rho": rho(SeriesParams(a["g"], a["r"], a["d"]))}, []


def _rho_ram(a):
    alpha = _index(a["alpha"], a["r"], a["d"])
    return {"rho_ramified": rho_ramified(SeriesParams(a["g"], a["r"], a["d"]), alpha)}, []


def _problem(a) -> SecantProblem:
    try:
        return SecantProblem(g=a["g"], d=a["d"], r=a["r"], e=a["e"], f=a["f"])
    except ValueError as exc:
        raise PreconditionError(str(exc))


def _secant_dim(a):
    p = _problem(a)
    out = {
        "expected_cycle_dim": expected_cycle_dim(p),
        "family_dim_bound": family_dim_bound(p),
        "coppens_martens_dim": coppens_martens_dim(p),
        "rho_zero_emptiness": rho_zero_emptiness(p),
    }
    if p.e >= 1 and p.f == 1:
        out["very_ample_guaranteed"] = very_ample_guaranteed(p.g, p.r, p.d, p.e)
    return out, []


def _verdict(a):
    v = secant_verdict(_problem(a))
    return {
        "status": v.status.value,
        "expected_dim_cycle": v.expected_dim_cycle,
        "expected_dim_family": v.expected_dim_family,
        "witnesses": {k: b for k, b in v.witnesses},
    }, []


def _count_record(c):
    return {"count": c.value, "formula": c.formula}, list(c.flags)


def _castelnuovo(a):
    return _count_record(castelnuovo(a["d"], a["g"], a["r"]))


def _cayley(a):
    return _count_record(cayley_r3(a["d"], a["g"]))


def _consistency(a):
    mismatches, values = consistency_check(a["dmax"], a["gmax"])
    out = {"checked": len(values) + len(mismatches), "mismatches": len(mismatches)}
    if mismatches:
        out["first_mismatches"] = [list(m) for m in mismatches[:10]]
    return out, []


def _chain_spec(a) -> ChainSpec:
    r, d = a["r"], a["d"]
    start = _index(a["start"], r, d, "start") if a.get("start") else None
    end = _index(a["end"], r, d, "end") if a.get("end") else None
    try:
        return ChainSpec(a["g"], r, d, start, end)
    except ValueError as exc:
        raise PreconditionError(str(exc))


def _chain_count(a):
    return {"count": count_chain_series(_chain_spec(a))}, []


def _chain_enum(a):
    res = enumerate_chain_series(_chain_spec(a), a["limit"])
    paths = [
        {
            "stationary_indices": list(p.stationary_indices),
            "sequences": [list(s.entries) for s in p.sequences],
        }
        for p in res.paths
    ]
    flags = ["truncated"] if res.truncated else []
    return {"paths": paths, "returned": len(paths), "truncated": res.truncated}, flags


def _construct(a):
    p = _problem(a)
    c = build_secant_construction(p)
    checks = assumption_degree_checks(p)
    out = {
        "alpha": list(c.alpha.entries),
        "beta": list(c.beta.entries),
        "merged": list(c.merged.entries),
        "gamma": list(c.gamma.entries),
        "alpha_sum": c.alpha.total(),
        "beta_sum": c.beta.total(),
        "gamma_identity": gamma_dimension_identity(p),
        "separation_condition": separation_condition(p),
    }
    out.update(checks)
    return out, []


def _power_bound(a):
    alpha = _index(a["alpha"], a["r"], a["d"]) if a.get("alpha") else SchubertIndex.zero(a["r"], a["d"])
    try:
        b = power_bound(a["g"], a["r"], a["d"], alpha, a["n"])
    except ValueError as exc:
        raise PreconditionError(str(exc))
    return {
        "threshold": b.threshold,
        "m": b.m,
        "rho_adj": b.rho_adj,
        "riemann_roch_ceiling": riemann_roch_ceiling(a["n"], a["d"], a["g"]),
        "claim": b.claim,
    }, []


def _square_bound(a):
    alpha = _index(a["alpha"], a["r"], a["d"]) if a.get("alpha") else SchubertIndex.zero(a["r"], a["d"])
    b = square_bound(a["g"], a["r"], a["d"], alpha)
    return {
        "threshold": b.threshold,
        "rho_adj": b.rho_adj,
        "riemann_roch_ceiling": riemann_roch_ceiling(2, a["d"], a["g"]),
        "claim": b.claim,
    }, []


GDR = [("g", "int", None), ("r", "int", None), ("d", "int", None)]
PROBLEM = [("g", "int", None), ("d", "int", None), ("r", "int", None), ("e", "int", None), ("f", "int", None)]

COMMANDS: Dict[str, tuple] = {
    "rho": (GDR, _rho, "Brill-Noether number rho(g, r, d)"),
    "rho-ram": (GDR + [("alpha", "index", None)], _rho_ram, "adjusted rho(g, r, d, alpha)"),
    "secant-dim": (PROBLEM, _secant_dim, "expected dimensions of V_e^{e-f}"),
    "verdict": (PROBLEM, _verdict, "emptiness / existence verdict for V_e^{e-f}"),
    "castelnuovo": ([("d", "int", None), ("g", "int", None), ("r", "int", None)], _castelnuovo,
                    "Castelnuovo count C(d, g, r)"),
    "cayley": ([("d", "int", None), ("g", "int", None)], _cayley, "Cayley's 4-secant line count"),
    "consistency": ([("dmax", "int", None), ("gmax", "int", None)], _consistency,
                    "compare general sum at r=3 with Cayley's form"),
    "chain-count": (GDR + [("start", "index", ""), ("end", "index", "")], _chain_count,
                    "count limit series on an elliptic chain"),
    "chain-enum": (GDR + [("start", "index", ""), ("end", "index", ""), ("limit", "int", 100)], _chain_enum,
                   "list limit series on an elliptic chain"),
    "construct": (PROBLEM, _construct, "Schubert-index construction for secant existence"),
    "power-bound": (GDR + [("alpha", "index", ""), ("n", "int", None)], _power_bound,
                    "vanishing threshold for L^n, n >= 3"),
    "square-bound": (GDR + [("alpha", "index", "")], _square_bound, "vanishing threshold for L^2"),
}


def _add_common(p):
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--quiet", action="store_true", help="suppress diagnostics on stderr")


def _add_flags(p, flags, ranged=False):
    for name, kind, default in flags:
        kw = {"dest": name}
        if ranged and kind == "int":
            kw["type"] = str
        else:
            kw["type"] = int if kind == "int" else parse_index
        if default is None:
            kw["required"] = True
        else:
            kw["default"] = parse_index(default) if kind == "index" else default
        p.add_argument(f"--{name}", **kw)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="secplanes", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (flags, _, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_)
        _add_flags(p, flags)
        _add_common(p)
    t = sub.add_parser("table", help="grid sweep of a subcommand to CSV; int flags accept lo:hi or a,b,c")
    t.add_argument("target", choices=[c for c in COMMANDS if c not in ("consistency", "chain-enum")])
    t.add_argument("rest", nargs=argparse.REMAINDER)
    t.set_defaults(format="csv", quiet=False)
    return parser


def _inputs_of(ns, flags) -> dict:
    out = {}
    for name, kind, _ in flags:
        v = getattr(ns, name)
        out[name] = _fmt_index(v) if kind == "index" else v
    return out


def _args_of(ns, flags) -> dict:
    return {name: getattr(ns, name) for name, _, _ in flags}


def _scalar(v):
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def _flatten(prefix, mapping):
    row = {}
    for k, v in mapping.items():
        row[f"{prefix}{k}"] = _scalar(v)
    return row


def render(records: List[dict], fmt: str) -> str:
    if fmt == "json":
        if len(records) == 1:
            return json.dumps(records[0], sort_keys=True) + "\n"
        return json.dumps(records, sort_keys=True) + "\n"
    rows = []
    for rec in records:
        row = {}
        row.update(_flatten("", rec["inputs"]))
        row.update(_flatten("", rec["outputs"]))
        row["validity_flags"] = ";".join(rec["validity_flags"])
        if "error" in rec:
            row["error"] = rec["error"]
        rows.append(row)
    header: List[str] = []
    for rec in records:
        for k in rec["inputs"]:
            if k not in header:
                header.append(k)
    outs = sorted({k for row in rows for k in row} - set(header) - {"validity_flags", "error"})
    header += outs + ["validity_flags"]
    if any("error" in row for row in rows):
        header.append("error")
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=header, restval="", lineterminator="\r\n")
    w.writeheader()
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def record(command: str, inputs: dict, outputs: dict, flags) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "validity_flags": sorted(flags),
        "version": __version__,
    }


def _expand(text: str) -> List[int]:
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad grid value {text!r}; use lo:hi or a,b,c")


def _table(ns) -> List[dict]:
    flags, fn, _ = COMMANDS[ns.target]
    p = _Parser(prog=f"secplanes table {ns.target}")
    _add_flags(p, flags, ranged=True)
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.add_argument("--quiet", action="store_true")
    sub_ns = p.parse_args(ns.rest)
    ns.format, ns.quiet = sub_ns.format, sub_ns.quiet
    axes = []
    for name, kind, _ in flags:
        v = getattr(sub_ns, name)
        axes.append(_expand(v) if kind == "int" else [v])
    records = []
    for combo in itertools.product(*axes):
        args = {name: val for (name, _, _), val in zip(flags, combo)}
        inputs = {name: (_fmt_index(val) if kind == "index" else val)
                  for (name, kind, _), val in zip(flags, combo)}
        try:
            outputs, vflags = fn(args)
            records.append(record(ns.target, inputs, outputs, vflags))
        except (PreconditionError, UsageError, ValueError) as exc:
            rec = record(ns.target, inputs, {}, ["error"])
            rec["error"] = str(exc)
            records.append(rec)
    return records


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    quiet = False
    try:
        ns = build_parser().parse_args(argv)
        quiet = ns.quiet
        if ns.command == "table":
            records = _table(ns)
            stdout.write(render(records, ns.format))
            return EXIT_OK
        flags, fn, _ = COMMANDS[ns.command]
        outputs, vflags = fn(_args_of(ns, flags))
        rec = record(ns.command, _inputs_of(ns, flags), outputs, vflags)
        stdout.write(render([rec], ns.format))
        if ns.command == "consistency" and outputs["mismatches"]:
            if not quiet:
                stderr.write(f"consistency: {outputs['mismatches']} mismatches\n")
            return EXIT_INTEGRALITY
        return EXIT_OK
    except UsageError as exc:
        if not quiet:
            stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except IntegralityError as exc:
        if not quiet:
            stderr.write(f"integrality failure: {exc}\n")
        return EXIT_INTEGRALITY
    except (PreconditionError, SecplanesError) as exc:
        if not quiet:
            code = getattr(exc, "code", "PRECONDITION_FAIL")
            stderr.write(f"precondition failure [{code}]: {exc}\n")
        return EXIT_PRECONDITION


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
