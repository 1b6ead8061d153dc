"""Command-line interface.

Exit codes: 0 success, 1 internal invariant alarm, 2 bad flags or input,
3 parameters outside a stated range, 4 budget exceeded or inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any

import numpy as np

from . import bch, bounds, codes, cyclotomic, mpc
from .errors import BudgetExceeded, CodingError, InvariantViolation, ParamOutOfRange
from .gf import FieldSpec, field_create

SCHEMA_VERSION = 1

EXIT_OK, EXIT_INTERNAL, EXIT_FLAGS, EXIT_PARAMS, EXIT_BUDGET = 0, 1, 2, 3, 4


class InputError(ValueError):
    """Malformed code spec file or matrix flag."""


class Inconclusive(Exception):
    """Output was produced but could not be certified; maps to exit 4."""


# -- input parsing ---------------------------------------------------------------

def parse_code_spec(text: str) -> codes.LinearCode:
    """Read ``field p e`` / ``length n`` / generator rows."""
    f: FieldSpec | None = None
    n = None
    rows: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        try:
            if head == "field":
                if len(rest) not in (1, 2):
                    raise InputError(f"line {lineno}: expected 'field p e'")
                f = field_create(int(rest[0]), int(rest[1]) if len(rest) == 2 else 1)
            elif head == "length":
                n = int(rest[0])
            else:
                rows.append([int(x) for x in line.split()])
        except (ValueError, IndexError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"line {lineno}: {exc}") from exc
    if f is None or n is None:
        raise InputError("code spec needs 'field p e' and 'length n' lines")
    for r in rows:
        if len(r) != n:
            raise InputError(f"row of length {len(r)} in a length-{n} code")
        if any(not 0 <= x < f.order for x in r):
            raise InputError(f"row entries outside GF({f.order})")
    return codes.LinearCode.from_generator(f, np.array(rows, dtype=np.int64).reshape(-1, n), n)


def format_code_spec(c: codes.LinearCode) -> str:
    lines = [f"field {c.field.p} {c.field.e}", f"length {c.n}"]
    lines += [" ".join(str(int(x)) for x in row) for row in c.generator]
    return "\n".join(lines) + "\n"


def parse_matrix(s: str) -> list[list[int]]:
    """``"1 1; 0 1"`` or ``"1,1;0,1"``."""
    try:
        rows = [[int(x) for x in r.replace(",", " ").split()] for r in s.split(";") if r.strip()]
    except ValueError as exc:
        raise InputError(f"bad matrix {s!r}") from exc
    if not rows or len({len(r) for r in rows}) != 1:
        raise InputError(f"matrix {s!r} is empty or ragged")
    return rows


def _read_code(path: str) -> codes.LinearCode:
    try:
        return parse_code_spec(Path(path).read_text())
    except OSError as exc:
        raise InputError(str(exc)) from exc


# -- helpers ----------------------------------------------------------------------

def field_descriptor(f: FieldSpec) -> dict:
    return {"p": f.p, "e": f.e, "order": f.order, "defining_poly": list(f.defining_poly)}


def _bch_from_args(a) -> tuple[bch.BCHSpec, codes.LinearCode]:
    return bch.bch_code(a.n, a.q, a.delta, a.b)


def _code_from_args(a) -> codes.LinearCode:
    if a.code:
        return _read_code(a.code)
    if a.n is None or a.q is None or a.delta is None:
        raise InputError("give --code FILE or --n/--q/--delta")
    _, c = bch.bch_code(a.n, a.q, a.delta, a.b)
    if getattr(a, "dual", "none") == "euclidean":
        c = codes.dual(c)
    elif getattr(a, "dual", "none") == "hermitian":
        c = codes.hermitian_dual(c)
    return c


# -- subcommands ------------------------------------------------------------------

def cmd_coset(a) -> dict:
    c = cyclotomic.coset(a.i % a.n, a.q, a.n)
    return {"n": a.n, "q": a.q, "i": a.i, "orbit": list(c.elements), "size": len(c), "leader": c.rep}


def cmd_bch(a) -> dict:
    spec, code = _bch_from_args(a)
    t = spec.defining_set
    return {
        "n": a.n,
        "q": a.q,
        "delta": a.delta,
        "b": a.b,
        "m": t.m,
        "defining_set": t.sorted(),
        "generator": list(spec.generator.coeffs),
        "field": field_descriptor(spec.generator.field),
        "dimension": code.k,
        "bch_bound": bch.bch_bound(t),
    }


def cmd_dualset(a) -> dict:
    t = bch.bch_defining_set(a.n, a.q, a.delta, a.b)
    d = bch.dual_defining_set(t, a.inner)
    start, length = bch.longest_run(d)
    return {
        "n": a.n,
        "q": a.q,
        "delta": a.delta,
        "b": a.b,
        "inner": a.inner,
        "dual_defining_set": d.sorted(),
        "size": len(d),
        "longest_run": {"start": start, "length": length, "stop": (start + length - 1) % a.n if length else None},
        "bch_bound": bch.bch_bound(d) if len(d) < a.n else None,
    }


def cmd_mindist(a) -> dict:
    c = _code_from_args(a)
    r = codes.min_distance(c, a.budget)
    out = {"n": c.n, "k": c.k, "field": field_descriptor(c.field), "distance": r.as_dict()}
    if not r.exact:
        raise Inconclusive(out)
    return out


def cmd_mp(a) -> dict:
    cs = [_read_code(p) for p in a.code]
    spec = mpc.MatrixProductSpec(tuple(cs), parse_matrix(a.matrix))
    c = mpc.matrix_product(spec)
    bound = mpc.mp_distance_bound(spec, [codes.min_distance(x, a.budget) if x.k else None for x in cs])
    out = {
        "length": c.n,
        "dimension": c.k,
        "field": field_descriptor(c.field),
        "constituents": [{"n": x.n, "k": x.k} for x in cs],
        "bound": bound.as_dict(),
    }
    if a.exact:
        out["distance"] = codes.min_distance(c, a.budget).as_dict()
    if a.emit:
        out["generator"] = c.generator.tolist()
    return out


def cmd_selfdual(a) -> dict:
    d = _code_from_args(a)
    c, cert, spec = mpc.build_self_dual(d, parse_matrix(a.matrix), a.inner)
    dists = [codes.min_distance(x, a.budget) if x.k else None for x in spec.constituents]
    out = {
        "certificate": cert.as_dict(),
        "field": field_descriptor(c.field),
        "bound": mpc.mp_distance_bound(spec, dists).as_dict(),
    }
    if a.exact:
        out["distance"] = codes.min_distance(c, a.budget).as_dict()
    return out


_PARAM_FLAGS = ("q", "s", "m", "t", "lam", "u", "a", "b", "l", "delta")


def cmd_verify(a) -> dict:
    params = {k: getattr(a, k) for k in _PARAM_FLAGS if getattr(a, k) is not None}
    if a.construction:
        params["construction"] = a.construction
    claim = bounds.make_claim(a.theorem, params)
    report = bounds.verify_claim(claim, a.mode, a.budget)
    out = {"report": report.as_dict()}
    if report.status == "inconclusive":
        raise Inconclusive(out)
    return out


def cmd_tables(a) -> dict:
    limit = 0 if a.no_exhaustive else 3**12
    return bounds.table_report(a.which, exhaustive_limit=limit, budget=a.budget)


# -- text rendering ----------------------------------------------------------------

def _scalar(v: Any) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_scalar(x)}" for k, x in v.items()) + "}"
    return str(v)


def render_text(obj: dict, indent: int = 0) -> str:
    pad = " " * indent
    keys = [k for k in obj if k != "schema_version"]
    width = max((len(k) for k in keys), default=0)
    lines = []
    for k in keys:
        v = obj[k]
        if isinstance(v, dict) and v and any(isinstance(x, (dict, list)) for x in v.values()):
            lines.append(f"{pad}{k}:")
            lines.append(render_text(v, indent + 2))
        elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            lines.append(f"{pad}{k}:")
            for x in v:
                lines.append(render_text(x, indent + 4).replace(" " * (indent + 4), pad + "  - ", 1))
        else:
            lines.append(f"{pad}{k.ljust(width)}  {_scalar(v)}")
    return "\n".join(lines)


def render_table(doc: dict) -> str:
    which = doc["table"]
    fq = "q" if which == 1 else "Q"
    head = ["t", "m", fq, "delta", "n", "printed", "theorem", "prior (printed)", "exact d", "status"]
    rows = []
    for r in doc["rows"]:
        prior = ", ".join(f"{k} {v}" for k, v in r["prior_printed"].items())
        exact = [f"{x['delta']}:{x['exact_dual_distance']}" for x in r["per_delta"] if x["exact_dual_distance"]]
        rows.append([
            str(r["t"]), str(r["m"]), str(r[fq]), f"{r['delta'][0]}-{r['delta'][1]}", str(r["n"]),
            str(r["printed_bound"]), str(r["theorem_bound"]), prior, " ".join(exact) or "-", r["status"],
        ])
    widths = [max(len(h), *(len(x[i]) for x in rows)) for i, h in enumerate(head)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*head).rstrip(), fmt.format(*("-" * w for w in widths)).rstrip()]
    lines += [fmt.format(*r).rstrip() for r in rows]
    if "analogue" in doc:
        an = doc["analogue"]
        lines.append("")
        lines.append(
            f"analogue Q={an['Q']} m={an['m']} t={an['t']} n={an['n']} delta {an['delta'][0]}-{an['delta'][1]}: "
            f"run {an['run'][0]}..{an['run'][1]}, bound {an['theorem_bound']}, statuses {', '.join(an['statuses'])}"
        )
    return "\n".join(lines)


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--budget", type=int, default=codes.DEFAULT_BUDGET, help="enumeration cap (codewords)")
    common.add_argument("-v", "--verbose", action="store_true", help="timing on stderr")

    ap = argparse.ArgumentParser(prog="selfdual-bch", description="BCH duals and self-dual matrix-product codes")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coset", parents=[common], help="q-cyclotomic coset of i mod n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--i", type=int, required=True)

    def bch_flags(p, required=True):
        p.add_argument("--n", type=int, required=required)
        p.add_argument("--q", type=int, required=required)
        p.add_argument("--delta", type=int, required=required)
        p.add_argument("--b", type=int, default=1)

    p = sub.add_parser("bch", parents=[common], help="BCH code parameters")
    bch_flags(p)

    p = sub.add_parser("dualset", parents=[common], help="dual defining set and its longest run")
    bch_flags(p)
    p.add_argument("--inner", choices=("euclidean", "hermitian"), default="euclidean")

    def code_flags(p):
        p.add_argument("--code", help="code spec file")
        bch_flags(p, required=False)
        p.add_argument("--dual", choices=("none", "euclidean", "hermitian"), default="none")

    p = sub.add_parser("mindist", parents=[common], help="minimum distance of a code")
    code_flags(p)

    p = sub.add_parser("mp", parents=[common], help="matrix-product code")
    p.add_argument("--code", action="append", required=True, help="constituent spec file (repeat)")
    p.add_argument("--matrix", required=True, help='e.g. "1 1; 0 1"')
    p.add_argument("--exact", action="store_true", help="also enumerate the product code")
    p.add_argument("--emit", action="store_true", help="include the generator matrix")

    p = sub.add_parser("selfdual", parents=[common], help="[D, D^perp]A with a self-duality certificate")
    code_flags(p)
    p.add_argument("--matrix", required=True)
    p.add_argument("--inner", choices=("euclidean", "hermitian"), default="euclidean")
    p.add_argument("--exact", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="evaluate and verify a catalogued bound")
    p.add_argument("--theorem", required=True, type=_theorem_id)
    for k in _PARAM_FLAGS:
        p.add_argument(f"--{k}", type=int)
    p.add_argument("--construction", choices=("first", "second"))
    p.add_argument("--mode", choices=("run_scan", "exhaustive", "both"), default="run_scan")

    p = sub.add_parser("tables", parents=[common], help="reproduce the bound tables")
    p.add_argument("--which", type=int, choices=(1, 2), required=True)
    p.add_argument("--no-exhaustive", action="store_true")
    return ap


_ID_ALIASES = {k.lower(): k for k in bounds.THEOREM_IDS}


def _theorem_id(s: str) -> str:
    try:
        return _ID_ALIASES[s.lower()]
    except KeyError:
        raise argparse.ArgumentTypeError(f"unknown theorem {s!r}; one of {', '.join(bounds.THEOREM_IDS)}")


COMMANDS = {
    "coset": cmd_coset,
    "bch": cmd_bch,
    "dualset": cmd_dualset,
    "mindist": cmd_mindist,
    "mp": cmd_mp,
    "selfdual": cmd_selfdual,
    "verify": cmd_verify,
    "tables": cmd_tables,
}


def _emit(out: dict, fmt: str, command: str) -> str:
    doc = {"schema_version": SCHEMA_VERSION, **out}
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True)
    if command == "tables":
        return render_table(doc)
    return render_text(doc)


def _error(exc: BaseException, code: int, fmt: str) -> tuple[int, str]:
    err = {"type": type(exc).__name__, "message": str(exc), "exit_code": code}
    if fmt == "json":
        return code, json.dumps({"schema_version": SCHEMA_VERSION, "error": err}, indent=2, sort_keys=True)
    return code, f"error ({err['type']}): {err['message']}"


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Parse and execute; returns ``(exit status, stdout text)``."""
    ap = build_parser()
    a = ap.parse_args(argv)
    t0 = time.perf_counter()
    try:
        out = COMMANDS[a.command](a)
        status, text = EXIT_OK, _emit(out, a.format, a.command)
    except Inconclusive as exc:
        status, text = EXIT_BUDGET, _emit(exc.args[0], a.format, a.command)
    except BudgetExceeded as exc:
        status, text = _error(exc, EXIT_BUDGET, a.format)
    except InvariantViolation as exc:
        status, text = _error(exc, EXIT_INTERNAL, a.format)
    except InputError as exc:
        status, text = _error(exc, EXIT_FLAGS, a.format)
    except (ParamOutOfRange, CodingError, ValueError) as exc:
        status, text = _error(exc, EXIT_PARAMS, a.format)
    if a.verbose:
        print(f"[{a.command}] {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return status, text


def main(argv: list[str] | None = None) -> int:
    status, text = run(argv)
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
