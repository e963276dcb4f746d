"""Command-line front end: one JSON task document in, one report out.

Usage::

    hodgemax [--json] [--input PATH]

The task document (read from PATH or standard input) looks like::

    {"schema_version": 1, "command": "tracepoly", "payload": {"n": 3}}

Exit codes: 0 success, 2 malformed input, 3 negative mathematical verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import jsonschema

from . import serialize as ser
from .arakelov import PositivityViolation, Verdict, audit, render_text
from .constructions import borcea_vhs, kummer_table
from .core import BaseCurve, HodgeError, InvalidBundle
from .schema import PAYLOADS, TASK
from .sl2 import clebsch_gordan, hodge_numbers, tensor_power_decompose, trace_polynomial
from .structure import (
    Status,
    assemble,
    build_pure_component,
    feasibility,
    invariant_bidegree_check,
    width_multiplicities_from_hodge_numbers,
    WidthDecomposition,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NEGATIVE = 3


class ParseError(Exception):
    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class SchemaError(Exception):
    def __init__(self, message, path="$"):
        super().__init__(message)
        self.path = path


@dataclass(frozen=True)
class TaskDocument:
    command: str
    payload: dict
    schema_version: int = 1


def _path(error) -> str:
    return "$" + "".join(f"[{p}]" if isinstance(p, int) else f".{p}"
                         for p in error.absolute_path)


def _validate(instance, schema, prefix=""):
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(instance), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        path = _path(e)
        if prefix:
            path = prefix + path[1:]
        raise SchemaError(f"{path}: {e.message}", path)


def parse_task(data: bytes | str) -> TaskDocument:
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"input is not UTF-8 (byte {e.start})", e.start) from None
    else:
        text = data
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        offset = len(text[: e.pos].encode("utf-8"))
        raise ParseError(f"invalid JSON at byte {offset}: {e.msg}", offset) from None
    _validate(obj, TASK)
    _validate(obj["payload"], PAYLOADS[obj["command"]], prefix="$.payload")
    return TaskDocument(obj["command"], obj["payload"], obj.get("schema_version", 1))


# -- command handlers: each returns (json result, text, exit code) ------------


def _audit(p):
    report = audit(ser.bundle_from_json(p["bundle"]))
    code = EXIT_OK if report.verdict in (Verdict.STRICTLY_MAXIMAL, Verdict.ZERO_HIGGS) \
        else EXIT_NEGATIVE
    return ser.audit_to_json(report), render_text(report), code


def _decompose(p):
    d = width_multiplicities_from_hodge_numbers(p["weight"], p["hodge_numbers"])
    text = f"weight {d.weight}: {d.to_rep()}\n"
    for w, m in d.multiplicities:
        text += f"  width {w}: {m}\n"
    return ser.decomposition_to_json(d), text, EXIT_OK


def _build(p):
    base = ser.base_from_json(p["base"])
    bundle = build_pure_component(p["width"], p["weight"], base, p.get("unitary_rank", 1))
    report = audit(bundle)
    twist = (p["weight"] - p["width"]) // 2
    name = f"S^{p['width']}(L)" + (f"(-{twist})" if twist else "")
    lines = [f"{name} over g={base.genus}, s={base.punctures}"]
    for c in bundle.components:
        lines.append(f"  ({c.p},{c.q}) rank {c.rank} degree {c.degree} "
                     f"kernel {c.kernel_rank}")
    lines.append(f"verdict: {report.verdict.value}")
    result = {"bundle": ser.bundle_to_json(bundle), "verdict": report.verdict.value}
    return result, "\n".join(lines) + "\n", EXIT_OK


def _cg(p):
    x = clebsch_gordan(p["a"], p["b"])
    widths = [t.width for t in x.terms]
    return {"widths": widths}, f"S^{p['a']} x S^{p['b']} = {x}\n", EXIT_OK


def _tensorpower(p):
    x = tensor_power_decompose(p["n"])
    return ser.rep_to_json(x), f"(S^1)^{p['n']} = {x}\n", EXIT_OK


def _tracepoly(p):
    tp = trace_polynomial(p["n"])
    return tp.to_json(), f"p_{p['n']}(t) = {tp}\n{tp.to_json()}\n", EXIT_OK


def _borcea(p):
    n = p["n"]
    b = borcea_vhs(n)
    rows = hodge_numbers(b.anti_invariant, n)
    result = {
        "n": n,
        "anti_invariant": ser.rep_to_json(b.anti_invariant),
        "hodge_numbers": ser.hodge_numbers_to_json(rows),
        "invariant_part": b.invariant_note,
    }
    lines = [f"anti-invariant: {b.anti_invariant}", f"invariant: {b.invariant_note}"]
    lines += [f"  h^{{{pp},{q}}} = {h}" for pp, q, h in rows]
    code = EXIT_OK
    if "base" in p:
        base = ser.base_from_json(p["base"])
        report = audit(assemble(WidthDecomposition.from_rep(b.anti_invariant, n), base))
        result["verdict"] = report.verdict.value
        lines.append(f"verdict over g={base.genus}, s={base.punctures}: "
                     f"{report.verdict.value}")
        if report.verdict is not Verdict.STRICTLY_MAXIMAL:
            code = EXIT_NEGATIVE
    return result, "\n".join(lines) + "\n", code


def _kummer(p):
    e = kummer_table(p["d"], p["case"])
    result = {"d": e.d, "case": e.case, "m": e.embedding_exponent,
              "fiber_dimension": e.fiber_dimension,
              "endomorphism_algebra": e.endomorphism_algebra}
    text = (f"d={e.d}, case {e.case}: fiber dimension {e.fiber_dimension}, "
            f"End (x) Q = {e.endomorphism_algebra}\n")
    return result, text, EXIT_OK


def _feasibility(p):
    v = feasibility(p["weight"], ser.base_from_json(p["base"]), p.get("h_top", 1),
                    p.get("strictly_maximal", True), calabi_yau=p.get("calabi_yau", False))
    code = EXIT_NEGATIVE if v.status is Status.INFEASIBLE else EXIT_OK
    return ser.feasibility_to_json(v), f"{v.status.value} [{v.rule}]: {v.detail}\n", code


def _bidegree(p):
    r = invariant_bidegree_check(ser.rep_from_json(p["rep"]), p["m"], p["m_prime"],
                                 p["weight"])
    text = (f"V({r.m},{r.m_prime}) of weight {r.weight}: width-0 multiplicity "
            f"{r.width_zero_multiplicity}, expected bidegree {r.expected_bidegree}, "
            f"{'ok' if r.ok else 'FAILED'}\n")
    return ser.bidegree_to_json(r), text, EXIT_OK if r.ok else EXIT_NEGATIVE


HANDLERS = {
    "audit": _audit,
    "decompose": _decompose,
    "build": _build,
    "cg": _cg,
    "tensorpower": _tensorpower,
    "tracepoly": _tracepoly,
    "borcea": _borcea,
    "kummer": _kummer,
    "feasibility": _feasibility,
    "bidegree-check": _bidegree,
}


def run(doc: TaskDocument, json_output: bool = False) -> tuple[str, int]:
    """Execute a parsed task; returns the rendered output and the exit code."""
    try:
        result, text, code = HANDLERS[doc.command](doc.payload)
    except PositivityViolation as e:
        return _error("PositivityViolation", str(e), json_output, doc.command), EXIT_NEGATIVE
    except InvalidBundle as e:
        return _error("InvalidBundle", str(e), json_output, doc.command), EXIT_INPUT
    except HodgeError as e:
        return _error(type(e).__name__, str(e), json_output, doc.command), EXIT_INPUT
    if json_output:
        return ser.dumps({"schema_version": 1, "command": doc.command,
                          "result": result}), code
    return text, code


def _error(kind, message, json_output, command=None, **extra) -> str:
    if json_output:
        err = {"kind": kind, "message": message, **extra}
        return ser.dumps({"schema_version": 1, "command": command, "error": err})
    return f"error: {kind}: {message}\n"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="hodgemax", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--input", metavar="PATH", help="task document (default: stdin)")
    args = parser.parse_args(argv)

    try:
        if args.input:
            with open(args.input, "rb") as fh:
                data = fh.read()
        else:
            data = sys.stdin.buffer.read()
    except OSError as e:
        sys.stdout.write(_error("IOError", str(e), args.json))
        return EXIT_INPUT

    try:
        doc = parse_task(data)
    except ParseError as e:
        sys.stdout.write(_error("ParseError", str(e), args.json, offset=e.offset))
        return EXIT_INPUT
    except SchemaError as e:
        sys.stdout.write(_error("SchemaError", str(e), args.json, path=e.path))
        return EXIT_INPUT

    out, code = run(doc, args.json)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
