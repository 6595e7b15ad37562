"""Command-line entry point.

Subcommands: measure, sensitivity, sweep, family, relations, table.

Text input
  --text STR     raw byte mode: every UTF-8 byte of STR is one symbol (its
                 code point), so ``$`` is an ordinary symbol
  --tokens FILE  token mode: whitespace-separated decimal integers
  --bytes FILE   raw byte mode from a file

Output is a human table by default; ``--format records`` prints one JSON
object per line (field ``record`` names the record type).  Exact
rationals appear as ``"p/q"`` strings.

Exit status: 0 success, 1 failed verification, 2 usage error,
3 result inconclusive under the configured limits.
"""

from __future__ import annotations

import argparse
import difflib
import json
import random
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .text_core import (DEFAULT_POLICY, EDIT_KINDS, AlphabetPolicy, EditOp, Inconclusive, Text,
                        limits, parse_bytes, parse_tokens, render)

DEFAULT_SEED = 20240229  # documented default for every randomized mode

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- records

def _enc(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, EditOp):
        return {"kind": v.kind, "pos": v.position, "sym": v.symbol}
    if isinstance(v, tuple) and isinstance(v, Text):
        return list(v)
    return v


_RATIONAL = re.compile(r"-?\d+/\d+")


def _frac(v):
    if isinstance(v, str) and _RATIONAL.fullmatch(v):
        return Fraction(v)
    return v


def _edit(d) -> EditOp | None:
    return None if d is None else EditOp(d["pos"], d["sym"], d["kind"])


def to_records(obj) -> list[dict]:
    """Structured records for any report type."""
    from .adversarial_families import VerifyReport
    from .relations import RelationReport
    from .sensitivity_harness import GlobalWorst, SensitivityReport

    if isinstance(obj, MeasureResult):
        return [{"record": "measure", "measure": obj.measure, "text": list(obj.text),
                 "value": _enc(obj.value), "detail": obj.detail}]
    if isinstance(obj, SensitivityReport):
        head = {"record": "sensitivity", "measure": obj.measure, "text": list(obj.text),
                "edit_kind": obj.kind, "policy": str(obj.policy), "base": _enc(obj.base),
                "additive": _enc(obj.additive), "multiplicative": _enc(obj.multiplicative),
                "additive_witness": _enc(obj.additive_witness),
                "multiplicative_witness": _enc(obj.multiplicative_witness),
                "partial": obj.partial}
        rows = [{"record": "edit", "kind": r.edit.kind, "pos": r.edit.position,
                 "sym": r.edit.symbol, "value": _enc(r.value),
                 "ratio": None if r.value is None else _enc(Fraction(r.value) / Fraction(obj.base))}
                for r in obj.results]
        return [head] + rows
    if isinstance(obj, GlobalWorst):
        def wit(w):
            return None if w is None else {"text": list(w[0]), "edit": _enc(w[1])}
        return [{"record": "sweep", "measure": obj.measure, "n": obj.n, "sigma": obj.sigma,
                 "edit_kind": obj.kind, "max_ms": _enc(obj.multiplicative),
                 "max_as": _enc(obj.additive),
                 "ms_witness": wit(obj.multiplicative_witness),
                 "as_witness": wit(obj.additive_witness),
                 "texts": obj.texts, "partial": obj.partial}]
    if isinstance(obj, VerifyReport):
        inst = obj.instance
        return [{"record": "family", "family": inst.family, "params": inst.params,
                 "text": list(inst.text), "edit": _enc(inst.edit),
                 "checks": [{"measure": c.expectation.measure, "side": c.expectation.side,
                             "op": c.expectation.op, "expected": _enc(c.expectation.value),
                             "note": c.expectation.note, "actual": _enc(c.actual), "ok": c.ok}
                            for c in obj.checks]}]
    if isinstance(obj, RelationReport):
        return [{"record": "relations", "text": list(obj.text),
                 "values": {k: _enc(v) for k, v in sorted(obj.values.items())},
                 "results": [{"name": r.name, "left": _enc(r.left), "right": _enc(r.right),
                              "status": r.status, "source": r.source} for r in obj.results]}]
    if isinstance(obj, TableRow):
        return [{"record": "table_row", **{k: _enc(v) for k, v in obj.__dict__.items()}}]
    raise TypeError(f"no record form for {type(obj).__name__}")


def from_records(records: Sequence[dict]):
    """Inverse of :func:`to_records`."""
    from .adversarial_families import CheckResult, Expectation, FamilyInstance, VerifyReport
    from .relations import RelationReport, RelationResult
    from .sensitivity_harness import EditResult, GlobalWorst, SensitivityReport

    head = records[0]
    kind = head["record"]
    if kind == "measure":
        return MeasureResult(head["measure"], Text(head["text"]), _frac(head["value"]),
                             head["detail"])
    if kind == "sensitivity":
        results = tuple(EditResult(EditOp(r["pos"], r["sym"], r["kind"]), _frac(r["value"]))
                        for r in records[1:])
        return SensitivityReport(head["measure"], Text(head["text"]), head["edit_kind"],
                                 AlphabetPolicy.parse(head["policy"]), _frac(head["base"]),
                                 results, _frac(head["additive"]),
                                 _frac(head["multiplicative"]),
                                 _edit(head["additive_witness"]),
                                 _edit(head["multiplicative_witness"]))
    if kind == "sweep":
        def wit(w):
            return None if w is None else (Text(w["text"]), _edit(w["edit"]))
        return GlobalWorst(head["measure"], head["n"], head["sigma"], head["edit_kind"],
                           _frac(head["max_ms"]), _frac(head["max_as"]),
                           wit(head["ms_witness"]), wit(head["as_witness"]),
                           head["texts"], head["partial"])
    if kind == "family":
        checks = tuple(CheckResult(Expectation(c["measure"], c["side"], c["op"],
                                               _frac(c["expected"]), c["note"]),
                                   _frac(c["actual"]), c["ok"]) for c in head["checks"])
        inst = FamilyInstance(head["family"], head["params"], Text(head["text"]),
                              _edit(head["edit"]), tuple(c.expectation for c in checks))
        return VerifyReport(inst, checks)
    if kind == "relations":
        results = tuple(RelationResult(r["name"], _frac(r["left"]), _frac(r["right"]),
                                       r["status"], r["source"]) for r in head["results"])
        return RelationReport(Text(head["text"]),
                              {k: _frac(v) for k, v in head["values"].items()}, results)
    if kind == "table_row":
        fields = {k: _frac(v) for k, v in head.items() if k != "record"}
        return TableRow(**fields)
    raise ValueError(f"unknown record type {kind!r}")


def emit_records(records: Iterable[dict]) -> str:
    return "".join(json.dumps(r, sort_keys=True, separators=(",", ":")) + "\n" for r in records)


def parse_records(data: str) -> list[dict]:
    return [json.loads(line) for line in data.splitlines() if line.strip()]


# ---------------------------------------------------------------- measure

@dataclass(frozen=True)
class MeasureResult:
    measure: str
    text: Text
    value: object
    detail: str


def measure_detail(name: str, T: Text, value_limits: dict | None = None) -> MeasureResult:
    from .sensitivity_harness import evaluate

    value = evaluate(name, T, value_limits)
    detail = ""
    if name in ("z77", "z77sr", "zss", "zsssr", "z78", "zend"):
        from .lz_family import PARSERS
        detail = PARSERS[name](T).render()
    elif name == "r":
        from .bwt_runs import bwt
        detail = "BWT " + render(bwt(T).bwt)
    elif name == "delta":
        from .complexity_delta import substr_table
        tab = substr_table(T)
        detail = f"argmax k = {tab.argmax_k}, counts {list(tab.counts)}"
    elif name == "gamma":
        from .attractor_gamma import gamma_exact
        lim = (value_limits or {}).get("gamma")
        detail = "attractor " + ",".join(map(str, gamma_exact(T, limit=lim).witness))
    elif name == "b":
        from .bidirectional import b_exact
        lim = (value_limits or {}).get("b")
        detail = "scheme " + str(b_exact(T, limit=lim).witness)
    elif name == "gis":
        from .gcis import gcis_build
        detail = gcis_build(T).dump().replace("\n", "; ")
    elif name == "gbsc":
        from .grammar_slp import bisection
        detail = bisection(T).dump().replace("\n", "; ")
    elif name == "e":
        from .cdawg_size import maximal_repeats
        detail = "maximal repeats " + " ".join(render(r) for r in maximal_repeats(T).repeats)
    return MeasureResult(name, T, value, detail)


# ---------------------------------------------------------------- table

@dataclass(frozen=True)
class TableRow:
    measure: str
    edit: str
    upper: str
    lower: str
    family_ratio: object      # measured C(T')/C(T) on a lower-bound family, or None
    family_source: str
    sweep_ms: object          # exhaustive max MS, or None
    sweep_source: str


# measure, edit, upper annotation, lower annotation, family name, params
_TABLE_SPEC = (
    ("delta", "sub", "2", "2", "", {}),
    ("delta", "ins", "2", "2", "", {}),
    ("delta", "del", "1.5", "1.5", "delta-del", {"m": 20}),
    ("gamma", "sub", "O(log n) (asymptotic)", "2", "gamma-sub", {"k": 3}),
    ("gamma", "ins", "O(log n) (asymptotic)", "2", "gamma-ins", {"k": 3}),
    ("gamma", "del", "O(log n) (asymptotic)", "2", "gamma-del", {"k": 3}),
    ("r", "ins", "O(log n log r) (asymptotic)", "Omega(log n)", "rev-fibonacci", {"k": 14}),
    ("b", "sub", "2", "2", "b-family", {"k": 2}),
    ("z77", "sub", "2", "2", "lz77-q-sub", {"p": 10}),
    ("z77", "ins", "2", "2", "lz77-q-ins", {"p": 10}),
    ("z77", "del", "2", "2", "lz77-q-del", {"p": 10}),
    ("z77sr", "sub", "2", "2", "lz77sr-r-sub", {"p": 10}),
    ("z77sr", "ins", "2", "2", "lz77sr-r-ins", {"p": 10}),
    ("z77sr", "del", "2", "2", "lz77sr-q-del", {"p": 10}),
    ("zss", "sub", "3", "3", "lzss-sub", {"p": 6}),
    ("zss", "ins", "2", "2", "lzss-ins", {"p": 6}),
    ("zss", "del", "3", "3", "lzss-del", {"p": 6}),
    ("zsssr", "sub", "3", "3", "lzss-sub", {"p": 6}),
    ("zsssr", "ins", "2", "2", "lzss-ins", {"p": 6}),
    ("zsssr", "del", "3", "3", "lzss-del", {"p": 6}),
    ("z78", "sub", "O((n/log n)^(2/3)) (asymptotic)", "Omega(n^(1/4))", "lz78-sub", {"k": 16}),
    ("zend", "sub", "O(log^2(n/delta)) (asymptotic)", "2", "lzend-sub", {"p": 8}),
    ("zend", "ins", "O(log^2(n/delta)) (asymptotic)", "2", "lzend-ins", {"p": 8}),
    ("gbsc", "sub", "2", "2", "bisection-sub", {"k": 10}),
    ("gbsc", "ins", "|S|+1", "|S|", "bisection-ins", {"p": 6, "sigma": 2}),
    ("gbsc", "del", "|S|+1", "|S|", "bisection-del", {"p": 6, "sigma": 2}),
    ("gis", "sub", "4", "4", "gcis-sub", {"p": 10}),
    ("gis", "ins", "4", "4", "gcis-ins", {"p": 10}),
    ("gis", "del", "4", "4", "gcis-del", {"p": 10}),
    ("e", "del", "-", "2", "cdawg-del", {"m": 10}),
    ("e", "ins", "-", "2", "cdawg-ins", {"n": 20}),
)

_SWEEPABLE = {"delta", "z77", "z77sr", "zss", "zsssr", "z78", "zend", "gbsc", "gis", "e", "r"}


def emit_table(selection: Sequence[str] | None = None, sweep_n: int = 7) -> list[TableRow]:
    """Rows for the computable cells, in fixed order.

    ``family_ratio`` comes from the named family at the listed parameters;
    ``sweep_ms`` is the exhaustive worst ratio over binary texts of length
    ``sweep_n`` with one fresh symbol (0 disables sweeps).
    """
    from .adversarial_families import generate
    from .sensitivity_harness import evaluate, global_worst

    rows = []
    for meas, kind, up, low, fam, params in _TABLE_SPEC:
        if selection and meas not in selection:
            continue
        ratio, fsrc = None, ""
        if fam:
            inst = generate(fam, **params)
            lim = {"gamma": len(inst.edited) + 1, "b": len(inst.edited) + 1}
            try:
                ratio = Fraction(evaluate(meas, inst.edited, lim)) / Fraction(evaluate(meas, inst.text, lim))
            except Inconclusive:
                ratio = None
            fsrc = f"{fam} " + ",".join(f"{k}={v}" for k, v in params.items())
        sweep, ssrc = None, ""
        if sweep_n and meas in _SWEEPABLE:
            sw = global_worst(meas, sweep_n, 2, kind)
            sweep, ssrc = sw.multiplicative, f"all binary n={sweep_n}, fresh(1)"
        rows.append(TableRow(meas, kind, up, low, ratio, fsrc, sweep, ssrc))
    return rows


# ---------------------------------------------------------------- rendering

def _fmt(v, whole: bool = False) -> str:
    """Exact rationals print as p/q; ``whole`` prints integral ones as integers."""
    if v is None:
        return "-"
    if isinstance(v, Fraction) and not (whole and v.denominator == 1):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def render_human(obj) -> str:
    from .adversarial_families import VerifyReport
    from .relations import RelationReport
    from .sensitivity_harness import GlobalWorst, SensitivityReport

    if isinstance(obj, MeasureResult):
        out = f"{obj.measure} = {_fmt(obj.value)}"
        return out + (f"\n{obj.detail}" if obj.detail else "")
    if isinstance(obj, SensitivityReport):
        lines = [f"{obj.measure}(T) = {_fmt(obj.base)}  edit {obj.kind}  policy {obj.policy}"]
        lines.append(f"{'edit':>14}  {'value':>8}  {'ratio':>8}")
        for r in obj.results:
            ratio = None if r.value is None else Fraction(r.value) / Fraction(obj.base)
            lines.append(f"{str(r.edit):>14}  {_fmt(r.value):>8}  {_fmt(ratio):>8}")
        tag = " (lower bounds: some edits inconclusive)" if obj.partial else ""
        lines.append(f"max AS = {_fmt(obj.additive, True)} at {obj.additive_witness}, "
                     f"max MS = {_fmt(obj.multiplicative)} at {obj.multiplicative_witness}{tag}")
        return "\n".join(lines)
    if isinstance(obj, GlobalWorst):
        def w(x):
            return "-" if x is None else f"{render(x[0])} {x[1]}"
        tag = " (partial)" if obj.partial else ""
        return (f"{obj.measure} n={obj.n} sigma={obj.sigma} edit {obj.kind}: "
                f"max AS = {_fmt(obj.additive, True)}, max MS = {_fmt(obj.multiplicative)}{tag}\n"
                f"AS witness {w(obj.additive_witness)}\nMS witness {w(obj.multiplicative_witness)}\n"
                f"texts checked {obj.texts}")
    if isinstance(obj, VerifyReport):
        inst = obj.instance
        params = ",".join(f"{k}={v}" for k, v in inst.params.items())
        lines = [f"{inst.family}({params}) n={len(inst.text)} edit {inst.edit}"]
        for c in obj.checks:
            e = c.expectation
            status = "SKIP" if c.ok is None else ("PASS" if c.ok else "FAIL")
            lines.append(f"  {status} {e.measure}({e.side}) {e.op} {_fmt(e.value)}  actual {_fmt(c.actual)}")
        lines.append("PASS" if obj.ok else ("INCONCLUSIVE" if obj.inconclusive else "FAIL"))
        return "\n".join(lines)
    if isinstance(obj, RelationReport):
        lines = [f"text {render(obj.text)}"]
        for r in obj.results:
            lines.append(f"  {r.status.upper():7s} {r.name:14s} {_fmt(r.left)} vs {_fmt(r.right)}")
        return "\n".join(lines)
    if isinstance(obj, TableRow):
        return (f"{obj.measure:6s} {obj.edit:4s} upper {obj.upper:32s} lower {obj.lower:16s} "
                f"family {_fmt(obj.family_ratio):>8s} [{obj.family_source}]  "
                f"sweep {_fmt(obj.sweep_ms):>6s} [{obj.sweep_source}]")
    raise TypeError(type(obj).__name__)


# ---------------------------------------------------------------- argument handling

def _suggest(name: str, known: Iterable[str], what: str) -> UsageError:
    known = list(known)
    close = difflib.get_close_matches(name, known, n=3)
    hint = f"; did you mean {', '.join(close)}?" if close else ""
    return UsageError(f"unknown {what} {name!r}{hint} (known: {', '.join(known)})")


def _measure_name(name: str) -> str:
    from .sensitivity_harness import MEASURES
    if name not in MEASURES:
        raise _suggest(name, MEASURES, "measure")
    return name


def _params(items: Sequence[str] | None) -> dict:
    out = {}
    for item in items or ():
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {item!r}")
        try:
            out[key] = int(val)
        except ValueError:
            raise UsageError(f"--param {key}: integer expected, got {val!r}") from None
    return out


def _family_instance(name: str, params: dict):
    from .adversarial_families import FAMILIES, generate
    if name not in FAMILIES:
        raise _suggest(name, FAMILIES, "family")
    try:
        return generate(name, **params)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"family {name}: {exc}") from None


def _read_text(args) -> Text:
    sources = [s for s in (args.text, args.tokens, args.bytes) if s is not None]
    if getattr(args, "family", None):
        sources.append(args.family)
    if len(sources) != 1:
        raise UsageError("give exactly one input: --text, --tokens, --bytes or --family")
    if args.text is not None:
        T = parse_bytes(args.text.encode("utf-8"))
    elif args.tokens is not None:
        with open(args.tokens, encoding="ascii") as fh:
            T = parse_tokens(fh.read())
    elif args.bytes is not None:
        with open(args.bytes, "rb") as fh:
            T = parse_bytes(fh.read())
    else:
        return _family_instance(args.family, _params(args.param)).text
    if not T:
        raise UsageError("input text is empty")
    return T


def _limits(args) -> dict:
    out = limits()
    for item in filter(None, (args.limits or "").split(",")):
        key, sep, val = item.partition("=")
        if not sep or key not in out or not val.isdigit() or int(val) < 1:
            raise UsageError(f"--limits: cannot parse {item!r}")
        out[key] = int(val)
    return out


def _policy(args) -> AlphabetPolicy:
    if not args.policy:
        return DEFAULT_POLICY
    try:
        return AlphabetPolicy.parse(args.policy)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "records"), default="table",
                        help="human table or one JSON record per line")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help=f"seed for randomized modes (default {DEFAULT_SEED})")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    common.add_argument("--limits", help="override n caps, e.g. gamma=30,b=12,e=5000 "
                                         "(REPSENSE_LIMITS sets the defaults)")

    def text_inputs(p):
        p.add_argument("--text", help="inline text; each UTF-8 byte is one symbol")
        p.add_argument("--tokens", help="file of whitespace-separated integer symbols")
        p.add_argument("--bytes", help="file read as raw bytes")

    parser = argparse.ArgumentParser(prog="repsense", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", parents=[common], help="evaluate one measure")
    p.add_argument("--measure", required=True)
    text_inputs(p)

    p = sub.add_parser("sensitivity", parents=[common], help="all edits of one kind on one text")
    p.add_argument("--measure", required=True)
    p.add_argument("--edit", required=True, choices=EDIT_KINDS)
    p.add_argument("--policy", help="alphabet policy, e.g. fresh(1) or fixed(0,1)")
    text_inputs(p)
    p.add_argument("--family", help="use a family instance's T as input")
    p.add_argument("--param", action="append", help="family parameter key=value")

    p = sub.add_parser("sweep", parents=[common], help="worst case over all texts of length n")
    p.add_argument("--measure", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", type=int, default=2)
    p.add_argument("--edit", required=True, choices=EDIT_KINDS)
    p.add_argument("--policy", help="alphabet policy, e.g. fresh(1) or fixed(0,1)")

    p = sub.add_parser("family", parents=[common], help="generate and verify a lower-bound family")
    p.add_argument("--name")
    p.add_argument("--param", action="append", help="family parameter key=value")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--dump", action="store_true", help="print T, the edit and T'")
    p.add_argument("--list", action="store_true", help="list family names")

    p = sub.add_parser("relations", parents=[common], help="cross-measure inequalities")
    text_inputs(p)
    p.add_argument("--random", nargs=3, type=int, metavar=("N", "SIGMA", "COUNT"),
                   help="COUNT random texts of length N over SIGMA symbols")

    p = sub.add_parser("table", parents=[common], help="computable sensitivity table cells")
    p.add_argument("--measures", nargs="*", help="restrict to these measures")
    p.add_argument("--sweep-n", type=int, default=7, help="text length of exhaustive sweeps (0 disables)")
    return parser


def _emit(out, args, objs) -> None:
    for obj in objs:
        if args.format == "records":
            out.write(emit_records(to_records(obj)))
        else:
            out.write(render_human(obj) + "\n")


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _dispatch(args, out)
    except UsageError as exc:
        print(f"repsense: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Inconclusive as exc:
        print(f"repsense: inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (ValueError, KeyError) as exc:
        print(f"repsense: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args, out) -> int:
    lim = _limits(args)
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    cmd = args.command
    if cmd == "measure":
        name = _measure_name(args.measure)
        _emit(out, args, [measure_detail(name, _read_text(args), lim)])
        return EXIT_OK
    if cmd == "sensitivity":
        from .sensitivity_harness import sensitivity
        name = _measure_name(args.measure)
        rep = sensitivity(name, _read_text(args), args.edit, _policy(args), lim)
        _emit(out, args, [rep])
        return EXIT_INCONCLUSIVE if rep.partial else EXIT_OK
    if cmd == "sweep":
        from .sensitivity_harness import global_worst
        name = _measure_name(args.measure)
        if args.n < 1 or args.sigma < 1:
            raise UsageError("--n and --sigma must be >= 1")
        rep = global_worst(name, args.n, args.sigma, args.edit, _policy(args), args.jobs, lim)
        _emit(out, args, [rep])
        return EXIT_INCONCLUSIVE if rep.partial else EXIT_OK
    if cmd == "family":
        from .adversarial_families import FAMILIES, verify
        if args.list:
            for name, spec in FAMILIES.items():
                out.write(f"{name:20s} ({', '.join(spec.params)})  {spec.summary}\n")
            return EXIT_OK
        if not args.name:
            raise UsageError("family needs --name (or --list)")
        inst = _family_instance(args.name, _params(args.param))
        if args.dump:
            out.write(f"T  = {render(inst.text)}\nedit {inst.edit}\nT' = {render(inst.edited)}\n")
        if args.verify or not args.dump:
            rep = verify(inst, lim)
            _emit(out, args, [rep])
            if rep.inconclusive:
                return EXIT_INCONCLUSIVE
            return EXIT_OK if rep.ok else EXIT_FAILED
        return EXIT_OK
    if cmd == "relations":
        from .relations import check_relations
        if args.random:
            if any(v is not None for v in (args.text, args.tokens, args.bytes)):
                raise UsageError("give either a text or --random, not both")
            n, sigma, count = args.random
            if n < 1 or sigma < 1 or count < 0:
                raise UsageError("--random values must be positive")
            rng = random.Random(args.seed)
            texts = [Text(rng.choices(range(sigma), k=n)) for _ in range(count)]
        else:
            texts = [_read_text(args)]
        reports = [check_relations(T, gamma_limit=lim["gamma"]) for T in texts]
        _emit(out, args, reports)
        if not all(r.ok for r in reports):
            return EXIT_FAILED
        return EXIT_INCONCLUSIVE if any(r.skipped for r in reports) else EXIT_OK
    if cmd == "table":
        if args.measures:
            for m in args.measures:
                _measure_name(m)
        _emit(out, args, emit_table(args.measures, args.sweep_n))
        return EXIT_OK
    raise UsageError(f"unknown command {cmd}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
