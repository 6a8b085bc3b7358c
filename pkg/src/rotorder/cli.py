"""Command-line front end.

Angles are always given in units of pi: ``1/5`` means pi/5.  Exit codes:
0 success, 1 usage error, 2 input error, 3 internal assertion or a sweep
disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from math import gcd

from .angle import RationalAngle
from .angledec import probe_agrees, probe_perpendicular, theorem1_decide, gamma_double_cos_perpendicular
from .errors import IsolationFailure, LemmaViolation, LostRoot, NonExactDivision
from .gates import GateSetError, ProductVerdict, ht_classify, load_gate_set, product_order, word_search
from .trigpoly import chebyshev_T, cyclotomic, eta, psi

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

FAMILY_CAPS = {"psi": 10 ** 4, "eta": 10 ** 4, "cyclotomic": 10 ** 4, "chebyshev": 10 ** 3}
SWEEP_CAP = 200

_nullable_str = {"type": ["string", "null"]}
_nullable_int = {"type": ["integer", "null"]}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "inputs", "results", "timing"],
    "additionalProperties": False,
    "properties": {
        "command": {"enum": ["minpoly", "decide", "gates", "sweep"]},
        "inputs": {"type": "object"},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "properties": {
                    "label": {"type": "string"},
                    "polynomial": {"type": "string"},
                    "degree": {"type": "integer"},
                    "integer": {"type": "boolean"},
                    "monic": {"type": "boolean"},
                    "phi": _nullable_str,
                    "phi_half": _nullable_str,
                    "verdict": {"enum": ["rational", "irrational", "skipped"]},
                    "annihilator": _nullable_str,
                    "approx": {"type": ["number", "null"]},
                    "gamma": _nullable_str,
                    "gamma_half": _nullable_str,
                    "order": _nullable_int,
                    "witness": _nullable_str,
                    "word": {"type": ["array", "null"]},
                    "checked": {"type": "integer"},
                    "overflows": {"type": "array"},
                    "probe": _nullable_str,
                    "agrees": {"type": "boolean"},
                },
                "required": ["label"],
            },
        },
        "summary": {"type": "object"},
        "timing": {
            "type": "object",
            "required": ["seconds"],
            "properties": {"seconds": {"type": "number", "minimum": 0}},
        },
    },
}


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for input errors here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _angle(text: str) -> RationalAngle:
    try:
        return RationalAngle.parse(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(str(exc) or f"malformed angle literal {text!r}") from None


def _half(a: RationalAngle) -> str:
    return str(a / 2)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_minpoly(family: str, n: int) -> tuple[dict, list, dict]:
    cap = FAMILY_CAPS[family]
    low = 0 if family == "chebyshev" else 1
    if not low <= n <= cap:
        raise UsageError(f"{family} index must be in [{low}, {cap}]")
    p = {"psi": psi, "eta": eta, "cyclotomic": cyclotomic, "chebyshev": chebyshev_T}[family](n)
    res = {
        "label": f"{family}({n})",
        "polynomial": p.to_text(),
        "degree": p.degree,
        "integer": p.is_integral(),
        "monic": p.is_monic(),
    }
    return {"family": family, "n": n}, [res], {}


def _verdict_fields(v, order=None) -> dict:
    if v.is_rational:
        return {
            "verdict": "rational",
            "gamma": str(v.angle),
            "gamma_half": str(v.half_angle) if v.half_angle is not None else _half(v.angle),
            "order": order,
            "witness": None,
        }
    return {"verdict": "irrational", "gamma": None, "gamma_half": None, "order": None, "witness": v.reason}


def cmd_decide(phi_text: str) -> tuple[dict, list, dict]:
    phi = _angle(phi_text)
    b = gamma_double_cos_perpendicular(phi)
    v = theorem1_decide(phi)
    res = {
        "label": f"phi={phi}",
        "phi": str(phi),
        "phi_half": _half(phi),
        "annihilator": b.annihilator.to_text(),
        "approx": float(b),
    }
    res.update(_verdict_fields(v, v.angle.rotation_order() if v.is_rational else None))
    return {"phi": str(phi)}, [res], {}


def _product_fields(label: str, pv: ProductVerdict) -> dict:
    res = {"label": label, "annihilator": pv.cos_gamma.annihilator.to_text(), "approx": float(pv.cos_gamma)}
    res.update(_verdict_fields(pv.verdict, pv.order))
    return res


def _ht_phis(gates) -> list:
    out = []
    for g in gates:
        x, y, z = g.axis
        if x == 0 and y == 0:
            # T(phi) rotates by 2*phi about +z
            phi = g.angle / 2 if z > 0 else -(g.angle / 2)
            out.append((g.name, phi))
    return out


def cmd_gates(path: str, action: str, max_len: int, phi_text: str | None) -> tuple[dict, list, dict]:
    try:
        gates = load_gate_set(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    except GateSetError as exc:
        raise InputError(f"{path}: {exc}") from None
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None
    inputs = {
        "file": path,
        "action": action,
        "gates": [{"name": g.name, "axis": list(g.axis), "angle": str(g.angle)} for g in gates],
    }
    results = []
    summary: dict = {}
    if action == "product":
        if len(gates) < 2:
            raise InputError(f"{path}: product needs at least two gates")
        a, b = gates[0], gates[1]
        results.append(_product_fields(f"{a.name}*{b.name}", product_order(a, b)))
    elif action == "ht":
        if phi_text is not None:
            targets = [("--phi", _angle(phi_text))]
        else:
            targets = _ht_phis(gates)
            if not targets:
                raise InputError(f"{path}: no z-axis gate to read phi from; pass --phi")
        for name, phi in targets:
            res = _product_fields(f"H*T({phi}) from {name}", ht_classify(phi))
            res.update({"phi": str(phi), "phi_half": _half(phi)})
            results.append(res)
    else:
        if max_len < 1:
            raise UsageError("--max-len must be positive")
        sr = word_search(gates, max_len)
        res = {
            "label": "search",
            "word": None if sr.word is None else [[i, e] for i, e in sr.word],
            "checked": sr.checked,
            "overflows": [
                {"word": [[i, e] for i, e in w], "degree": d} for w, d in sr.overflows
            ],
        }
        if sr.verdict is None:
            res.update({"verdict": "skipped", "witness": "no infinite-order word found (certifies nothing)"})
        else:
            res.update(_product_fields(sr.spell(gates), sr.verdict))
            res["label"] = sr.spell(gates)
            res["word"] = [[i, e] for i, e in sr.word]
            res["checked"] = sr.checked
        results.append(res)
        summary = {"max_len": max_len}
    return inputs, results, summary


def sweep_angles(qmax: int):
    for q in range(1, qmax + 1):
        for p in range(-2 * q, 2 * q + 1):
            if gcd(p, q) == 1:
                yield RationalAngle(p, q)


def cmd_sweep(qmax: int) -> tuple[dict, list, dict]:
    if not 1 <= qmax <= SWEEP_CAP:
        raise UsageError(f"--qmax must be in [1, {SWEEP_CAP}]")
    matrix = {"rational": {"agree": 0, "disagree": 0}, "irrational": {"agree": 0, "disagree": 0}}
    rule_breaks = 0
    results = []
    for phi in sweep_angles(qmax):
        v = theorem1_decide(phi)
        pr = probe_perpendicular(phi)
        ok = probe_agrees(v, pr)
        kind = "rational" if v.is_rational else "irrational"
        matrix[kind]["agree" if ok else "disagree"] += 1
        rule = v.is_rational == phi.is_multiple_of_half_pi()
        rule_breaks += not rule
        if not ok or not rule:
            res = {"label": f"phi={phi}", "phi": str(phi), "probe": str(pr.fraction), "agrees": ok}
            res.update(_verdict_fields(v))
            results.append(res)
    summary = {
        "angles": sum(c for row in matrix.values() for c in row.values()),
        "agreement": matrix,
        "rule_violations": rule_breaks,
        "disagreements": len(results),
    }
    return {"qmax": qmax}, results, summary


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _human(command: str, inputs: dict, results: list, summary: dict) -> str:
    lines = []
    if command == "minpoly":
        r = results[0]
        lines.append(f"{r['label']}: {r['polynomial']}")
        lines.append(f"degree={r['degree']} integer={str(r['integer']).lower()} monic={str(r['monic']).lower()}")
    elif command == "sweep":
        m = summary["agreement"]
        lines.append(f"sweep qmax={inputs['qmax']}: {summary['angles']} angles")
        lines.append("exact verdict   probe agrees   probe disagrees")
        for kind in ("rational", "irrational"):
            lines.append(f"{kind:<15} {m[kind]['agree']:>12}   {m[kind]['disagree']:>15}")
        lines.append(f"pi/2-rule violations: {summary['rule_violations']}")
        for r in results:
            lines.append(f"  DISAGREE {r['label']}: {r['verdict']} vs probe {r['probe']}")
    else:
        for r in results:
            head = r["label"]
            if r.get("phi") is not None:
                head += f"  (phi = {r['phi']} pi, SU(2) half-angle {r['phi_half']} pi)"
            lines.append(head)
            if r.get("annihilator") is not None:
                lines.append(f"  annihilator: {r['annihilator']}  (~{r['approx']:.12g})")
            if r.get("verdict") == "rational":
                order = f", order {r['order']}" if r.get("order") is not None else ""
                lines.append(f"  verdict: rational, gamma = {r['gamma']} pi (half {r['gamma_half']} pi){order}")
            elif r.get("verdict") == "irrational":
                lines.append(f"  verdict: irrational ({r['witness']}), infinite order")
            elif r.get("verdict") == "skipped":
                lines.append(f"  {r['witness']}")
            if "checked" in r:
                lines.append(f"  words checked: {r['checked']}")
            for o in r.get("overflows", []):
                lines.append(f"  degree overflow ({o['degree']}) on word {o['word']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a JSON report")
    p = _Parser(prog="rotorder", description="Exact finite/infinite order decisions for rotation products.")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    m = sub.add_parser("minpoly", parents=[common], help="print a polynomial family member")
    m.add_argument("family", choices=sorted(FAMILY_CAPS))
    m.add_argument("n", type=int)

    d = sub.add_parser("decide", parents=[common], help="perpendicular equal-angle product for phi = p/q pi")
    d.add_argument("phi")

    g = sub.add_parser("gates", parents=[common], help="decisions on a gate-set JSON file")
    g.add_argument("file")
    g.add_argument("--action", choices=["product", "ht", "search"], required=True)
    g.add_argument("--max-len", type=int, default=4)
    g.add_argument("--phi", default=None)

    s = sub.add_parser("sweep", parents=[common], help="perpendicular-product sweep against the numeric oracle")
    s.add_argument("--qmax", type=int, required=True)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        if args.command == "minpoly":
            inputs, results, summary = cmd_minpoly(args.family, args.n)
        elif args.command == "decide":
            inputs, results, summary = cmd_decide(args.phi)
        elif args.command == "gates":
            inputs, results, summary = cmd_gates(args.file, args.action, args.max_len, args.phi)
        else:
            inputs, results, summary = cmd_sweep(args.qmax)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"rotorder: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"rotorder: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (LemmaViolation, NonExactDivision, IsolationFailure, LostRoot, AssertionError) as exc:
        print(f"rotorder: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    report = {
        "command": args.command,
        "inputs": inputs,
        "results": results,
        "timing": {"seconds": round(time.perf_counter() - start, 6)},
    }
    if summary:
        report["summary"] = summary
    if args.json:
        json.dump(report, out, indent=2)
        out.write("\n")
    else:
        out.write(_human(args.command, inputs, results, summary) + "\n")
    if args.command == "sweep" and (summary["disagreements"] or summary["rule_violations"]):
        return EXIT_INTERNAL
    return EXIT_OK


def main() -> None:
    sys.exit(run())
