"""Command-line front end: `germ <subcommand> ...`.

Every engine operation is reachable as a subcommand working on series
expressions; output is plain text by default and a stable JSON record with
--json.  Exit codes: 0 success, 1 domain errors (machine-readable with
--json), 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import selftest
from .classify import (
    a_invariant,
    flow,
    formally_conjugate,
    iterative_log,
    p_invariant,
)
from .errors import BadParameters, GermForgeError
from .expressions import DEFAULT_TRUNC, parse_germ, parse_series
from .germs import (
    Germ,
    averaging_linearizer,
    conjugate,
    iterate,
    multiplier,
    order_of,
    solve_conjugacy,
)
from .powerseries import TruncatedSeries
from .render import scalar_to_str, series_to_json_obj, series_to_str
from .reversal import (
    example_family,
    find_reverser,
    is_reversible,
    reversal_factorization,
    reverser_orders,
    symmetric_form_check,
)
from .scalar import CycloScalar, set_conductor_cap


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit code 2 is decided by run_command
        raise _UsageError(message)


def _series_payload(s: TruncatedSeries) -> dict:
    return series_to_json_obj(s)


def _scalar_payload(c: CycloScalar) -> str:
    return scalar_to_str(c)


def _parse_time(text: str) -> CycloScalar:
    probe = parse_series(text, 4)
    if any(e != 0 for e in probe.support()):
        raise BadParameters(f"flow time must be a scalar expression, got {text!r}")
    return probe.coefficient(0)


def _build_parser() -> _Parser:
    top = _Parser(prog="germ", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, *, args=(), help=""):
        p = sub.add_parser(name, help=help)
        p.add_argument("--trunc", type=int, default=None, help="truncation order")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--conductor-cap", type=int, default=None, help="largest allowed conductor")
        for spec in args:
            p.add_argument(*spec[0], **spec[1])
        return p

    add("mult", args=[(("expr",), {})], help="multiplier f'(0)")
    add("p", args=[(("expr",), {})], help="contact order of a tangent germ")
    add("a", args=[(("expr",), {})], help="residue conjugacy invariant")
    add("compose", args=[(("outer",), {}), (("inner",), {})], help="outer o inner")
    add("inverse", args=[(("expr",), {})], help="compositional inverse")
    add("conj", args=[(("h",), {}), (("f",), {})], help="h^(-1) o f o h")
    add("iterate", args=[(("expr",), {}), (("count",), {"type": int})], help="n-fold composition")
    add("order", args=[(("expr",), {}), (("--bound",), {"type": int, "default": None})],
        help="order up to truncation, within a bound")
    add("linearize", args=[(("expr",), {}), (("--delta",), {"type": int, "default": None})],
        help="averaging linearizer of a finite-order germ")
    add("log", args=[(("expr",), {})], help="iterative logarithm (flow generator)")
    add("flow", args=[(("expr",), {}), (("--time",), {"default": "1"})], help="time-t flow map")
    add("conjugacy", args=[(("f",), {}), (("g",), {})], help="solve for a conjugating germ")
    add("classify", args=[(("f",), {}), (("g",), {})], help="decide formal conjugacy")
    add("reversible", args=[(("expr",), {})], help="formal reversibility report")
    add("reverser", args=[(("expr",), {}), (("--order",), {"type": int, "default": None})],
        help="construct a reverser")
    add("orders", args=[(("--p",), {"type": int, "required": True})],
        help="realizable reverser orders at contact order p")
    add("factorize", args=[(("f",), {}), (("g",), {})], help="companion h = g o f")
    add("example", args=[
        (("--kind",), {"choices": ("model", "twisted", "conjugated_random"), "required": True}),
        (("--p",), {"type": int, "default": 1}),
        (("--s",), {"type": int, "default": 2}),
        (("--seed",), {"type": int, "default": 0}),
        (("--base",), {"default": "model"}),
    ], help="built-in reversible pairs")
    add("symcheck", args=[(("expr",), {}), (("--s",), {"type": int, "required": True})],
        help="rotational symmetric-shape check")
    add("selftest", help="run the acceptance criteria")
    return top


def _default_trunc(ns) -> int:
    return ns.trunc if ns.trunc is not None else DEFAULT_TRUNC


def _germ(ns, attr="expr") -> Germ:
    return parse_germ(getattr(ns, attr), _default_trunc(ns))


def _dispatch(ns) -> dict:
    """Run one subcommand, returning {json: obj, text: str}."""
    cmd = ns.command
    if cmd == "mult":
        m = multiplier(_germ(ns))
        return {"json": {"multiplier": _scalar_payload(m)}, "text": _scalar_payload(m)}
    if cmd == "p":
        value = p_invariant(_germ(ns))
        return {"json": {"p": value}, "text": str(value)}
    if cmd == "a":
        value = a_invariant(_germ(ns))
        return {"json": {"a": _scalar_payload(value)}, "text": _scalar_payload(value)}
    if cmd == "compose":
        t = _default_trunc(ns)
        outer = parse_series(ns.outer, t)
        inner = parse_series(ns.inner, t)
        return _series_result(outer.compose(inner))
    if cmd == "inverse":
        return _series_result(_germ(ns).inverse().series)
    if cmd == "conj":
        t = _default_trunc(ns)
        h = parse_germ(ns.h, t)
        f = parse_germ(ns.f, t)
        return _series_result(conjugate(h, f).series)
    if cmd == "iterate":
        return _series_result(iterate(_germ(ns), ns.count).series)
    if cmd == "order":
        f = _germ(ns)
        bound = ns.bound if ns.bound is not None else max(2 * f.trunc, 16)
        n = order_of(f, bound)
        return {"json": {"order": n, "bound": bound}, "text": "none" if n is None else str(n)}
    if cmd == "linearize":
        f = _germ(ns)
        delta = ns.delta
        if delta is None:
            delta = order_of(f, max(2 * f.trunc, 16))
            if delta is None:
                raise BadParameters("germ has no finite order within the search bound")
        return _series_result(averaging_linearizer(f, delta).series)
    if cmd == "log":
        return _series_result(iterative_log(_germ(ns)))
    if cmd == "flow":
        return _series_result(flow(_germ(ns), _parse_time(ns.time)).series)
    if cmd == "conjugacy":
        t = _default_trunc(ns)
        f = parse_germ(ns.f, t)
        g = parse_germ(ns.g, t)
        w = solve_conjugacy(f, g)
        if w is None:
            return {"json": {"witness": None}, "text": "absent"}
        obj = {
            "witness": _series_payload(w.conjugator.series),
            "verified_to": w.verified_to,
            "resonant_choices": [[k, _scalar_payload(c)] for k, c in w.resonant_choices],
        }
        text = (
            f"conjugator: {series_to_str(w.conjugator.series)}\n"
            f"verified to order {w.verified_to}"
        )
        return {"json": obj, "text": text}
    if cmd == "classify":
        t = _default_trunc(ns)
        same = formally_conjugate(parse_germ(ns.f, t), parse_germ(ns.g, t))
        return {"json": {"formally_conjugate": same}, "text": str(same).lower()}
    if cmd == "reversible":
        rep = is_reversible(_germ(ns), find_witness=True)
        obj = {
            "multiplier_class": rep.multiplier_class,
            "p": rep.p,
            "a": None if rep.a is None else _scalar_payload(rep.a),
            "formally_reversible": rep.formally_reversible,
            "strongly_reversible": rep.strongly_reversible,
            "order_spectrum": sorted(rep.order_spectrum),
            "reverser": None if rep.reverser is None else _series_payload(rep.reverser.series),
        }
        lines = [
            f"multiplier class:    {rep.multiplier_class}",
            f"formally reversible: {str(rep.formally_reversible).lower()}",
            f"strongly reversible: {str(rep.strongly_reversible).lower()}",
        ]
        if rep.p is not None:
            lines.insert(1, f"p: {rep.p}")
            lines.insert(2, f"a: {_scalar_payload(rep.a)}")
        if rep.order_spectrum:
            lines.append(f"reverser orders:     {' '.join(map(str, sorted(rep.order_spectrum)))}")
        if rep.reverser is not None:
            lines.append(f"reverser:            {series_to_str(rep.reverser.series)}")
        return {"json": obj, "text": "\n".join(lines)}
    if cmd == "reverser":
        g = find_reverser(_germ(ns), ns.order)
        return _series_result(g.series)
    if cmd == "orders":
        orders = sorted(reverser_orders(ns.p))
        return {"json": {"p": ns.p, "orders": orders}, "text": " ".join(map(str, orders))}
    if cmd == "factorize":
        t = _default_trunc(ns)
        h = reversal_factorization(parse_germ(ns.f, t), parse_germ(ns.g, t))
        return _series_result(h.series)
    if cmd == "example":
        params: dict = {}
        if ns.kind == "model":
            params["p"] = ns.p
        elif ns.kind == "twisted":
            params["s"] = ns.s
        else:
            params["base"] = ns.base
            params["seed"] = ns.seed
            if ns.base == "model":
                params["p"] = ns.p
            else:
                params["s"] = ns.s
        if ns.trunc is not None:
            params["trunc"] = ns.trunc
        f, g = example_family(ns.kind, **params)
        obj = {"kind": ns.kind, "f": _series_payload(f.series), "g": _series_payload(g.series)}
        text = f"f: {series_to_str(f.series)}\ng: {series_to_str(g.series)}"
        return {"json": obj, "text": text}
    if cmd == "symcheck":
        rep = symmetric_form_check(_germ(ns), ns.s)
        obj = {
            "symmetric": rep.symmetric,
            "support": list(rep.support),
            "support_ok": rep.support_ok,
            "coefficient_pairs": [
                [k, _scalar_payload(c), _scalar_payload(d)]
                for k, c, d in rep.coefficient_pairs
            ],
            "inverse_signs_alternate": rep.inverse_signs_alternate,
        }
        lines = [
            f"symmetric: {str(rep.symmetric).lower()}",
            f"support: {' '.join(map(str, rep.support))}",
            f"support ok: {str(rep.support_ok).lower()}",
            f"inverse signs alternate: {str(rep.inverse_signs_alternate).lower()}",
        ]
        return {"json": obj, "text": "\n".join(lines)}
    if cmd == "selftest":
        results = selftest.run_selftest()
        ok = all(r.passed for r in results)
        obj = {
            "passed": ok,
            "criteria": [
                {"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
        }
        lines = [
            f"criterion {r.number:2d} [{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}"
            for r in results
        ]
        lines.append("all criteria passed" if ok else "SOME CRITERIA FAILED")
        return {"json": obj, "text": "\n".join(lines), "exit": 0 if ok else 1}
    raise _UsageError(f"unknown command {cmd!r}")


def _series_result(s: TruncatedSeries) -> dict:
    return {"json": _series_payload(s), "text": series_to_str(s)}


def run_command(argv: list[str]) -> tuple[int, str]:
    """Execute one CLI invocation; returns (exit code, output text)."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except _UsageError as exc:
        return 2, f"usage error: {exc}"
    if getattr(ns, "conductor_cap", None) is not None:
        set_conductor_cap(ns.conductor_cap)
    try:
        result = _dispatch(ns)
    except GermForgeError as exc:
        if ns.json:
            payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
            return 1, json.dumps(payload, indent=2, sort_keys=True)
        return 1, f"error: {exc}"
    code = result.get("exit", 0)
    if ns.json:
        return code, json.dumps(result["json"], indent=2, sort_keys=True)
    return code, result["text"]


def main() -> None:
    code, output = run_command(sys.argv[1:])
    stream = sys.stdout if code == 0 else sys.stderr
    print(output, file=stream)
    raise SystemExit(code)
