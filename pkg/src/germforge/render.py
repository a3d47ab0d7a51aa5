"""Text and JSON rendering for scalars and truncated series.

The text form round-trips through the expression parser, including the
trailing + O(z^(N+1)) marker, which encodes the truncation order.  The JSON
form lifts all coefficients to one common conductor and writes rationals as
decimal strings in [numerator, denominator] pairs, so consumers never lose
precision.
"""

from __future__ import annotations

import json

from .powerseries import TruncatedSeries
from .scalar import CycloScalar, scalar_to_str


def _is_sum(text: str) -> bool:
    return " + " in text or " - " in text


def _term_str(c: CycloScalar, e: int) -> str:
    if e == 0:
        return scalar_to_str(c)
    base = "z" if e == 1 else f"z^{e}"
    if c == 1:
        return base
    if c == -1:
        return f"-{base}"
    cs = scalar_to_str(c)
    if _is_sum(cs):
        return f"({cs})*{base}"
    return f"{cs}*{base}"


def series_to_str(s: TruncatedSeries) -> str:
    parts = [_term_str(c, e) for e, c in s.items()]
    if not parts:
        body = "0"
    else:
        body = parts[0]
        for t in parts[1:]:
            body += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return f"{body} + O(z^{s.trunc + 1})"


def scalar_to_json_obj(c: CycloScalar) -> list[list[str]]:
    return [[str(q.numerator), str(q.denominator)] for q in c.coeffs]


def series_to_json_obj(s: TruncatedSeries) -> dict:
    n = s.common_conductor()
    coeffs = [[e, scalar_to_json_obj(c.lift(n))] for e, c in s.items()]
    return {"conductor": n, "trunc": s.trunc, "coeffs": coeffs}


def format_series(s: TruncatedSeries, mode: str = "text") -> str:
    """Render a series as grammar-compatible text or as a JSON record."""
    if mode == "text":
        return series_to_str(s)
    if mode == "json":
        return json.dumps(series_to_json_obj(s), indent=2, sort_keys=True)
    raise ValueError(f"unknown format mode {mode!r}")
