"""graph6 and DOT interchange, and the JSON verification report."""

from __future__ import annotations

import json
import math
from typing import TYPE_CHECKING, Any

from .errors import Graph6Error
from .graph import Graph

if TYPE_CHECKING:
    from .combinatorics import PartitionLabeling
    from .search import VerificationReport

REPORT_KEYS = (
    "n",
    "p",
    "ks",
    "ex_brute",
    "ex_formula",
    "extremal_g6",
    "rho_max",
    "exsp_g6",
    "containment_holds",
    "formula_matches",
    "diagnostics",
    "runtime_ms",
)

_DOT_COLOURS = ("lightblue", "lightpink", "palegreen", "khaki", "plum", "lightsalmon", "lightgrey", "aquamarine")


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise Graph6Error("negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error("order too large for graph6")


def encode_graph6(g: Graph) -> str:
    """Standard graph6 text (no header, no newline)."""
    out = bytearray(_encode_n(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def decode_graph6(s: str | bytes) -> Graph:
    if isinstance(s, bytes):
        try:
            s = s.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("non-ASCII byte in graph6 data") from exc
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII character in graph6 data") from exc
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} at position {pos} is outside the graph6 range")
    if not data:
        raise Graph6Error("empty graph6 string")
    vals = [b - 63 for b in data]
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated order field")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated order field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    nbits = n * (n - 1) // 2
    if len(body) != math.ceil(nbits / 6):
        raise Graph6Error(f"length mismatch: {len(body)} data bytes for n={n}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("non-zero padding bits")
    return Graph(n, tuple(adj))


def emit_dot(g: Graph, labeling: "PartitionLabeling | None" = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    if labeling is not None:
        lines.append("  node [style=filled];")
    for v in range(g.n):
        if labeling is None:
            lines.append(f"  {v};")
        else:
            colour = _DOT_COLOURS[labeling.assignment[v] % len(_DOT_COLOURS)]
            lines.append(f'  {v} [fillcolor="{colour}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def round_reals(obj: Any, digits: int = 12) -> Any:
    """Round every float in a JSON-like structure to ``digits`` significant digits."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, float):
        if math.isfinite(obj):
            return float(f"{obj:.{digits}g}")
        return obj
    if isinstance(obj, dict):
        return {k: round_reals(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_reals(v, digits) for v in obj]
    return obj


def report_to_dict(report: "VerificationReport") -> dict:
    d = {
        "n": report.n,
        "p": report.spec.p,
        "ks": list(report.spec.ks),
        "ex_brute": report.ex_brute,
        "ex_formula": report.ex_formula_value,
        "extremal_g6": [encode_graph6(g) for g in report.extremal_graphs],
        "rho_max": report.rho_max,
        "exsp_g6": [encode_graph6(g) for g in report.spectral_extremal_graphs],
        "containment_holds": report.containment_holds,
        "formula_matches": report.formula_matches,
        "diagnostics": dict(report.diagnostics),
        "runtime_ms": report.runtime_ms,
    }
    return round_reals(d)


def emit_report(report: "VerificationReport", indent: int | None = 2) -> str:
    return json.dumps(report_to_dict(report), indent=indent)
