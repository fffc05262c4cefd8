"""Command-line driver.

Exit codes: 0 success, 1 usage error, 2 budget exceeded, 3 internal
verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import _kernels
from .combinatorics import PartitionLabeling
from .constructions import (
    StarForestSpec,
    chvatal_hanson_graph,
    edge_blowup,
    extremal_family_member,
    family_layout,
    star,
    star_forest,
    turan,
)
from .errors import BudgetExceededError, ConvergenceError, Graph6Error, VerificationError
from .freeness import check_witness, find_blowup_star_forest
from .report_io import decode_graph6, emit_dot, emit_report, encode_graph6, round_reals
from .search import (
    SearchConfig,
    hill_climb,
    spectral_extremal_bruteforce,
    turan_number_bruteforce,
    verify_theorem,
)
from .spectral import DEFAULT_TIE_TOL, DEFAULT_TOL, quotient_rho, spectral_radius

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_VERIFY = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _add_spec_args(p: argparse.ArgumentParser, with_n: bool = True) -> None:
    if with_n:
        p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True, help="clique order is p+1")
    p.add_argument("--ks", type=_int_list, required=True, help="star sizes, e.g. 2,1")


def _add_search_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-n", type=int, default=9, help="search.max_n")
    p.add_argument("--shard-bits", type=int, default=0, help="search.shard_bits")
    p.add_argument("--workers", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="blowuplab", description=__doc__.splitlines()[0])
    parser.add_argument("--backend", choices=["auto", "cython", "python"], default="auto")
    parser.add_argument("--tol", type=float, default=DEFAULT_TOL, help="spectral.tol")
    parser.add_argument("--tie-tol", type=float, default=DEFAULT_TIE_TOL, help="spectral.tie_tol / search.tie_tol")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build a named graph")
    csub = c.add_subparsers(dest="family", required=True, parser_class=_Parser)
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=["g6", "dot"], default="g6")
    s = csub.add_parser("star", parents=[fmt])
    s.add_argument("--k", type=int, required=True)
    s = csub.add_parser("star-forest", parents=[fmt])
    s.add_argument("--ks", type=_int_list, required=True)
    s = csub.add_parser("turan", parents=[fmt])
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s = csub.add_parser("blowup", parents=[fmt], help="edge blow-up of a graph6 graph or of a star forest")
    s.add_argument("g6", nargs="?")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--ks", type=_int_list)
    s = csub.add_parser("chvatal-hanson", parents=[fmt])
    s.add_argument("--nu", type=int, required=True)
    s.add_argument("--delta", type=int, required=True)
    s = csub.add_parser("extremal", parents=[fmt])
    _add_spec_args(s)

    s = sub.add_parser("rho", help="spectral radius of a graph6 graph")
    s.add_argument("g6")
    s.add_argument("--verbose", action="store_true")

    s = sub.add_parser("quotient-rho", help="spectral radius of K_{q-1} join K_p(parts)")
    s.add_argument("--q", type=int, required=True, help="number of stars q; the join clique has q-1 vertices")
    s.add_argument("--parts", type=_int_list, required=True)

    s = sub.add_parser("check-free", help="search a graph6 graph for the pattern")
    s.add_argument("g6")
    _add_spec_args(s, with_n=False)

    for name in ("turan-number", "spectral-extremal"):
        s = sub.add_parser(name)
        _add_spec_args(s)
        _add_search_args(s)

    s = sub.add_parser("verify", help="brute-force Ex and Ex_sp and compare")
    _add_spec_args(s)
    _add_search_args(s)
    s.add_argument("--json", metavar="OUT", help="write the JSON report to OUT ('-' for stdout)")

    s = sub.add_parser("hillclimb", help="local search for large spectral radius")
    _add_spec_args(s)
    s.add_argument("--steps", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    return parser


def _spec(args) -> StarForestSpec:
    return StarForestSpec(args.p, tuple(args.ks))


def _config(args) -> SearchConfig:
    return SearchConfig(
        max_n=args.max_n,
        shard_bits=args.shard_bits,
        workers=args.workers,
        tie_tol=args.tie_tol,
        tol=args.tol,
    )


def _emit_graph(g, fmt: str, labeling: PartitionLabeling | None = None) -> str:
    return emit_dot(g, labeling) if fmt == "dot" else encode_graph6(g) + "\n"


def _construct(args) -> str:
    labeling = None
    fam = args.family
    if fam == "star":
        g = star(args.k)
    elif fam == "star-forest":
        g = star_forest(args.ks)
    elif fam == "turan":
        g = turan(args.r, args.n)
        labeling = PartitionLabeling.from_classes(g.n, _turan_classes(args.r, args.n))
    elif fam == "blowup":
        if (args.g6 is None) == (args.ks is None):
            raise _UsageError("blowup needs exactly one of a graph6 argument or --ks")
        base = decode_graph6(args.g6) if args.g6 is not None else star_forest(args.ks)
        g = edge_blowup(base, args.p)
    elif fam == "chvatal-hanson":
        g = chvatal_hanson_graph(args.nu, args.delta)
    else:
        spec = _spec(args)
        g = extremal_family_member(args.n, spec)
        layout = family_layout(args.n, spec)
        labeling = PartitionLabeling.from_classes(g.n, [list(layout.clique)] + [list(c) for c in layout.classes]) if layout.clique else PartitionLabeling.from_classes(g.n, layout.classes)
    return _emit_graph(g, args.format, labeling)


def _turan_classes(r: int, n: int) -> list[list[int]]:
    from .combinatorics import turan_part_sizes

    out, start = [], 0
    for s in turan_part_sizes(r, n):
        out.append(list(range(start, start + s)))
        start += s
    return out


def _run(args, out) -> int:
    cmd = args.command
    if cmd == "construct":
        out.write(_construct(args))
    elif cmd == "rho":
        res = spectral_radius(decode_graph6(args.g6), args.tol)
        if not res.converged:
            raise ConvergenceError("power iteration hit the iteration cap")
        if args.verbose:
            out.write(json.dumps(round_reals({
                "rho": res.rho,
                "residual": res.residual,
                "certified_lower": res.certified_lower,
                "iterations": res.iterations,
            }), indent=2) + "\n")
        else:
            out.write(f"{res.rho:.12g}\n")
    elif cmd == "quotient-rho":
        if args.q < 1:
            raise _UsageError("--q must be >= 1")
        out.write(f"{quotient_rho(args.q - 1, args.parts, args.tol):.12g}\n")
    elif cmd == "check-free":
        g = decode_graph6(args.g6)
        spec = _spec(args)
        w = find_blowup_star_forest(g, spec)
        if w is not None and check_witness(g, spec, w):
            raise VerificationError("search returned an invalid witness")
        payload = {"free": w is None, "witness": None if w is None else w.to_dict()}
        out.write(json.dumps(payload) + "\n")
    elif cmd == "turan-number":
        ex, graphs = turan_number_bruteforce(args.n, _spec(args), _config(args))
        out.write(json.dumps({"ex": ex, "extremal_g6": [encode_graph6(g) for g in graphs]}) + "\n")
    elif cmd == "spectral-extremal":
        rho, graphs = spectral_extremal_bruteforce(args.n, _spec(args), _config(args))
        out.write(json.dumps(round_reals({"rho_max": rho, "exsp_g6": [encode_graph6(g) for g in graphs]})) + "\n")
    elif cmd == "verify":
        report = verify_theorem(args.n, _spec(args), _config(args))
        text = emit_report(report)
        if args.json == "-":
            out.write(text + "\n")
        else:
            if args.json:
                with open(args.json, "w") as fh:
                    fh.write(text + "\n")
            out.write(
                f"n={report.n} {report.spec}: ex_brute={report.ex_brute} ex_formula={report.ex_formula_value} "
                f"formula_matches={report.formula_matches}\n"
                f"rho_max={report.rho_max:.12g} |Ex|={len(report.extremal_graphs)} "
                f"|Ex_sp|={len(report.spectral_extremal_graphs)} containment_holds={report.containment_holds}\n"
            )
    elif cmd == "hillclimb":
        g, rho = hill_climb(args.n, _spec(args), args.steps, args.seed, args.tie_tol, args.tol)
        out.write(json.dumps(round_reals({"g6": encode_graph6(g), "edges": g.num_edges, "rho": rho})) + "\n")
    return EXIT_OK


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    if args.backend != "auto":
        try:
            _kernels.use_backend(args.backend)
        except RuntimeError as exc:
            err.write(f"error: {exc}\n")
            return EXIT_USAGE
    try:
        return _run(args, out)
    except _UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except BudgetExceededError as exc:
        err.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (VerificationError, ConvergenceError) as exc:
        err.write(f"verification failure: {exc}\n")
        return EXIT_VERIFY
    except (Graph6Error, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
