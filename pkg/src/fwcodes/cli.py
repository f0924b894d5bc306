"""Command-line interface: construct codes, verify claims, run sweeps.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
Reports are deterministic (sorted keys, no timestamps); per-phase timing
is opt-in via --timing because it would break byte-reproducibility.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import __version__, analysis, codes, sweep
from .defsets import FAMILIES
from .gf import build_tower

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

EXACT_MINIMALITY_CAP = 1 << 12
GRAPH_CAP = 1 << 14


def _family_arg(args) -> str:
    family = args.family
    if args.tilde and not family.endswith("_tilde"):
        family = family + "_tilde"
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    return family


def _timed(report, phases, name, fn):
    t0 = time.perf_counter()
    result = fn()
    phases[name] = round(time.perf_counter() - t0, 6)
    return result


def _all_matches_ok(obj) -> bool:
    """Recursively require every *match/ok/pass flag in the report to be true."""
    if isinstance(obj, dict):
        for key, val in obj.items():
            if (key.endswith(("match", "_ok", "pass", "equal")) or key == "projective") \
                    and val is False:
                return False
            if not _all_matches_ok(val):
                return False
    elif isinstance(obj, (list, tuple)):
        return all(_all_matches_ok(v) for v in obj)
    return True


def _code_report(args, with_naive: bool) -> dict:
    family = _family_arg(args)
    phases: dict[str, float] = {}
    report: dict = {
        "schema_version": 1,
        "tool_version": __version__,
        "config": {"command": args.command, "p": args.p, "s": args.s,
                   "m1": args.m1, "m2": args.m2, "family": family,
                   "format": args.format},
    }
    tower = _timed(report, phases, "tower",
                   lambda: build_tower(args.p, args.s, args.m1, args.m2))
    spec = codes.build_code(tower, family)
    wd = _timed(report, phases, "enumeration",
                lambda: codes.weight_distribution_enumerated(spec, mode="fast"))
    wf = _timed(report, phases, "formula",
                lambda: codes.weight_distribution_formula(
                    family, args.p, args.s, args.m1, args.m2))
    report["code"] = {
        "family": family, "n": spec.n, "k": spec.k, "d": wd.d, "q": spec.q,
        "field_q": tower.ctx_q.descriptor(),
        "field_m1": tower.ctx1.descriptor(),
        "field_m2": tower.ctx2.descriptor(),
        "S_logs": spec.S.log_indices(tower),
        "D_logs": spec.D.log_indices(tower),
    }
    report["weight_distribution"] = {
        "enumerated": {str(w): a for w, a in wd.entries},
        "formula": {str(w): a for w, a in wf.entries},
        "match": wd.entries == wf.entries and wd.n == wf.n,
    }
    if with_naive:
        size = spec.q ** spec.k
        if size <= codes.enumeration_cap("naive"):
            wn = _timed(report, phases, "naive",
                        lambda: codes.weight_distribution_enumerated(spec, mode="naive"))
            report["weight_distribution"]["naive_match"] = wn.entries == wd.entries

    M = _timed(report, phases, "generator", lambda: codes.generator_matrix(spec))
    report["projective"] = analysis.projectivity_check(tower.ctx_q, M)
    report["rank_ok"] = codes.matrix_rank(tower.ctx_q, M, stop_at=spec.k) == spec.k
    g = analysis.classify_griesmer(wd)
    report["griesmer"] = {
        "bound": g.bound, "category": g.category,
        "distance_optimal_proved": g.distance_optimal_proved,
    }
    minimality: dict = {"ab": analysis.ab_minimality(wd, spec.q)}
    if spec.q ** spec.k <= EXACT_MINIMALITY_CAP:
        minimality["exact"] = analysis.exact_minimality(spec)
        minimality["agreement_ok"] = (not minimality["ab"]) or minimality["exact"]
    report["minimality"] = minimality
    if wd.num_weights == 2 and spec.q ** spec.k <= GRAPH_CAP:
        report["srg"] = _srg_block(spec, wd, args, phases)
    if getattr(args, "timing", False):
        report["timing"] = phases
    return report


def _srg_block(spec, wd, args, phases) -> dict:
    predicted = analysis.srg_params_from_code(wd)
    graph = _timed({}, phases, "graph", lambda: analysis.build_srg_graph(spec))
    measured = analysis.srg_verify(graph)
    block = {
        "predicted": {"N": predicted.N, "K": predicted.K,
                      "lambda": predicted.lam, "mu": predicted.mu},
        "feasibility_ok": predicted.feasible,
    }
    if measured is None:
        block["measured"] = None
        block["match"] = False
    else:
        block["measured"] = {"N": measured.N, "K": measured.K,
                             "lambda": measured.lam, "mu": measured.mu}
        block["match"] = measured == predicted
    edges_path = getattr(args, "edges", None)
    if edges_path:
        with open(edges_path, "w") as fh:
            for u, v in graph.edges():
                fh.write(f"{u} {v}\n")
        block["edges_file"] = edges_path
    return block


def cmd_construct(args) -> tuple[dict, int]:
    report = _code_report(args, with_naive=False)
    return report, EXIT_OK if _all_matches_ok(report) else EXIT_MISMATCH


def cmd_verify(args) -> tuple[dict, int]:
    report = _code_report(args, with_naive=True)
    return report, EXIT_OK if _all_matches_ok(report) else EXIT_MISMATCH


def cmd_lemmas(args) -> tuple[dict, int]:
    report = {
        "schema_version": 1,
        "tool_version": __version__,
        "config": {"command": "lemmas", "p": args.p, "s": args.s, "m": args.m},
        "lemmas": sweep.lemma_report(args.p, args.s, args.m),
    }
    ok = report["lemmas"]["all_pass"]
    return report, EXIT_OK if ok else EXIT_MISMATCH


def cmd_srg(args) -> tuple[dict, int]:
    family = _family_arg(args)
    tower = build_tower(args.p, args.s, args.m1, args.m2)
    spec = codes.build_code(tower, family)
    wd = codes.weight_distribution_enumerated(spec, mode="fast")
    if wd.num_weights != 2:
        raise ValueError(f"{family} at these parameters has {wd.num_weights} "
                         "weights; the graph construction needs exactly two")
    phases: dict[str, float] = {}
    report = {
        "schema_version": 1,
        "tool_version": __version__,
        "config": {"command": "srg", "p": args.p, "s": args.s,
                   "m1": args.m1, "m2": args.m2, "family": family},
        "code": {"family": family, "n": spec.n, "k": spec.k, "d": wd.d,
                 "q": spec.q, "weights": [w for w, _ in wd.entries]},
        "srg": _srg_block(spec, wd, args, phases),
    }
    if args.timing:
        report["timing"] = phases
    return report, EXIT_OK if _all_matches_ok(report) else EXIT_MISMATCH


def cmd_sweep(args) -> tuple[dict, int]:
    result = sweep.run_sweep(max_size=args.max_size)
    report = {
        "schema_version": 1,
        "tool_version": __version__,
        "config": {"command": "sweep", "max_size": args.max_size},
        "sweep": result,
    }
    return report, EXIT_OK if result["all_pass"] else EXIT_MISMATCH


def _emit(report: dict, args) -> None:
    fmt = getattr(args, "format", "json")
    if fmt == "json":
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        wd = report.get("weight_distribution")
        if wd is None:
            raise ValueError("csv format applies only to construct/verify reports")
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["weight", "frequency"])
        for w in sorted(wd["enumerated"], key=int):
            writer.writerow([w, wd["enumerated"][w]])
        text = buf.getvalue()
    else:
        text = _render_text(report)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_text(report: dict) -> str:
    lines = [f"fwcodes {report['tool_version']}"]
    if "code" in report:
        c = report["code"]
        d = f", d={c['d']}" if "d" in c else ""
        lines.append(f"code {c.get('family', '')}: [n={c['n']}, k={c['k']}{d}] "
                     f"over F_{c.get('q', '?')}")
    if "weight_distribution" in report:
        wd = report["weight_distribution"]
        lines.append("weights: " + ", ".join(
            f"{w}:{a}" for w, a in sorted(wd["enumerated"].items(), key=lambda kv: int(kv[0]))))
        lines.append(f"formula match: {wd['match']}")
        if "naive_match" in wd:
            lines.append(f"naive match: {wd['naive_match']}")
    if "projective" in report:
        lines.append(f"projective: {report['projective']}  rank ok: {report['rank_ok']}")
    if "griesmer" in report:
        g = report["griesmer"]
        lines.append(f"griesmer: {g['category']} (bound {g['bound']}, "
                     f"distance-optimal proved: {g['distance_optimal_proved']})")
    if "minimality" in report:
        m = report["minimality"]
        extra = f", exact={m['exact']}" if "exact" in m else ""
        lines.append(f"minimality: ab={m['ab']}{extra}")
    if "srg" in report:
        s = report["srg"]
        lines.append(f"srg predicted: {s['predicted']}  measured: {s['measured']}  "
                     f"match: {s['match']}")
    if "lemmas" in report:
        for e in report["lemmas"]["entries"]:
            lines.append(f"lemma {e['lemma_id']}: {'ok' if e['equal'] else 'MISMATCH'}")
        lines.append(f"all lemmas pass: {report['lemmas']['all_pass']}")
    if "sweep" in report:
        s = report["sweep"]
        lines.append(f"sweep: {s['num_points']} points, "
                     f"{s['num_failures']} failures, all pass: {s['all_pass']}")
        for pt in s["points"]:
            if not pt["pass"]:
                lines.append(f"  FAIL p={pt['p']} s={pt['s']} m1={pt['m1']} "
                             f"m2={pt['m2']} {pt['family']}: {pt['checks']}")
    return "\n".join(lines) + "\n"


def _add_code_args(sub, m_args: bool = True):
    sub.add_argument("--p", type=int, required=True, help="characteristic (prime)")
    sub.add_argument("--s", type=int, default=1, help="base field is F_{p^s}")
    if m_args:
        sub.add_argument("--m1", type=int, required=True)
        sub.add_argument("--m2", type=int, required=True)
        sub.add_argument("--family", required=True,
                         help="D1, D2, D3, or their _tilde variants")
        sub.add_argument("--tilde", action="store_true",
                         help="use the zero-augmented variant of --family")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fwcodes",
        description="Exact workbench for projective few-weight trace codes")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    for name, helptext in [("construct", "build a code and report all claims"),
                           ("verify", "construct plus the naive cross-check")]:
        sub = subs.add_parser(name, help=helptext)
        _add_code_args(sub)
        sub.add_argument("--format", choices=["json", "csv", "text"], default="text")
        sub.add_argument("--out", help="write the report to a file")
        sub.add_argument("--edges", help="write SRG edge list (u v per line)")
        sub.add_argument("--timing", action="store_true",
                         help="include per-phase timing (breaks byte-determinism)")
        sub.set_defaults(func=cmd_construct if name == "construct" else cmd_verify)

    sub = subs.add_parser("lemmas", help="verify the character-sum lemmas")
    _add_code_args(sub, m_args=False)
    sub.add_argument("--m", type=int, required=True, help="extension degree over F_q")
    sub.add_argument("--format", choices=["json", "text"], default="text")
    sub.add_argument("--out")
    sub.set_defaults(func=cmd_lemmas)

    sub = subs.add_parser("srg", help="build and verify the coset Cayley graph")
    _add_code_args(sub)
    sub.add_argument("--edges", help="write the edge list (u v per line)")
    sub.add_argument("--format", choices=["json", "text"], default="text")
    sub.add_argument("--out")
    sub.add_argument("--timing", action="store_true")
    sub.set_defaults(func=cmd_srg)

    sub = subs.add_parser("sweep", help="verify every grid point")
    sub.add_argument("--max-size", type=int, default=sweep.DEFAULT_MAX_SIZE,
                     help="cap on q^(m1+m2)")
    sub.add_argument("--format", choices=["json", "text"], default="text")
    sub.add_argument("--out")
    sub.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, status = args.func(args)
        _emit(report, args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return status


if __name__ == "__main__":
    sys.exit(main())
