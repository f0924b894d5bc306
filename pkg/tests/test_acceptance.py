"""Acceptance suite: one test per top-level claim, one PASS/FAIL line each.

The heavy artifacts (the full parameter-grid verification) are computed once
per session and shared across criteria.
"""

import sys

import numpy as np
import pytest

from fwcodes import analysis, charsum, codes, sweep
from fwcodes.codes import build_code, weight_distribution_enumerated
from fwcodes.gf import build_field, build_tower, is_prime


def _verdict(num: int, name: str, ok: bool, detail: str = "") -> bool:
    line = f"ACCEPTANCE {num} [{name}]: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line, file=sys.stderr)
    return ok


@pytest.fixture(scope="session")
def grid_reports():
    return [sweep.verify_point(*pt) for pt in sweep.grid_points()]


def test_criterion_1_table_reproduction(grid_reports):
    bad = [r for r in grid_reports
           if not (r["checks"]["formula_match"] and r["checks"]["length_match"])]
    ok = not bad and len(grid_reports) > 300
    assert _verdict(1, "table reproduction", ok,
                    f"{len(grid_reports)} grid points, {len(bad)} mismatches"), bad[:5]


def _odd_prime_powers(limit):
    out = []
    for p in range(3, limit + 1, 2):
        if not is_prime(p):
            continue
        e, v = 1, p
        while v <= limit:
            out.append((p, e, v))
            e += 1
            v *= p
    return out


def _legendre_gauss_raw(p: int) -> np.ndarray:
    """Coefficient vector of the prime-field quadratic Gauss sum, directly."""
    raw = np.full(p, -1, dtype=np.int64)
    raw[0] = 0
    i = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    raw[(i * i) % p] = 1
    return raw


def test_criterion_2_lemma_suite():
    failures = []

    # Gauss-sum closed form vs brute force, every odd prime power <= 1e5.
    # Extensions: exact comparison in the cyclotomic ring.
    for p, e, v in _odd_prime_powers(100_000):
        if e == 1:
            continue
        brute = charsum.gauss_sum_bruteforce(build_field(p, e))
        formula = charsum.gauss_formula_to_cyclotomic(
            charsum.gauss_sum_formula(p, 1, e))
        if brute != formula:
            failures.append(("gauss_ext", p, e))
        if e % 2 == 0:  # the closed form must not depend on the (s, m) split
            split = charsum.gauss_formula_to_cyclotomic(
                charsum.gauss_sum_formula(p, 2, e // 2))
            if split != formula:
                failures.append(("gauss_split", p, e))
    # Prime fields: the ring expression of sqrt(p) IS the brute-force sum, so
    # the closed form's unit i^u is checked against the brute sum through a
    # numeric embedding with error far below the gap to the wrong answer.
    for p, e, v in _odd_prime_powers(100_000):
        if e != 1:
            continue
        raw = _legendre_gauss_raw(p)
        z = np.sum(raw * np.exp(2j * np.pi * np.arange(p) / p))
        u = charsum.gauss_sum_formula(p, 1, 1).i_power
        expected = (1j ** u) * np.sqrt(p)
        if abs(z - expected) > 1e-6 * np.sqrt(p):
            failures.append(("gauss_prime", p))
    # library pipeline ring-equality for a sample of prime fields
    for p, e, v in _odd_prime_powers(2000):
        if e == 1:
            brute = charsum.gauss_sum_bruteforce(build_field(p, 1))
            formula = charsum.gauss_formula_to_cyclotomic(
                charsum.gauss_sum_formula(p, 1, 1))
            if brute != formula:
                failures.append(("gauss_prime_ring", p))

    # quadratic completion closed form, exhaustive in F_3, F_9, F_5
    for p, n in [(3, 1), (3, 2), (5, 1)]:
        ctx = build_field(p, n)
        for a2 in range(1, ctx.order):
            for a1 in range(ctx.order):
                for a0 in range(ctx.order):
                    if (charsum.quadratic_completion_sum(ctx, a2, a1, a0)
                            != charsum.quadratic_completion_closed_form(ctx, a2, a1, a0)):
                        failures.append(("quadratic", p, n, a2, a1, a0))

    # T(D, b) values and trace-of-square counts, all fields of order <= 3^6
    for p, e, v in [(p, e, v) for p, e, v in _odd_prime_powers(729)] + \
                   [(2, e, 2 ** e) for e in range(1, 10)]:
        for s in (1, 2):
            if e % s:
                continue
            m = e // s
            rep = sweep.lemma_report(p, s, m)
            for entry in rep["entries"]:
                if not entry["equal"]:
                    failures.append((entry["lemma_id"], p, s, m))

    assert _verdict(2, "lemma suite", not failures,
                    f"{len(failures)} failures"), failures[:10]


def test_criterion_3_projectivity(grid_reports):
    bad = [r for r in grid_reports if not r["checks"]["projective"]]
    tw = build_tower(3, 1, 2, 2)
    M = codes.generator_matrix(build_code(tw, "D1"))
    zeroed = M.copy()
    zeroed[:, 0] = 0
    controls_ok = (not analysis.projectivity_check(tw.ctx_q, zeroed)
                   and not analysis.projectivity_check(
                       tw.ctx_q, np.hstack([M, M[:, :1]])))
    ok = not bad and controls_ok
    assert _verdict(3, "projectivity", ok,
                    f"{len(bad)} non-projective grid codes, "
                    f"negative controls {'ok' if controls_ok else 'BROKEN'}"), bad[:5]


def test_criterion_4_griesmer(grid_reports):
    failures = []
    anchor_seen = False
    for r in grid_reports:
        if r["family"] not in ("D1", "D1_tilde", "D2"):
            continue
        wd = codes.weight_distribution_formula(
            r["family"], r["p"], r["s"], r["m1"], r["m2"])
        g = analysis.classify_griesmer(wd)
        if r["family"] == "D1_tilde":
            if g.category != "griesmer":
                failures.append((r["family"], r["p"], r["s"], r["m1"], r["m2"],
                                 g.category))
        elif r["family"] == "D1":
            if r["q"] == 2 and r["m1"] == r["m2"]:
                if not (g.category == "near_griesmer" and g.distance_optimal_proved):
                    failures.append(("D1-anchor", r["p"], r["s"], r["m1"], r["m2"]))
            elif g.category != "griesmer":
                failures.append((r["family"], r["p"], r["s"], r["m1"], r["m2"],
                                 g.category))
        elif r["m2"] == 2:
            if not (g.category == "near_griesmer" and g.distance_optimal_proved):
                failures.append((r["family"], r["p"], r["s"], r["m1"], r["m2"]))
        if (r["family"], r["q"], r["m1"], r["m2"]) == ("D1", 2, 2, 2):
            anchor_seen = True
            if not (wd.n == 9 and wd.k == 4 and wd.d == 4 and g.bound == 8
                    and analysis.griesmer_sum(4, 5, 2) == 11):
                failures.append(("941-anchor",))
    ok = not failures and anchor_seen
    assert _verdict(4, "Griesmer claims", ok,
                    f"{len(failures)} failures"), failures[:5]


def test_criterion_5_srg():
    cases = [("D1", 2, 2, 2, (16, 9, 4, 6)),
             ("D1", 3, 2, 2, (81, 64, 49, 56)),
             ("D1_tilde", 2, 2, 2, None),
             ("D1_tilde", 2, 2, 3, None),
             ("D1_tilde", 3, 2, 2, None)]
    failures = []
    for family, p, m1, m2, anchor in cases:
        tw = build_tower(p, 1, m1, m2)
        spec = build_code(tw, family)
        wd = weight_distribution_enumerated(spec)
        predicted = analysis.srg_params_from_code(wd)
        measured = analysis.srg_verify(analysis.build_srg_graph(spec))
        if measured != predicted or not predicted.feasible:
            failures.append((family, p, m1, m2, predicted, measured))
        elif anchor is not None and \
                (measured.N, measured.K, measured.lam, measured.mu) != anchor:
            failures.append((family, p, m1, m2, "anchor", measured))
    assert _verdict(5, "SRG reproduction", not failures,
                    f"{len(cases)} graphs checked"), failures


def test_criterion_6_minimality(grid_reports):
    failures = []
    # the m2 = 8 minimality claim for the trace-of-square families
    for family in ("D3", "D3_tilde"):
        tw = build_tower(3, 1, 2, 8)
        wd = weight_distribution_enumerated(build_code(tw, family))
        if not analysis.ab_minimality(wd, 3):
            failures.append((family, "m2=8 AB violated", wd.w_min, wd.w_max))
    # exhaustive-vs-sufficient agreement on every small grid code
    checked = 0
    for r in grid_reports:
        if r["q"] ** r["k"] > 1 << 12:
            continue
        tw = build_tower(r["p"], r["s"], r["m1"], r["m2"])
        spec = build_code(tw, r["family"])
        wd = weight_distribution_enumerated(spec)
        if analysis.ab_minimality(wd, r["q"]):
            checked += 1
            if not analysis.exact_minimality(spec):
                failures.append((r["family"], r["p"], r["s"], r["m1"], r["m2"],
                                 "AB true but a support is covered"))
    ok = not failures and checked > 0
    assert _verdict(6, "minimality", ok,
                    f"{checked} AB-positive small codes verified exhaustively"), \
        failures[:5]


def test_criterion_7_structural_invariants(grid_reports):
    failures = []
    alpha_checked = 0
    for r in grid_reports:
        c = r["checks"]
        for key in ("frequency_total", "first_moment", "generator_rank"):
            if not c[key]:
                failures.append((key, r["family"], r["p"], r["s"], r["m1"], r["m2"]))
        if c["alpha_invariance"] is True:
            alpha_checked += 1
        elif c["alpha_invariance"] is False:
            failures.append(("alpha", r["family"], r["p"], r["s"], r["m1"], r["m2"]))
    ok = not failures and alpha_checked > 50
    assert _verdict(7, "structural invariants", ok,
                    f"alpha-independence verified on {alpha_checked} small codes"), \
        failures[:5]
