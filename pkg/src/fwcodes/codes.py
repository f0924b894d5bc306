"""Trace codes indexed by S x D, their weight distributions, and generator matrices.

Two independent routes to every weight distribution:

* enumeration -- ``fast`` aggregates the per-codeword weight formula driven
  by the rational character sum over D (one evaluation per b); ``naive``
  counts zero coordinates directly from the trace values.
* the closed-form tables, evaluated exactly (Gauss-sum terms included).

Both must agree as exact multisets; tests and the sweep enforce this.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .charsum import gauss_rational, set_char_sum
from .defsets import FAMILIES, DefiningSet, build_D, build_S
from .gf import FieldCtx, TowerCtx

FAST_CAP_DEFAULT = 1 << 24
NAIVE_CAP_DEFAULT = 1 << 20


def enumeration_cap(mode: str) -> int:
    env = os.environ.get("FWCODES_MAX_ENUM")
    if env is not None:
        return int(env)
    return FAST_CAP_DEFAULT if mode == "fast" else NAIVE_CAP_DEFAULT


@dataclass(frozen=True)
class WeightDistribution:
    """Nonzero-weight multiset {(w, A_w)} of a code, plus its parameters."""

    n: int
    k: int
    q: int
    entries: tuple[tuple[int, int], ...]  # sorted by weight, all A_w > 0

    @classmethod
    def from_counts(cls, n, k, q, counts) -> "WeightDistribution":
        entries = tuple(sorted((int(w), int(a)) for w, a in counts.items() if a))
        for w, a in entries:
            if a < 0 or w < 0 or w > n:
                raise ValueError(f"invalid weight-distribution entry ({w}, {a})")
        return cls(n=n, k=k, q=q, entries=entries)

    @property
    def d(self) -> int:
        return self.entries[0][0]

    @property
    def w_min(self) -> int:
        return self.entries[0][0]

    @property
    def w_max(self) -> int:
        return self.entries[-1][0]

    @property
    def total_codewords(self) -> int:
        return 1 + sum(a for _, a in self.entries)

    @property
    def first_moment(self) -> int:
        return sum(w * a for w, a in self.entries)

    @property
    def num_weights(self) -> int:
        return len(self.entries)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


@dataclass(frozen=True)
class CodeSpec:
    tower: TowerCtx
    S: DefiningSet
    D: DefiningSet
    family: str
    n: int
    k: int
    _s_arr: np.ndarray = field(repr=False, compare=False, default=None)
    _d_arr: np.ndarray = field(repr=False, compare=False, default=None)

    @property
    def q(self) -> int:
        return self.tower.q


def build_code(tower: TowerCtx, family: str, alpha_log: int = 1) -> CodeSpec:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    S = build_S(tower, alpha_log=alpha_log)
    D = build_D(tower, family)
    n = len(S) * len(D)
    return CodeSpec(tower=tower, S=S, D=D, family=family, n=n,
                    k=tower.m1 + tower.m2,
                    _s_arr=np.array(S.elements, dtype=np.int64),
                    _d_arr=np.array(D.elements, dtype=np.int64))


@lru_cache(maxsize=16)
def _q_tables(ctx_q: FieldCtx):
    """Dense mul/add/neg/inv tables for the small base field."""
    q = ctx_q.order
    mul = np.zeros((q, q), dtype=np.int64)
    add = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(q):
            mul[a, b] = ctx_q.mul(a, b)
            add[a, b] = ctx_q.add(a, b)
    neg = np.array([ctx_q.neg(a) for a in range(q)], dtype=np.int64)
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = ctx_q.inv(a)
    return mul, add, neg, inv


def codeword(spec: CodeSpec, a: int, b: int) -> np.ndarray:
    """Coordinates (Tr(ax) + Tr(by)) over S x D, x-major order, as F_q elements."""
    tw = spec.tower
    tr_a = tw.tr1_q[tw.ctx1.mul_by_vec(a, spec._s_arr)]
    tr_b = tw.tr2_q[tw.ctx2.mul_by_vec(b, spec._d_arr)]
    _, add, _, _ = _q_tables(tw.ctx_q)
    return add[np.repeat(tr_a, len(tr_b)), np.tile(tr_b, len(tr_a))]


def weight_of(spec: CodeSpec, a: int, b: int) -> int:
    """Hamming weight via the zero-pattern case formula and the D character sum."""
    tw = spec.tower
    q, m1 = tw.q, tw.m1
    dsize = len(spec.D)
    if a == 0 and b == 0:
        return 0
    if b == 0:
        return q ** (m1 - 1) * dsize
    t = set_char_sum(tw, spec.D, b)
    if a == 0:
        num = (q ** m1 - 1) * (dsize - t)
    else:
        num = (q ** m1 - 1) * dsize + t
    if num % q:
        raise AssertionError("non-exact division in the weight formula")
    return num // q


def _enumerate_fast(spec: CodeSpec) -> Counter:
    tw = spec.tower
    ctx2, q, m1 = tw.ctx2, tw.q, tw.m1
    N2 = ctx2.order
    k1 = q ** m1
    dsize = len(spec.D)
    zero_add = 1 if spec.D.contains_zero else 0
    rep_logs = np.array([int(ctx2.log[y]) for y in spec.D.orbit_reps], dtype=np.int64)
    nreps = len(rep_logs)
    z_ind = (tw.tr2_q == 0)
    counts = Counter()
    counts[0] += 1
    w_b0 = q ** (m1 - 1) * dsize
    counts[w_b0] += k1 - 1
    chunk = max(1, (1 << 21) // max(1, nreps))
    for start in range(0, N2 - 1, chunk):
        logs = np.arange(start, min(start + chunk, N2 - 1), dtype=np.int64)
        vals = ctx2.antilog[(logs[:, None] + rep_logs[None, :]) % (N2 - 1)]
        tz = z_ind[vals].sum(axis=1)
        t = tz * q - nreps + zero_add
        num0 = (k1 - 1) * (dsize - t)
        num1 = (k1 - 1) * dsize + t
        if np.any(num0 % q) or np.any(num1 % q):
            raise AssertionError("non-exact division: invariance or t-sum bug")
        for w, c in zip(*np.unique(num0 // q, return_counts=True)):
            counts[int(w)] += int(c)
        for w, c in zip(*np.unique(num1 // q, return_counts=True)):
            counts[int(w)] += int(c) * (k1 - 1)
    return counts


def _enumerate_naive(spec: CodeSpec) -> Counter:
    """Direct zero-coordinate counting over all (a, b), no character sums."""
    tw = spec.tower
    ctx1, ctx2, ctx_q = tw.ctx1, tw.ctx2, tw.ctx_q
    q = tw.q
    _, _, neg, _ = _q_tables(ctx_q)

    def hist(ctx, tr_tab, elems):
        N = ctx.order
        h = np.zeros((N, q), dtype=np.int64)
        nz = elems[elems != 0]
        logs_e = ctx.log[nz]
        la = np.arange(N - 1, dtype=np.int64)
        vals = ctx.antilog[(la[:, None] + logs_e[None, :]) % (N - 1)]
        tr = tr_tab[vals]
        rows = np.repeat(ctx.antilog[la], len(nz))
        np.add.at(h, (rows, tr.reshape(-1)), 1)
        h[0, 0] += len(nz)
        if len(nz) != len(elems):  # the element 0 contributes a zero coordinate
            h[:, 0] += 1
        return h

    ha = hist(ctx1, tw.tr1_q, spec._s_arr)
    hb = hist(ctx2, tw.tr2_q, spec._d_arr)
    hb_neg = hb[:, neg]
    weights = spec.n - ha @ hb_neg.T  # zero coords where Tr(ax) = -Tr(by)
    ws, cs = np.unique(weights, return_counts=True)
    return Counter({int(w): int(c) for w, c in zip(ws, cs)})


def weight_distribution_enumerated(spec: CodeSpec, mode: str = "fast") -> WeightDistribution:
    if mode not in ("fast", "naive"):
        raise ValueError(f"mode must be 'fast' or 'naive', got {mode!r}")
    size = spec.q ** spec.k
    cap = enumeration_cap(mode)
    if size > cap:
        raise ValueError(f"code size {size} exceeds {mode} enumeration cap {cap}")
    counts = _enumerate_fast(spec) if mode == "fast" else _enumerate_naive(spec)
    if counts.pop(0) != 1:
        raise AssertionError("enumeration produced extra zero-weight words")
    wd = WeightDistribution.from_counts(spec.n, spec.k, spec.q, counts)
    if wd.total_codewords != size:
        raise AssertionError("enumeration lost codewords")
    return wd


# ---------------------------------------------------------------------------
# closed-form tables

def _table_rows(family: str, q: int, m1: int, m2: int, p: int, s: int):
    F = Fraction
    Q1, Q2 = q ** m1, q ** m2
    W = q ** (m1 + m2 - 1)
    if family == "D1":
        return [
            (F(W - q ** (m1 - 1)), F(Q1 - 1)),
            (F(W - q ** (m2 - 1)), F(Q2 - 1)),
            (F(W - q ** (m1 - 1) - q ** (m2 - 1)), F((Q1 - 1) * (Q2 - 1))),
        ]
    if family == "D1_tilde":
        return [
            (F(W), F(Q1 - 1)),
            (F(W - q ** (m2 - 1)), F(Q1 * Q2 - Q1)),
        ]
    if family == "D2":
        w1 = W - W // q
        return [
            (F(w1), F(Q1 - 1)),
            (F(w1 - q ** (m2 - 1) + q ** (m2 - 2)), F(Q1 * Q2 - q * Q1)),
            (F(W - q ** (m2 - 1)), F(q - 1)),
            (F(w1 - q ** (m2 - 1)), F(q * Q1 - Q1 - q + 1)),
        ]
    if family == "D2_tilde":
        w1 = W - W // q
        return [
            (F(w1 + q ** (m1 - 1)), F(Q1 - 1)),
            (F(w1 - q ** (m2 - 1) + q ** (m2 - 2)), F(Q2 - q)),
            (F(W - q ** (m2 - 1)), F(q - 1)),
            (F(w1 - q ** (m2 - 1) + q ** (m2 - 2) + q ** (m1 - 1)),
             F(Q1 * Q2 - q * Q1 - Q2 + q)),
            (F(w1 - q ** (m2 - 1) + q ** (m1 - 1)), F(q * Q1 - Q1 - q + 1)),
        ]
    w0 = F(q ** (m1 + m2 - 2))
    wb = w0 - q ** (m2 - 2)
    if family in ("D3", "D3_tilde") and m2 % 2 == 0:
        G = gauss_rational(p, s, m2)
        g = F(G, q)
        gm = F(q - 1) * G * F(q ** m1, q * q)  # (q-1) q^{m1-2} G
        # frequency of b with nonzero trace-of-square carries -G/q, not +G/q:
        # the two must sum to q^{m2} - 1
        n0 = F(q ** (m2 - 1) - 1) + (q - 1) * g
        nnz = F(q - 1) * (q ** (m2 - 1) - g)
        if family == "D3":
            return [
                (w0 - q ** (m1 - 1) + gm, F(Q1 - 1)),
                (wb, n0),
                (wb + (Q1 - 1) * g, nnz),
                (wb - q ** (m1 - 1) + gm, (Q1 - 1) * n0),
                (wb - q ** (m1 - 1) + ((q - 1) * q ** (m1 - 1) - 1) * g, (Q1 - 1) * nnz),
            ]
        return [
            (w0 + gm, F(Q1 - 1)),
            (wb, n0),
            (wb + (Q1 - 1) * g, nnz),
            (wb + gm, (Q1 - 1) * n0),
            (wb + ((q - 1) * q ** (m1 - 1) - 1) * g, (Q1 - 1) * nnz),
        ]
    if family in ("D3", "D3_tilde"):  # m2 odd
        r = F(q ** ((m2 - 3) // 2))
        R = q ** ((m2 - 1) // 2)
        fplus = F(q - 1, 2) * (q ** (m2 - 1) + R)
        fminus = F(q - 1, 2) * (q ** (m2 - 1) - R)
        if family == "D3":
            return [
                (w0 - q ** (m1 - 1), F(Q1 - 1)),
                (wb, F(q ** (m2 - 1) - 1)),
                (wb - (Q1 - 1) * r, fplus),
                (wb + (Q1 - 1) * r, fminus),
                (wb - q ** (m1 - 1), F((Q1 - 1) * (q ** (m2 - 1) - 1))),
                (wb - q ** (m1 - 1) + r, (Q1 - 1) * fplus),
                (wb - q ** (m1 - 1) - r, (Q1 - 1) * fminus),
            ]
        return [
            (w0, F(Q1 - 1)),
            (wb, F(Q1 * (q ** (m2 - 1) - 1))),
            (wb - (Q1 - 1) * r, fplus),
            (wb + (Q1 - 1) * r, fminus),
            (wb + r, (Q1 - 1) * fplus),
            (wb - r, (Q1 - 1) * fminus),
        ]
    raise ValueError(f"unknown family {family!r}")


def _family_length(family: str, q: int, m1: int, m2: int, p: int, s: int) -> int:
    Q1 = q ** m1
    if family == "D1":
        return (Q1 - 1) * (q ** m2 - 1) // (q - 1)
    if family == "D1_tilde":
        return (Q1 - 1) * q ** m2 // (q - 1)
    if family == "D2":
        return q ** (m1 + m2 - 1) - q ** (m2 - 1)
    if family == "D2_tilde":
        return q ** (m1 + m2 - 1) - q ** (m2 - 1) + (Q1 - 1) // (q - 1)
    base = Fraction(q ** (m2 - 1) - (0 if family.endswith("tilde") else 1), q - 1)
    if m2 % 2 == 0:
        base += Fraction(gauss_rational(p, s, m2), q)
    n = (Q1 - 1) * base
    assert n.denominator == 1
    return int(n)


def _validate_family_params(family: str, p: int, s: int, m2: int):
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family.startswith(("D2", "D3")) and m2 < 2:
        raise ValueError(f"{family} requires m2 >= 2")
    if family.startswith("D3"):
        if p == 2:
            raise ValueError("D3 families require odd q")
        if m2 % 2 == 1 and m2 < 3:
            raise ValueError("D3 with odd m2 requires m2 >= 3")
        if m2 == 2 and gauss_rational(p, s, 2) < 0:
            raise ValueError(f"D3 is empty for q={p ** s}, m2=2 (Gauss sum -q)")


def weight_distribution_formula(family: str, p: int, s: int, m1: int, m2: int) -> WeightDistribution:
    """Exact closed-form weight distribution (equal-weight rows merged,
    zero-frequency rows dropped)."""
    _validate_family_params(family, p, s, m2)
    q = p ** s
    rows = _table_rows(family, q, m1, m2, p, s)
    merged: dict[int, int] = {}
    total = Fraction(0)
    for w, a in rows:
        if w.denominator != 1 or a.denominator != 1:
            raise AssertionError(f"non-integral table entry ({w}, {a}) for {family}")
        w, a = int(w), int(a)
        if a < 0:
            raise AssertionError(f"negative frequency {a} at weight {w}: table bug")
        if a == 0:
            continue
        merged[w] = merged.get(w, 0) + a
        total += a
    n = _family_length(family, q, m1, m2, p, s)
    wd = WeightDistribution.from_counts(n, m1 + m2, q, merged)
    if wd.total_codewords != q ** (m1 + m2):
        raise AssertionError(f"table frequencies sum to {wd.total_codewords - 1}, "
                             f"expected {q ** (m1 + m2) - 1}")
    return wd


# ---------------------------------------------------------------------------
# generator matrix

def generator_matrix(spec: CodeSpec) -> np.ndarray:
    """(m1+m2) x n matrix over F_q whose row space is the code.

    Rows are indexed by the F_q-bases {alpha1^i} of the first extension and
    {alpha2^j} of the second; column (x, y) holds the trace evaluations.
    """
    tw = spec.tower
    m1, m2 = tw.m1, tw.m2
    ns, nd = len(spec.S), len(spec.D)
    M = np.empty((m1 + m2, ns * nd), dtype=np.int64)
    for i in range(m1):
        e = tw.ctx1.pow(tw.ctx1.alpha, i)
        row = tw.tr1_q[tw.ctx1.mul_by_vec(e, spec._s_arr)]
        M[i] = np.repeat(row, nd)
    for j in range(m2):
        e = tw.ctx2.pow(tw.ctx2.alpha, j)
        row = tw.tr2_q[tw.ctx2.mul_by_vec(e, spec._d_arr)]
        M[m1 + j] = np.tile(row, ns)
    return M


def matrix_rank(ctx_q: FieldCtx, M: np.ndarray, stop_at: int | None = None) -> int:
    """Rank of M over F_q, scanning columns with early exit at stop_at."""
    k = M.shape[0]
    stop = stop_at if stop_at is not None else k
    basis: list[tuple[list[int], int]] = []  # (reduced column, pivot index)
    for col_idx in range(M.shape[1]):
        c = [int(v) for v in M[:, col_idx]]
        for vec, piv in basis:
            if c[piv]:
                f = ctx_q.mul(c[piv], ctx_q.inv(vec[piv]))
                c = [ctx_q.sub(ci, ctx_q.mul(f, vi)) for ci, vi in zip(c, vec)]
        piv = next((i for i, v in enumerate(c) if v), None)
        if piv is not None:
            basis.append((c, piv))
            if len(basis) >= stop:
                break
    return len(basis)
