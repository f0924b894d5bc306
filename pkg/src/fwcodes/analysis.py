"""Optimality, projectivity, minimality, and strongly regular graph checks.

Everything here is exact integer arithmetic on top of the code data from
:mod:`fwcodes.codes`; graph verification counts common neighbors
exhaustively rather than trusting the closed-form parameters.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .codes import CodeSpec, WeightDistribution, _q_tables, codeword, generator_matrix
from .gf import FieldCtx


# ---------------------------------------------------------------------------
# Griesmer bound

def griesmer_sum(k: int, d: int, q: int) -> int:
    """sum_{i<k} ceil(d / q^i), the minimum length of a [n,k,d]_q code."""
    if k < 1 or d < 1 or q < 2:
        raise ValueError("griesmer_sum needs k >= 1, d >= 1, q >= 2")
    total = 0
    for i in range(k):
        qi = q ** i
        total += -(-d // qi)
    return total


@dataclass(frozen=True)
class GriesmerClassification:
    n: int
    k: int
    d: int
    q: int
    bound: int                    # griesmer_sum(k, d, q)
    category: str                 # "griesmer" | "near_griesmer" | "neither"
    distance_optimal_proved: bool  # no [n, k, d+1]_q code can exist


def classify_griesmer(wd: WeightDistribution) -> GriesmerClassification:
    n, k, q, d = wd.n, wd.k, wd.q, wd.d
    bound = griesmer_sum(k, d, q)
    if n < bound:
        raise ValueError(f"[{n},{k},{d}]_{q} violates the Griesmer bound {bound}")
    if n == bound:
        category = "griesmer"
    elif n == bound + 1:
        category = "near_griesmer"
    else:
        category = "neither"
    proved = griesmer_sum(k, d + 1, q) > n
    return GriesmerClassification(n=n, k=k, d=d, q=q, bound=bound,
                                  category=category, distance_optimal_proved=proved)


# ---------------------------------------------------------------------------
# projectivity

def _canonical_columns(ctx_q: FieldCtx, M: np.ndarray) -> np.ndarray:
    """Scale each nonzero column so its first nonzero entry is 1."""
    mul, _, _, inv = _q_tables(ctx_q)
    nz = M != 0
    first = nz.argmax(axis=0)
    lead = M[first, np.arange(M.shape[1])]
    return mul[inv[lead][None, :], M]


def projectivity_check(ctx_q: FieldCtx, M: np.ndarray) -> bool:
    """True iff M has no zero column and no two F_q-proportional columns."""
    if not (M != 0).any(axis=0).all():
        return False
    canon = _canonical_columns(ctx_q, M)
    return np.unique(canon, axis=1).shape[1] == M.shape[1]


def code_projectivity(spec: CodeSpec) -> bool:
    return projectivity_check(spec.tower.ctx_q, generator_matrix(spec))


# ---------------------------------------------------------------------------
# minimality

def ab_minimality(wd: WeightDistribution, q: int) -> bool:
    """Sufficient condition: every codeword is minimal if
    q * w_min > (q - 1) * w_max."""
    if not wd.entries:
        raise ValueError("empty weight distribution")
    return q * wd.w_min > (q - 1) * wd.w_max


def exact_minimality(spec: CodeSpec, cap: int = 1 << 12) -> bool:
    """Every nonzero codeword minimal, by pairwise support containment.

    Works on one representative per projective (scalar) class; scalar
    multiples share a support, so minimality only depends on the class.
    """
    tw = spec.tower
    q, k = tw.q, spec.k
    if q ** k > cap:
        raise ValueError(f"code size {q ** k} exceeds exact-minimality cap {cap}")
    ctx1, ctx2 = tw.ctx1, tw.ctx2
    # images of the same scalar z on the two sides, paired correctly
    scalar_pairs = [(tw.embed("m1", z), tw.embed("m2", z)) for z in range(1, q)]
    seen = set()
    supports = []
    for a in range(ctx1.order):
        for b in range(ctx2.order):
            if a == 0 and b == 0 or (a, b) in seen:
                continue
            for z1, z2 in scalar_pairs:
                seen.add((ctx1.mul(z1, a), ctx2.mul(z2, b)))
            coords = codeword(spec, a, b)
            mask = 0
            for i in np.flatnonzero(coords):
                mask |= 1 << int(i)
            supports.append(mask)
    supports.sort(key=lambda m: m.bit_count())
    for i, small in enumerate(supports):
        for big in supports[i + 1:]:
            if small | big == big and small != big:
                return False
    # equal supports across distinct projective classes also break minimality
    return len(set(supports)) == len(supports)


# ---------------------------------------------------------------------------
# strongly regular graphs from projective two-weight codes

@dataclass(frozen=True)
class SrgParams:
    N: int
    K: int
    lam: int
    mu: Optional[int]  # None when the complement is disconnected (mu undefined)

    @property
    def feasible(self) -> bool:
        if self.mu is None:
            return False
        return self.K * (self.K - self.lam - 1) == (self.N - self.K - 1) * self.mu


def srg_params_from_code(wd: WeightDistribution) -> SrgParams:
    """Predicted parameters of the coset graph of a projective two-weight code."""
    if wd.num_weights != 2:
        raise ValueError(f"need exactly two nonzero weights, got {wd.num_weights}")
    q, n, k = wd.q, wd.n, wd.k
    (w1, _), (w2, _) = wd.entries
    N = q ** k
    K = (q - 1) * n
    lam = K * K + 3 * K - q * (w1 + w2) - K * q * (w1 + w2) + q * q * w1 * w2
    mu = K * K + K - K * q * (w1 + w2) + q * q * w1 * w2
    return SrgParams(N=N, K=K, lam=lam, mu=mu)


@dataclass(frozen=True)
class Graph:
    """Undirected graph on vertices 0..N-1 as a boolean adjacency matrix."""

    adjacency: np.ndarray

    @property
    def num_vertices(self) -> int:
        return self.adjacency.shape[0]

    def degree_set(self) -> set[int]:
        return set(int(d) for d in self.adjacency.sum(axis=1))

    def edges(self) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(i), int(j)) for i, j in zip(iu, ju)]


def build_srg_graph(spec: CodeSpec, max_vertices: int = 1 << 14) -> Graph:
    """Cayley graph on F_q^k whose connection set is the scalar closure of
    the generator columns.  Vertices are mixed-radix words over F_q."""
    tw = spec.tower
    ctx_q = tw.ctx_q
    q, k = tw.q, spec.k
    N = q ** k
    if N > max_vertices:
        raise ValueError(f"graph on {N} vertices exceeds cap {max_vertices}")
    M = generator_matrix(spec)
    mul, add, _, _ = _q_tables(ctx_q)
    cols = {tuple(int(v) for v in mul[z, M[:, j]])
            for j in range(M.shape[1]) for z in range(1, q)}
    radix = q ** np.arange(k, dtype=np.int64)

    def index(vec) -> int:
        return int(np.dot(np.asarray(vec, dtype=np.int64), radix))

    # vertex + omega member, componentwise in F_q, vectorized over vertices
    digits = np.empty((N, k), dtype=np.int64)
    rem = np.arange(N, dtype=np.int64)
    for i in range(k):
        digits[:, i] = rem % q
        rem //= q
    adj = np.zeros((N, N), dtype=bool)
    for w in cols:
        shifted = digits.copy()
        for i in range(k):
            shifted[:, i] = add[shifted[:, i], w[i]]
        targets = shifted @ radix
        adj[np.arange(N), targets] = True
    if not np.array_equal(adj, adj.T):
        raise AssertionError("connection set not symmetric under negation")
    if adj.diagonal().any():
        raise AssertionError("connection set contains 0")
    return Graph(adjacency=adj)


def srg_verify(graph: Graph) -> Optional[SrgParams]:
    """Exhaustive strong-regularity check via common-neighbor counting.

    Returns the verified parameters, or None if the graph is not strongly
    regular.  mu is None for the degenerate complete/disjoint-clique cases.
    """
    A = graph.adjacency
    N = graph.num_vertices
    degs = graph.degree_set()
    if len(degs) != 1:
        return None
    K = degs.pop()
    common = A.astype(np.int64) @ A.astype(np.int64)
    off = ~np.eye(N, dtype=bool)
    lam_vals = set(common[A & off].tolist())
    if len(lam_vals) != 1:
        return None
    lam = int(lam_vals.pop())
    non_adj = (~A) & off
    if not non_adj.any():
        return SrgParams(N=N, K=K, lam=lam, mu=None)
    mu_vals = set(common[non_adj].tolist())
    if len(mu_vals) != 1:
        return None
    return SrgParams(N=N, K=K, lam=lam, mu=int(mu_vals.pop()))
