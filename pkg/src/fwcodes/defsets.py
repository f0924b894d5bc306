"""Construction of the defining sets used to index codeword coordinates.

S lives in the first extension and is a transversal of the F_q^* cosets;
the D families live in the second extension and are closed under F_q^*
scaling (checked at construction).  Element order is canonical so that
downstream generator matrices are byte-reproducible: S by exponent
ascending, D by discrete log ascending with 0 (if present) last.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .gf import TowerCtx

D_KINDS = ("D1", "D2", "D3", "D1_tilde", "D2_tilde", "D3_tilde")
FAMILIES = D_KINDS


@dataclass(frozen=True)
class DefiningSet:
    kind: str
    field_side: str            # "m1" for S, "m2" for the D families
    elements: tuple[int, ...]  # canonical order
    contains_zero: bool
    orbit_reps: tuple[int, ...] = field(default=(), repr=False)

    def __len__(self):
        return len(self.elements)

    def log_indices(self, tower: TowerCtx) -> list[int]:
        """Discrete logs for serialization; 0 encodes as -1."""
        ctx = tower.ext(self.field_side)
        return [int(ctx.log[e]) for e in self.elements]


def build_S(tower: TowerCtx, alpha_log: int = 1) -> DefiningSet:
    """S = {alpha^i : i = 1 .. (q^m1 - 1)/(q - 1)} for a primitive alpha.

    alpha_log selects the primitive element alpha = x^alpha_log; the
    default is the canonical x.  Alternate values exist only to test that
    the resulting code data does not depend on the choice.
    """
    ctx = tower.ctx1
    N = ctx.order
    if math.gcd(alpha_log, N - 1) != 1:
        raise ValueError(f"x^{alpha_log} is not primitive in order-{N} field")
    t = (N - 1) // (tower.q - 1)
    elems = tuple(int(ctx.antilog[(alpha_log * i) % (N - 1)]) for i in range(1, t + 1))
    assert len(set(elems)) == t
    return DefiningSet(kind="S", field_side="m1", elements=elems, contains_zero=False)


def _finish_D(tower: TowerCtx, kind: str, nonzero: list[int], tilde: bool) -> DefiningSet:
    from .charsum import orbit_representatives

    ctx = tower.ctx2
    nonzero.sort(key=lambda e: int(ctx.log[e]))
    elems = tuple(nonzero) + ((0,) if tilde else ())
    ds = DefiningSet(kind=kind, field_side="m2", elements=elems,
                     contains_zero=tilde,
                     orbit_reps=tuple(orbit_representatives(tower, elems)))
    return ds


def build_D(tower: TowerCtx, kind: str) -> DefiningSet:
    """One of the six defining-set families in the second extension."""
    if kind not in D_KINDS:
        raise ValueError(f"unknown defining set kind {kind!r}")
    base = kind[:2]
    tilde = kind.endswith("_tilde")
    ctx = tower.ctx2
    m2, q = tower.m2, tower.q
    if base in ("D2", "D3") and m2 < 2:
        raise ValueError(f"{kind} requires m2 >= 2")
    if base == "D3":
        if tower.p == 2:
            raise ValueError("D3 requires odd q")
        if m2 % 2 == 1 and m2 < 3:
            raise ValueError("D3 with odd m2 requires m2 >= 3")
    nz = ctx.antilog  # all nonzero elements
    if base == "D1":
        keep = nz
    elif base == "D2":
        keep = nz[tower.tr2_q[nz] != 0]
    else:  # D3: trace of the square vanishes
        sq = ctx.antilog[(2 * np.arange(ctx.order - 1, dtype=np.int64)) % (ctx.order - 1)]
        keep = nz[tower.tr2_q[sq] == 0]
        if len(keep) == 0:
            # happens iff m2 = 2 and the quadratic Gauss sum is -q (q = 1 mod 4):
            # no nonzero square has zero trace, the construction degenerates
            raise ValueError(f"{kind} is empty for q={q}, m2={m2}")
    return _finish_D(tower, kind, [int(v) for v in keep], tilde)


def check_fq_invariance(tower: TowerCtx, dset) -> bool:
    """True iff z*D = D for every z in the embedded F_q^*."""
    elements = dset.elements if isinstance(dset, DefiningSet) else tuple(dset)
    ctx = tower.ctx2
    members = set(elements)
    for z in tower.subfield_units("m2"):
        if {ctx.mul(z, y) for y in members} != members:
            return False
    return True
