"""Exact character sums in the cyclotomic integer ring Z[zeta_p].

Everything here is integer arithmetic: additive characters are monomials
zeta_p^t, quadratic Gauss sums are evaluated both by brute force and by
their closed form, and the rational sums over scalar-invariant sets are
computed by an orbit shortcut with the full ring sum as a debug oracle.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import FieldCtx, TowerCtx, build_field, quadratic_character


class CyclotomicInteger:
    """Element of Z[zeta_p] in the canonical basis zeta^0 .. zeta^{p-2}.

    The relation 1 + zeta + ... + zeta^{p-1} = 0 eliminates zeta^{p-1};
    two values are equal iff their coefficient tuples are equal.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise ValueError(f"need {p - 1} coefficients, got {len(coeffs)}")
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def from_raw(cls, p: int, raw) -> "CyclotomicInteger":
        """Canonicalize a length-p vector of coefficients of zeta^0 .. zeta^{p-1}."""
        raw = [int(c) for c in raw]
        if len(raw) != p:
            raise ValueError(f"need {p} raw coefficients, got {len(raw)}")
        top = raw[-1]
        return cls(p, [c - top for c in raw[:-1]])

    @classmethod
    def from_int(cls, p: int, c: int) -> "CyclotomicInteger":
        return cls(p, [c] + [0] * (p - 2))

    @classmethod
    def zero(cls, p: int) -> "CyclotomicInteger":
        return cls.from_int(p, 0)

    @classmethod
    def root_power(cls, p: int, t: int) -> "CyclotomicInteger":
        """The monomial zeta_p^t."""
        raw = [0] * p
        raw[t % p] = 1
        return cls.from_raw(p, raw)

    def _check(self, other):
        if self.p != other.p:
            raise ValueError("mixed cyclotomic orders")

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicInteger.from_int(self.p, other)
        self._check(other)
        return CyclotomicInteger(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = CyclotomicInteger.from_int(self.p, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger(self.p, [a * other for a in self.coeffs])
        self._check(other)
        p = self.p
        raw = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        raw[(i + j) % p] += a * b
        return CyclotomicInteger.from_raw(p, raw)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational and self.coeffs[0] == other
        return (isinstance(other, CyclotomicInteger)
                and self.p == other.p and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.p, self.coeffs))

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> int:
        if not self.is_rational:
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def __repr__(self):
        return f"CyclotomicInteger(p={self.p}, coeffs={self.coeffs})"


@dataclass(frozen=True)
class GaussSumValue:
    """Closed-form Gauss sum: value = i^i_power * p^(half_exponent/2)."""

    p: int
    half_exponent: int  # s*m; the value has absolute value p^(half_exponent/2)
    i_power: int        # in {0,1,2,3}

    @property
    def is_rational(self) -> bool:
        return self.half_exponent % 2 == 0 and self.i_power % 2 == 0

    def rational_value(self) -> int:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        sign = 1 if self.i_power == 0 else -1
        return sign * self.p ** (self.half_exponent // 2)


def additive_char(tower: TowerCtx, which: str, b: int, x: int) -> CyclotomicInteger:
    """zeta_p^{Tr(b x)} with the trace down to the prime field."""
    ctx = tower.ext(which)
    return CyclotomicInteger.root_power(tower.p, ctx.trace_prime_table[ctx.mul(b, x)])


def gauss_sum_bruteforce(ctx: FieldCtx) -> CyclotomicInteger:
    """Sum of eta(x) zeta^{Tr(x)} over the whole field, exactly."""
    if ctx.p == 2:
        raise ValueError("quadratic Gauss sum needs odd characteristic")
    p = ctx.p
    eta = np.where(np.arange(ctx.order - 1) % 2 == 0, 1, -1)
    tr = ctx.trace_prime_table[ctx.antilog]
    raw = np.zeros(p, dtype=np.int64)
    np.add.at(raw, tr, eta)
    return CyclotomicInteger.from_raw(p, raw)


def gauss_sum_formula(p: int, s: int, m: int) -> GaussSumValue:
    """Closed form (-1)^{sm-1} * sqrt(-1)^{(p-1)^2 sm / 4} * q^{m/2} for q = p^s."""
    if p == 2:
        raise ValueError("closed form requires odd p")
    sm = s * m
    u = (2 * (sm - 1) + ((p - 1) // 2) ** 2 * sm) % 4
    return GaussSumValue(p=p, half_exponent=sm, i_power=u)


def gauss_formula_to_cyclotomic(v: GaussSumValue) -> CyclotomicInteger:
    """Exact Z[zeta_p] value of a closed-form Gauss sum.

    Odd half_exponent values carry a sqrt(p) factor, which is expressed via
    the prime-field Gauss sum instead of any numeric embedding.
    """
    p, e = v.p, v.half_exponent
    if e % 2 == 0:
        if v.i_power % 2 != 0:
            raise ValueError("even exponent with imaginary unit: formula bug")
        sign = 1 if v.i_power == 0 else -1
        return CyclotomicInteger.from_int(p, sign * p ** (e // 2))
    g1 = gauss_sum_bruteforce(build_field(p, 1))
    u1 = gauss_sum_formula(p, 1, 1).i_power
    diff = (v.i_power - u1) % 4
    if diff not in (0, 2):
        raise ValueError("odd-exponent unit mismatch with prime-field Gauss sum")
    sign = 1 if diff == 0 else -1
    return g1 * (sign * p ** ((e - 1) // 2))


def gauss_rational(p: int, s: int, m: int) -> int:
    """The Gauss sum over F_{p^{sm}} as a plain integer (requires sm even)."""
    return gauss_sum_formula(p, s, m).rational_value()


def gauss_product_over_q(p: int, s: int, m: int) -> int:
    """G_1 * G_m / q as a rational integer (m odd), q = p^s.

    Both factors carry sqrt(q)-scale irrationality that cancels in the
    product; the result is +-q^{(m-1)/2}.
    """
    gm = gauss_sum_formula(p, s, m)
    g1 = gauss_sum_formula(p, s, 1)
    u = (gm.i_power + g1.i_power) % 4
    if u % 2 != 0:
        raise ValueError("G_1 * G_m is not rational for these parameters")
    sign = 1 if u == 0 else -1
    num = (gm.half_exponent + g1.half_exponent) // 2 - s
    return sign * p ** num


def quadratic_completion_sum(ctx: FieldCtx, a2: int, a1: int, a0: int) -> CyclotomicInteger:
    """Brute-force sum of zeta^{Tr(a2 x^2 + a1 x + a0)} over the field."""
    if ctx.p == 2:
        raise ValueError("needs odd characteristic")
    if a2 == 0:
        raise ValueError("a2 must be nonzero")
    p = ctx.p
    xs = np.arange(ctx.order, dtype=np.int64)
    sq = np.zeros(ctx.order, dtype=np.int64)
    nz = xs != 0
    sq[nz] = ctx.antilog[(2 * ctx.log[xs[nz]]) % (ctx.order - 1)]
    vals = ctx.add_vec(ctx.mul_by_vec(a2, sq),
                       ctx.add_vec(ctx.mul_by_vec(a1, xs),
                                   np.full(ctx.order, a0, dtype=np.int64)))
    raw = np.bincount(ctx.trace_prime_table[vals], minlength=p)
    return CyclotomicInteger.from_raw(p, raw)


def quadratic_completion_closed_form(ctx: FieldCtx, a2: int, a1: int, a0: int) -> CyclotomicInteger:
    """G * eta(a2) * zeta^{Tr(a0 - a1^2 (4 a2)^{-1})}, exactly."""
    if a2 == 0:
        raise ValueError("a2 must be nonzero")
    g = gauss_formula_to_cyclotomic(gauss_sum_formula(ctx.p, 1, ctx.n))
    eta = quadratic_character(ctx, a2)
    four = 4 % ctx.p  # the constant 4 as a field element
    shift = ctx.sub(a0, ctx.mul(ctx.mul(a1, a1), ctx.inv(ctx.mul(four, a2))))
    t = int(ctx.trace_prime_table[shift])
    return g * eta * CyclotomicInteger.root_power(ctx.p, t)


def orbit_representatives(tower: TowerCtx, elements, which: str = "m2") -> list[int]:
    """One representative per F_q^*-orbit of the nonzero members.

    Raises ValueError when the set is not closed under F_q^* scaling.
    """
    ctx = tower.ext(which)
    units = tower.subfield_units(which)
    members = set(elements)
    nonzero = members - {0}
    reps, seen = [], set()
    for y in sorted(nonzero, key=lambda e: int(ctx.log[e])):
        if y in seen:
            continue
        orbit = {ctx.mul(z, y) for z in units}
        if not orbit <= members:
            raise ValueError("set is not invariant under F_q^* scaling")
        reps.append(y)
        seen |= orbit
    return reps


def set_char_sum(tower: TowerCtx, dset, b: int, check: bool = False) -> int:
    """Sum of zeta^{Tr(b y)} over an F_q^*-invariant set, as a rational integer.

    Each orbit {z y} contributes q-1 when Tr^{q^m2}_q(b y) = 0 and -1
    otherwise; a member 0 contributes 1.  With check=True the full
    Z[zeta_p] sum is recomputed and compared.
    """
    from .defsets import DefiningSet

    ctx = tower.ctx2
    if isinstance(dset, DefiningSet):
        reps = dset.orbit_reps
        contains_zero = dset.contains_zero
        elements = dset.elements
    else:
        elements = tuple(dset)
        reps = orbit_representatives(tower, elements)
        contains_zero = 0 in elements
    q = tower.q
    total = 1 if contains_zero else 0
    if b == 0:
        total += (q - 1) * len(reps)
    else:
        for y in reps:
            if tower.tr2_q[ctx.mul(b, y)] == 0:
                total += q - 1
            else:
                total -= 1
    if check:
        acc = CyclotomicInteger.zero(tower.p)
        for y in elements:
            acc = acc + additive_char(tower, "m2", b, y)
        if acc.rational_value() != total:
            raise AssertionError("orbit shortcut disagrees with the full ring sum")
    return total


def count_trace_square_equals(tower: TowerCtx, rho: int) -> int:
    """|{b in F_{q^m2}^* : Tr^{q^m2}_q(b^2) = rho}| with closed-form cross-check."""
    p, s, m2, q = tower.p, tower.s, tower.m2, tower.q
    if p == 2:
        raise ValueError("needs odd q")
    ctx = tower.ctx2
    N = ctx.order
    j = np.arange(N - 1, dtype=np.int64)
    sq = ctx.antilog[(2 * j) % (N - 1)]
    count = int(np.count_nonzero(tower.tr2_q[sq] == rho))
    # closed form (parity of m2 decides which branch applies)
    if m2 % 2 == 0:
        g = gauss_rational(p, s, m2)
        expected = q ** (m2 - 1) - 1 + (q - 1) * g // q if rho == 0 else q ** (m2 - 1) - g // q
    else:
        if rho == 0:
            expected = q ** (m2 - 1) - 1
        else:
            eta1 = quadratic_character(tower.ctx_q, tower.ctx_q.neg(rho))
            expected = q ** (m2 - 1) + eta1 * gauss_product_over_q(p, s, m2)
    if count != expected:
        raise AssertionError(
            f"count {count} != closed form {expected} for rho={rho} "
            f"(p={p}, s={s}, m2={m2})")
    return count
