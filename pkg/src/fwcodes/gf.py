"""Exact arithmetic in small finite fields F_{p^n} and in the tower F_p < F_q < F_{q^m}.

Field elements are plain integers in [0, p^n): the base-p digits of the
integer are the coefficients of the element in the polynomial basis,
lowest degree first.  A FieldCtx carries full discrete-log tables, so all
multiplicative arithmetic is table lookups; addition is digit-wise mod p.

The modulus is always the lexicographically smallest monic primitive
polynomial (coefficients compared lowest degree first), which makes x
itself the canonical primitive element and all outputs reproducible.
"""
from __future__ import annotations

import math
from functools import lru_cache
from itertools import product

import numpy as np

# Fields above this order are rejected: full log/antilog tables only.
ORDER_CAP = 1 << 22


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m by trial division (m stays desk-scale)."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


# ---------------------------------------------------------------------------
# dense polynomial helpers over Z_p (coefficient lists, low degree first)

def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_rem(a, f, p):
    # f monic
    a = list(a)
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        c = a[-1]
        if c:
            shift = len(a) - 1 - df
            for i in range(df + 1):
                a[shift + i] = (a[shift + i] - c * f[i]) % p
        a.pop()
    return _trim(a)


def _poly_powmod(base, e, f, p):
    result = [1]
    base = _poly_rem(base, f, p)
    while e:
        if e & 1:
            result = _poly_rem(_poly_mul(result, base, p), f, p)
        base = _poly_rem(_poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        monic = [(c * inv) % p for c in b]
        a, b = b, _poly_rem(a, monic, p)
    return a


def _is_irreducible(f, p, n):
    if n == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1]
    # x^{p^n} == x (mod f)
    t = x
    frob = [None] * (n + 1)
    frob[0] = x
    for i in range(1, n + 1):
        t = _poly_powmod(t, p, f, p)
        frob[i] = t
    if t != x:
        return False
    for r in prime_factors(n):
        u = frob[n // r]
        diff = _trim([(u[i] if i < len(u) else 0) - (x[i] if i < len(x) else 0)
                      for i in range(max(len(u), len(x)))])
        diff = [c % p for c in diff]
        g = _poly_gcd(list(f), _trim(diff), p)
        if len(g) - 1 > 0:
            return False
    return True


def _is_primitive(f, p, n):
    """True iff f is irreducible and x generates the full unit group mod f."""
    if not _is_irreducible(f, p, n):
        return False
    order = p ** n - 1
    for r in prime_factors(order):
        if _poly_powmod([0, 1], order // r, f, p) == [1]:
            return False
    return True


def _find_modulus(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic primitive polynomial of degree n over F_p."""
    if n == 1:
        # x + c0 with root -c0; want the root to be a generator of F_p^*
        order = p - 1
        rs = prime_factors(order)
        for c0 in range(p):
            root = (-c0) % p
            if root == 0:
                continue
            if all(pow(root, order // r, p) != 1 for r in rs):
                return (c0, 1)
        raise AssertionError("no primitive root found")
    rs = prime_factors(p - 1)
    prim_roots = {r for r in range(1, p)
                  if all(pow(r, (p - 1) // t, p) != 1 for t in rs)}
    sign = 1 if n % 2 == 0 else -1
    for coeffs in product(range(p), repeat=n):
        # the constant term of a primitive polynomial satisfies
        # (-1)^n * c0 = Norm(x), which must be a primitive root mod p
        if (sign * coeffs[0]) % p not in prim_roots:
            continue
        f = list(coeffs) + [1]
        if any(sum(c * pow(a, i, p) for i, c in enumerate(f)) % p == 0
               for a in range(p)):
            continue  # has a root in F_p
        if _is_primitive(f, p, n):
            return tuple(f)
    raise AssertionError(f"no primitive polynomial of degree {n} over F_{p}")


class FieldCtx:
    """One finite field F_{p^n} with full discrete-log tables."""

    def __init__(self, p: int, n: int):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if n < 1:
            raise ValueError(f"extension degree must be >= 1, got {n}")
        order = p ** n
        if order > ORDER_CAP:
            raise ValueError(f"field order {order} exceeds cap {ORDER_CAP}")
        self.p = p
        self.n = n
        self.order = order
        self.modulus = _find_modulus(p, n)
        self._pvec = np.array([p ** i for i in range(n)], dtype=np.int64)
        self._build_tables()
        self._trace_prime = None

    def _build_tables(self):
        p, n, order = self.p, self.n, self.order
        if n == 1:
            self.alpha = (-self.modulus[0]) % p
            self.antilog = _prime_powers(self.alpha, p)
            self._digits = None
        else:
            self.alpha = p  # the element x
            antilog = self._powers_of_x()
            assert len(np.unique(antilog)) == order - 1, \
                "alpha does not have full multiplicative order"
            self.antilog = antilog
            vals = np.arange(order, dtype=np.int64)
            digits = np.empty((order, n), dtype=np.int32)
            tmp = vals.copy()
            for i in range(n):
                digits[:, i] = tmp % p
                tmp //= p
            self._digits = digits
        log = np.full(self.order, -1, dtype=np.int64)
        log[self.antilog] = np.arange(self.order - 1)
        self.log = log

    def _powers_of_x(self) -> np.ndarray:
        """Digit-level baby-step/giant-step table of x^0 .. x^{order-2}."""
        p, n, order = self.p, self.n, self.order
        m = order - 1
        red = [(-c) % p for c in self.modulus[:n]]  # x^n == red
        # reduction rows for x^n .. x^{2n-2}
        rows = [red]
        for _ in range(n - 2):
            prev = rows[-1]
            hi = prev[-1]
            rows.append([(hi * red[0]) % p] + [
                (prev[j - 1] + hi * red[j]) % p for j in range(1, n)
            ])
        R = np.zeros((2 * n - 1, n), dtype=np.int64)
        R[:n] = np.eye(n, dtype=np.int64)
        for i, row in enumerate(rows):
            R[n + i] = row

        def mulx(d):
            hi = d[-1]
            return [(hi * red[0]) % p] + [(d[j - 1] + hi * red[j]) % p for j in range(1, n)]

        chunk = max(1, math.isqrt(m))
        small = np.empty((chunk, n), dtype=np.int64)
        d = [1] + [0] * (n - 1)
        for i in range(chunk):
            small[i] = d
            d = mulx(d)
        # d is now x^chunk; giant steps are its powers
        def polymul(a, b):
            conv = [0] * (2 * n - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        conv[i + j] += ai * bj
            out = [0] * n
            for k, ck in enumerate(conv):
                if ck:
                    for i in range(n):
                        out[i] += ck * R[k, i]
            return [c % p for c in out]

        g = d
        nbig = m // chunk + 1
        big = np.empty((nbig, n), dtype=np.int64)
        cur = [1] + [0] * (n - 1)
        for i in range(nbig):
            big[i] = cur
            cur = polymul(cur, g)
        # conv[a, b, k+l] = sum big[a, k] * small[b, l]
        conv = np.zeros((nbig, chunk, 2 * n - 1), dtype=np.int64)
        for k in range(n):
            conv[:, :, k:k + n] += big[:, k][:, None, None] * small[None, :, :]
        digits = (conv.reshape(-1, 2 * n - 1) @ R) % p
        return (digits @ self._pvec)[:m]

    # -- scalar ops --------------------------------------------------------
    def add(self, x: int, y: int) -> int:
        if self.n == 1:
            return (x + y) % self.p
        d = (self._digits[x] + self._digits[y]) % self.p
        return int(d @ self._pvec)

    def neg(self, x: int) -> int:
        if self.n == 1:
            return (-x) % self.p
        d = (-self._digits[x]) % self.p
        return int(d @ self._pvec)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return int(self.antilog[(self.log[x] + self.log[y]) % (self.order - 1)])

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inversion of zero field element")
        return int(self.antilog[(-self.log[x]) % (self.order - 1)])

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return int(self.antilog[(self.log[x] * e) % (self.order - 1)])

    # -- vector ops (numpy int64 arrays of elements) -----------------------
    def add_vec(self, xs, ys):
        if self.n == 1:
            return (xs + ys) % self.p
        d = (self._digits[xs] + self._digits[ys]) % self.p
        return d @ self._pvec

    def mul_by_vec(self, x: int, ys):
        """x * ys[i] for a scalar x and an array of elements."""
        if x == 0:
            return np.zeros(len(ys), dtype=np.int64)
        out = np.zeros(len(ys), dtype=np.int64)
        nz = ys != 0
        out[nz] = self.antilog[(self.log[x] + self.log[ys[nz]]) % (self.order - 1)]
        return out

    def elements(self):
        return range(self.order)

    @property
    def trace_prime_table(self):
        """Tr to F_p for every element, as an int array of residues in [0, p)."""
        if self._trace_prime is None:
            N, p, n = self.order, self.p, self.n
            tab = np.zeros(N, dtype=np.int64)
            if n > 1:
                j = np.arange(N - 1, dtype=np.int64)
                acc = self.antilog[j]
                for i in range(1, n):
                    acc = self.add_vec(acc, self.antilog[(j * pow(p, i, N - 1)) % (N - 1)])
                assert np.all(acc < p), "trace left the prime subfield"
                tab[self.antilog] = acc
            else:
                tab = np.arange(N, dtype=np.int64)
            self._trace_prime = tab
        return self._trace_prime

    def descriptor(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    def __repr__(self):
        return f"FieldCtx(p={self.p}, n={self.n}, order={self.order})"


def _prime_powers(r: int, p: int) -> np.ndarray:
    """Powers r^0 .. r^{p-2} mod p, computed in O(p) numpy work."""
    m = p - 1
    if m == 1:
        return np.array([1], dtype=np.int64)
    chunk = max(1, math.isqrt(m))
    small = np.empty(chunk, dtype=np.int64)
    c = 1
    for i in range(chunk):
        small[i] = c
        c = c * r % p
    nbig = m // chunk + 1
    big = np.empty(nbig, dtype=np.int64)
    step = pow(r, chunk, p)
    c = 1
    for i in range(nbig):
        big[i] = c
        c = c * step % p
    return ((big[:, None] * small[None, :]) % p).reshape(-1)[:m]


@lru_cache(maxsize=64)
def build_field(p: int, n: int) -> FieldCtx:
    return FieldCtx(p, n)


def quadratic_character(ctx: FieldCtx, x: int) -> int:
    """eta(x): 0 for x=0, +1 for nonzero squares, -1 otherwise (odd characteristic)."""
    if ctx.p == 2:
        raise ValueError("quadratic character undefined in characteristic 2")
    if x == 0:
        return 0
    return 1 if ctx.log[x] % 2 == 0 else -1


class TowerCtx:
    """The linked tower F_p < F_q = F_{p^s} < F_{q^m1}, F_{q^m2}.

    Extensions are built directly over the prime field; F_q is realized as
    the unique order-q subfield via an explicit embedding that is checked
    to be a field homomorphism at construction.
    """

    def __init__(self, p: int, s: int, m1: int, m2: int):
        if min(s, m1, m2) < 1:
            raise ValueError("s, m1, m2 must all be >= 1")
        self.p, self.s, self.m1, self.m2 = p, s, m1, m2
        self.q = p ** s
        self.ctx_q = build_field(p, s)
        self.ctx1 = build_field(p, s * m1)
        self.ctx2 = build_field(p, s * m2)
        self.emb1, self.inv1 = _embedding(self.ctx_q, self.ctx1)
        self.emb2, self.inv2 = _embedding(self.ctx_q, self.ctx2)
        self.tr1_q = _trace_to_subfield(self.ctx1, self.q, m1, self.inv1)
        self.tr2_q = _trace_to_subfield(self.ctx2, self.q, m2, self.inv2)

    def ext(self, which: str) -> FieldCtx:
        if which == "m1":
            return self.ctx1
        if which == "m2":
            return self.ctx2
        raise ValueError(f"which must be 'm1' or 'm2', got {which!r}")

    def _emb(self, which: str):
        return self.emb1 if which == "m1" else self.emb2

    def embed(self, which: str, c: int) -> int:
        """Image in the chosen extension of the F_q element c."""
        self.ext(which)
        return int(self._emb(which)[c])

    def subfield_elements(self, which: str) -> tuple[int, ...]:
        """The embedded copy of F_q inside the chosen extension."""
        return tuple(sorted(int(v) for v in self._emb(which)))

    def subfield_units(self, which: str) -> tuple[int, ...]:
        return tuple(v for v in self.subfield_elements(which) if v != 0)

    def trace_to_q(self, which: str, x: int) -> int:
        """Tr from the chosen extension down to F_q, as an F_q element."""
        self.ext(which)
        tab = self.tr1_q if which == "m1" else self.tr2_q
        return int(tab[x])

    def trace_to_p(self, which: str, x: int) -> int:
        return int(self.ext(which).trace_prime_table[x])

    def trace(self, which: str, target: str, x: int) -> int:
        if target == "q":
            return self.trace_to_q(which, x)
        if target == "p":
            return self.trace_to_p(which, x)
        raise ValueError(f"target must be 'q' or 'p', got {target!r}")

    def __repr__(self):
        return f"TowerCtx(p={self.p}, s={self.s}, m1={self.m1}, m2={self.m2})"


def _embedding(ctx_q: FieldCtx, ctx_ext: FieldCtx):
    """Map F_q (its own representation) onto the order-q subfield of the extension.

    Returns (emb, inv): emb[c] is the image of c; inv[y] recovers c from an
    embedded y and is -1 off the subfield.
    """
    q, N = ctx_q.order, ctx_ext.order
    assert (N - 1) % (q - 1) == 0
    step = (N - 1) // (q - 1)
    emb = np.zeros(q, dtype=np.int64)
    if ctx_q.n == 1:
        # prime subfield: constants embed as themselves
        emb = np.arange(q, dtype=np.int64)
    else:
        beta = ctx_q.alpha
        # minimal polynomial of beta over F_p, expanded inside F_q
        conj, c = [], beta
        for _ in range(ctx_q.n):
            conj.append(c)
            c = ctx_q.pow(c, ctx_q.p)
        poly = [1]
        for c in conj:
            nc = ctx_q.neg(c)
            new = [0] * (len(poly) + 1)
            for j, cf in enumerate(poly):
                new[j] = ctx_q.add(new[j], ctx_q.mul(nc, cf))
                new[j + 1] = ctx_q.add(new[j + 1], cf)
            poly = new
        assert all(cf < ctx_q.p for cf in poly), "minimal polynomial not over F_p"
        root = None
        for k in range(q - 1):
            cand = int(ctx_ext.antilog[(k * step) % (N - 1)])
            acc = 0
            for cf in reversed(poly):
                acc = ctx_ext.add(ctx_ext.mul(acc, cand), cf)
            if acc == 0:
                root = cand
                break
        assert root is not None, "no root of the subfield minimal polynomial found"
        lr = int(ctx_ext.log[root])
        for j in range(q - 1):
            emb[ctx_q.antilog[j]] = ctx_ext.antilog[(j * lr) % (N - 1)]
    # the image must be exactly {0} plus the order-(q-1) cyclic subgroup
    expected = {0} | {int(ctx_ext.antilog[(k * step) % (N - 1)]) for k in range(q - 1)}
    assert set(int(v) for v in emb) == expected
    # additive homomorphism check, exhaustive (q is small)
    for u in range(q):
        for v in range(q):
            assert emb[ctx_q.add(u, v)] == ctx_ext.add(int(emb[u]), int(emb[v])), \
                "embedding is not additive"
    inv = np.full(N, -1, dtype=np.int64)
    inv[emb] = np.arange(q)
    return emb, inv


def _trace_to_subfield(ctx_ext: FieldCtx, q: int, m: int, inv: np.ndarray) -> np.ndarray:
    """Table of Tr^{q^m}_q(x) for every x, values as F_q elements."""
    N = ctx_ext.order
    j = np.arange(N - 1, dtype=np.int64)
    acc = ctx_ext.antilog[j]
    for i in range(1, m):
        acc = ctx_ext.add_vec(acc, ctx_ext.antilog[(j * pow(q, i, N - 1)) % (N - 1)])
    sub = inv[acc]
    assert np.all(sub >= 0), "trace value outside the embedded subfield"
    tab = np.zeros(N, dtype=np.int64)
    tab[ctx_ext.antilog] = sub
    return tab


@lru_cache(maxsize=32)
def build_tower(p: int, s: int, m1: int, m2: int) -> TowerCtx:
    return TowerCtx(p, s, m1, m2)
