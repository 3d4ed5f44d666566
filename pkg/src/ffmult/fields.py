"""Exact arithmetic for the finite field F_q, q = p^r.

Field elements are encoded as integers in [0, q): the element
c_0 + c_1*u + ... + c_{r-1}*u^{r-1} (u = class of x modulo the defining
polynomial) is encoded as c_0 + c_1*p + ... + c_{r-1}*p^{r-1}.  With this
encoding, addition is digit-wise mod p and multiplication is table-driven,
so every operation on encoded elements is a lookup; numpy fancy indexing
on the same tables gives the vectorized paths used by the statistics
modules.

The defining polynomial is the lexicographically least monic irreducible
of degree r over F_p (least = smallest base-p encoding of the non-leading
coefficients), so a field is reproducible from (p, r) alone.

Additive characters are t -> exp(2*pi*i*Tr(s*t)/p); their values are kept
as exact exponents k mod p and converted to complex only at aggregation
boundaries (the `roots` table maps exponents to floats deterministically).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _fp_poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _least_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree r over F_p.

    Found by marking every product of two lower-degree monic polynomials;
    survivors are irreducible.  r is tiny here (field construction), so the
    p^r sweep is immediate.
    """
    if r == 1:
        return (0, 1)
    # candidate low-coefficient vectors, indexed by their base-p encoding
    composite = [False] * (p ** r)

    def monics(d):
        for idx in range(p ** d):
            coeffs, t = [], idx
            for _ in range(d):
                coeffs.append(t % p)
                t //= p
            yield coeffs + [1]

    for d1 in range(1, r // 2 + 1):
        for a in monics(d1):
            for b in monics(r - d1):
                prod = _fp_poly_mul(a, b, p)
                composite[sum(c * p ** i for i, c in enumerate(prod[:r]))] = True
    for idx in range(p ** r):
        if not composite[idx]:
            coeffs, t = [], idx
            for _ in range(r):
                coeffs.append(t % p)
                t //= p
            return tuple(coeffs) + (1,)
    raise AssertionError("no irreducible of degree %d over F_%d" % (r, p))


def _default_factor_bound(q: int) -> int:
    if q == 2:
        return 12
    if q == 3:
        return 8
    d = 1
    while q ** (d + 1) <= 6561:
        d += 1
    return d


class Field:
    """F_{p^r} with table-driven arithmetic on int-encoded elements."""

    def __init__(self, p: int, r: int, factor_degree_bound: int | None = None,
                 enumeration_budget: int = 2_097_152):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if r < 1:
            raise ValueError(f"extension degree r = {r} must be >= 1")
        self.p = p
        self.r = r
        self.q = p ** r
        if self.q > 512:
            raise ValueError(f"q = {self.q} too large for table-driven arithmetic")
        self.modulus = _least_irreducible(p, r)
        self.factor_degree_bound = (factor_degree_bound if factor_degree_bound is not None
                                    else _default_factor_bound(self.q))
        self.enumeration_budget = enumeration_budget
        self._build_tables()
        # exp(2*pi*i*k/p) for exponent->complex conversion at sum time
        self.roots = _exact_roots(p)
        self._unit_roots: dict[int, np.ndarray] = {p: self.roots}
        # lazy caches owned by polys.py (irreducible tables) — see that module
        self._irreducibles: dict[int, tuple] = {}
        self._irr_sets: dict[int, frozenset] = {}
        self._factor_memo: dict = {}

    # -- construction ------------------------------------------------------

    def _build_tables(self):
        p, r, q = self.p, self.r, self.q
        digits = np.array([[(e // p ** i) % p for i in range(r)] for e in range(q)],
                          dtype=np.int64)
        add = np.zeros((q, q), dtype=np.int16)
        for a in range(q):
            add[a] = ((digits[a] + digits) % p) @ (p ** np.arange(r))
        self.add_table = add
        self.neg_table = np.array([((-digits[a]) % p) @ (p ** np.arange(r))
                                   for a in range(q)], dtype=np.int16)

        # u^k reduced mod the defining polynomial, for k < 2r-1
        mod = list(self.modulus)
        red = {k: [0] * k + [1] + [0] * (r - k - 1) for k in range(r)}
        for k in range(r, 2 * r - 1):
            prev = red[k - 1]
            lead = prev[r - 1]
            shifted = [0] + prev[:r - 1]
            red[k] = [(shifted[i] - lead * mod[i]) % p for i in range(r)]
        mul = np.zeros((q, q), dtype=np.int16)
        for a in range(q):
            da = digits[a]
            for b in range(a, q):
                db = digits[b]
                acc = [0] * r
                for i in range(r):
                    if da[i] == 0:
                        continue
                    for j in range(r):
                        if db[j] == 0:
                            continue
                        c = (da[i] * db[j]) % p
                        for t, rt in enumerate(red[i + j]):
                            acc[t] = (acc[t] + c * rt) % p
                code = sum(c * p ** i for i, c in enumerate(acc))
                mul[a, b] = code
                mul[b, a] = code
        self.mul_table = mul

        inv = np.zeros(q, dtype=np.int16)
        for a in range(1, q):
            row = np.nonzero(mul[a] == 1)[0]
            inv[a] = row[0]
        self.inv_table = inv

        trace = np.zeros(q, dtype=np.int16)
        for a in range(q):
            acc, x = 0, a
            for _ in range(r):
                acc = add[acc, x]
                x = _pow_int(mul, x, p)
            trace[a] = acc
        self.trace_table = trace
        if not np.all(trace < self.p):
            raise AssertionError("trace values must lie in the prime field")

        # plain-list views: ~4x faster than numpy scalar indexing in the
        # coefficient-at-a-time polynomial loops
        self.add_py = add.tolist()
        self.mul_py = mul.tolist()
        self.neg_py = self.neg_table.tolist()
        self.inv_py = inv.tolist()
        self.trace_py = trace.tolist()

    # -- scalar operations on encoded elements -----------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.inv_table[a])

    def pow_(self, a: int, e: int) -> int:
        return _pow_int(self.mul_table, a, e)

    def trace(self, a: int) -> int:
        """Tr(a) = sum of a^(p^i), returned as an integer in [0, p)."""
        return int(self.trace_table[a])

    # -- characters ---------------------------------------------------------

    def char_exponent(self, s: int, t: int) -> int:
        """Exponent k of exp(2*pi*i*k/p) for the additive character alpha_s(t)."""
        return int(self.trace_table[self.mul_table[s, t]])

    def additive_character(self, s: int):
        """t -> exp(2*pi*i*Tr(t*s)/p) as a callable on encoded elements."""
        roots, table = self.roots, self.trace_table
        mul_row = self.mul_table[s]

        def alpha(t: int) -> complex:
            return complex(roots[table[mul_row[t]]])

        return alpha

    def unit_roots(self, order: int) -> np.ndarray:
        """exp(2*pi*i*k/order) for k < order, cached for exact-exponent sums."""
        if order not in self._unit_roots:
            self._unit_roots[order] = _exact_roots(order)
        return self._unit_roots[order]

    # -- misc ---------------------------------------------------------------

    def elements(self):
        return range(self.q)

    def coords(self, a: int) -> tuple[int, ...]:
        return tuple((a // self.p ** i) % self.p for i in range(self.r))

    def from_coords(self, coords) -> int:
        return sum(c % self.p * self.p ** i for i, c in enumerate(coords))

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, code % self.q)

    def __eq__(self, other):
        return (isinstance(other, Field)
                and (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus))

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    def __repr__(self):
        return f"F_{self.q}" if self.r == 1 else f"F_{self.q} (= F_{self.p}^{self.r})"


def _exact_roots(order: int) -> np.ndarray:
    """exp(2*pi*i*k/order), with quarter-turn values snapped to exact floats."""
    roots = np.exp(2j * np.pi * np.arange(order) / order)
    for num, val in ((0, 1), (1, 1j), (2, -1), (3, -1j)):
        if (num * order) % 4 == 0:
            roots[num * order // 4] = val
    return roots


def _pow_int(mul_table, a: int, e: int) -> int:
    acc, base = 1, a
    while e:
        if e & 1:
            acc = int(mul_table[acc, base])
        base = int(mul_table[base, base])
        e >>= 1
    return acc


@dataclass(frozen=True)
class FieldElement:
    """Operator sugar over an encoded element; handy in demos and axiom tests."""

    field: Field
    code: int

    def _lift(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.code
        # plain ints land in the prime subfield: n -> n * 1
        return int(other) % self.field.p

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.code, self._lift(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.code, self._lift(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self._lift(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self.field.inv(self._lift(other))))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_(self.code, e))

    def trace(self) -> int:
        return self.field.trace(self.code)

    def __repr__(self):
        if self.field.r == 1:
            return str(self.code)
        names = {0: "", 1: "u"}
        parts = []
        for i, c in enumerate(self.field.coords(self.code)):
            if c == 0:
                continue
            pw = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
            parts.append(f"{c}" if i == 0 else (pw if c == 1 else f"{c}{pw}"))
        return "+".join(reversed(parts)) if parts else "0"


def build_field(p: int, r: int, factor_degree_bound: int | None = None,
                enumeration_budget: int = 2_097_152) -> Field:
    """Construct F_{p^r} with a deterministically chosen defining polynomial."""
    return Field(p, r, factor_degree_bound, enumeration_budget)
