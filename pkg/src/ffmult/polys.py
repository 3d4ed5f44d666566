"""F_q[x]: exact polynomial arithmetic, enumeration, irreducibles, factorization.

Polynomials are immutable coefficient tuples (lowest degree first, encoded
field elements, no trailing zeros).  The zero polynomial has the dedicated
degree NEG_INF, never -1, so degree arithmetic can't silently go wrong.

Enumeration order is canonical everywhere: the polynomial sum g_j x^j maps
to the index sum g_j q^j, and iterators yield in increasing index.  G_n is
the additive group of polynomials of degree at most n-1 (size q^n, contains
0); monic_of_degree(n) has size q^n as well.

Irreducibles are enumerated by a product sieve: every monic polynomial of
degree d that is a product of two smaller monic polynomials gets marked,
survivors are irreducible.  The sieve is vectorized over the cofactor, so
desk-scale tables (q^d up to ~10^6) build in seconds.  Factorization is
trial division against that table; a polynomial of degree D is fully
factorable as long as D//2 stays within the table bound, since a composite
always has a factor of at most half its degree.
"""

from __future__ import annotations

import numpy as np

from .errors import BudgetError
from .fields import Field

NEG_INF = float("-inf")

_FACTOR_MEMO_CAP = 1 << 20


class Poly:
    """Immutable polynomial over a Field, coefficients lowest-degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        t = tuple(int(c) for c in coeffs)
        while t and t[-1] == 0:
            t = t[:-1]
        if any(c < 0 or c >= field.q for c in t):
            raise ValueError("coefficient out of range for " + repr(field))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", t)

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def from_index(cls, field, index: int):
        """Inverse of to_index(): base-q digits become coefficients."""
        q = field.q
        coeffs, t = [], int(index)
        while t:
            coeffs.append(t % q)
            t //= q
        return cls(field, coeffs)

    def to_index(self) -> int:
        q, idx = self.field.q, 0
        for c in reversed(self.coeffs):
            idx = idx * q + c
        return idx

    # -- structure ----------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        inv = self.field.inv_py[self.coeffs[-1]]
        mul = self.field.mul_py
        return Poly(self.field, [mul[c][inv] for c in self.coeffs])

    def coeff(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    # -- ring operations ----------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Poly) or other.field != self.field:
            raise TypeError("operands must be Poly over the same field")

    def __add__(self, other):
        self._check(other)
        a, b, add = self.coeffs, other.coeffs, self.field.add_py
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add[out[i]][c]
        return Poly(self.field, out)

    def __neg__(self):
        neg = self.field.neg_py
        return Poly(self.field, [neg[c] for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.field)
        add, mul = self.field.add_py, self.field.mul_py
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                row = mul[ai]
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add[out[i + j]][row[bj]]
        return Poly(self.field, out)

    def scalar_mul(self, c: int) -> "Poly":
        if c == 0:
            return Poly.zero(self.field)
        row = self.field.mul_py[c]
        return Poly(self.field, [row[ci] for ci in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        add, mul, neg = F.add_py, F.mul_py, F.neg_py
        db = len(other.coeffs) - 1
        inv_lc = F.inv_py[other.coeffs[-1]]
        rem = list(self.coeffs)
        if len(rem) - 1 < db:
            return Poly.zero(F), self
        quot = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = mul[c][inv_lc]
            quot[i - db] = f
            frow = mul[f]
            for j, bc in enumerate(other.coeffs):
                if bc:
                    rem[i - db + j] = add[rem[i - db + j]][neg[frow[bc]]]
        return Poly(F, quot), Poly(F, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        acc, base = Poly.one(self.field), self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __call__(self, a: int) -> int:
        """Evaluate at an encoded field element (Horner)."""
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add_py[F.mul_py[acc][a]][c]
        return acc

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Poly) and other.field == self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            xp = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            if j == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(xp)
            else:
                parts.append(f"{c}*{xp}")
        return " + ".join(parts)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# -- enumeration -------------------------------------------------------------


def _budget_check(field: Field, count: int, what: str):
    if count > field.enumeration_budget:
        raise BudgetError(f"{what} has {count} elements, over the enumeration "
                          f"budget {field.enumeration_budget}")


def g_n(field: Field, n: int):
    """All q^n polynomials of degree at most n-1 (includes 0), index order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _budget_check(field, field.q ** n, f"G_{n}")
    for idx in range(field.q ** n):
        yield Poly.from_index(field, idx)


def monic_of_degree(field: Field, n: int):
    """All q^n monic polynomials of degree exactly n, index order on the tail."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _budget_check(field, field.q ** n, f"monic degree {n}")
    for idx in range(field.q ** n):
        low = Poly.from_index(field, idx).coeffs
        yield Poly(field, low + (0,) * (n - len(low)) + (1,))


def p_k(field: Field, k: int):
    """P_k: monic irreducibles of degree k or k+1 (the two-degree span)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    for d in (k, k + 1):
        for g in irreducibles_of_degree(field, d):
            yield g


def enumerate_sets(field: Field, kind: str, *, n: int | None = None, k: int | None = None):
    """Dispatcher kept for config-driven callers; see the named iterators."""
    if kind == "G_n":
        return g_n(field, n)
    if kind == "monic_of_degree":
        return monic_of_degree(field, n)
    if kind == "P_k":
        return p_k(field, k)
    raise ValueError(f"unknown set kind {kind!r}")


# -- irreducibles ------------------------------------------------------------


def _mobius_int(n: int) -> int:
    res, m, f = 1, n, 2
    while f * f <= m:
        if m % f == 0:
            m //= f
            if m % f == 0:
                return 0
            res = -res
        f += 1
    if m > 1:
        res = -res
    return res


def irreducible_count(field: Field, d: int) -> int:
    """Exact count of monic irreducibles of degree d (necklace formula)."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    q = field.q
    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += _mobius_int(e) * q ** (d // e)
    assert total % d == 0
    return total // d


def _monic_digit_matrix(field: Field, m: int) -> np.ndarray:
    """(q^m, m+1) coefficient rows of all monic degree-m polynomials."""
    q = field.q
    n_rows = q ** m
    cols = [((np.arange(n_rows, dtype=np.int64) // q ** j) % q).astype(np.int16)
            for j in range(m)]
    cols.append(np.ones(n_rows, dtype=np.int16))
    return np.stack(cols, axis=1)


def irreducibles_of_degree(field: Field, d: int) -> tuple:
    """Monic irreducibles of degree d, cached on the field, index order."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    cache = field._irreducibles
    if d in cache:
        return cache[d]
    q = field.q
    _budget_check(field, q ** d, f"irreducible sieve at degree {d}")
    if d == 1:
        out = tuple(Poly(field, (c, 1)) for c in range(q))
        cache[1] = out
        return out
    composite = np.zeros(q ** d, dtype=bool)
    powers = (q ** np.arange(d, dtype=np.int64))
    add_t, mul_t = field.add_table, field.mul_table
    for e in range(1, d // 2 + 1):
        cof = _monic_digit_matrix(field, d - e)
        for p in irreducibles_of_degree(field, e):
            prod = np.zeros((cof.shape[0], d + 1), dtype=np.int16)
            for i, pc in enumerate(p.coeffs):
                if pc:
                    seg = prod[:, i:i + cof.shape[1]]
                    prod[:, i:i + cof.shape[1]] = add_t[seg, mul_t[pc][cof]]
            composite[prod[:, :d].astype(np.int64) @ powers] = True
    survivors = np.nonzero(~composite)[0]
    out = []
    for idx in survivors:
        low = Poly.from_index(field, int(idx)).coeffs
        out.append(Poly(field, low + (0,) * (d - len(low)) + (1,)))
    cache[d] = tuple(out)
    return cache[d]


def is_irreducible(g: Poly) -> bool:
    if g.is_zero() or g.degree == 0:
        return False
    field = g.field
    d = int(g.degree)
    m = g.monic()
    if field.q ** d <= field.enumeration_budget:
        sets = field._irr_sets
        if d not in sets:
            sets[d] = frozenset(irreducibles_of_degree(field, d))
        return m in sets[d]
    # degree too large to cache at full width: trial-divide up to d//2
    for e in range(1, d // 2 + 1):
        for p in irreducibles_of_degree(field, e):
            if (m % p).is_zero():
                return False
    return True


def factor(g: Poly):
    """g = unit * prod(p_i^{k_i}); returns (unit_code, ((p, k), ...)).

    Trial division against the cached irreducible table.  Works whenever
    deg(g) <= 2*bound + 1 for the field's factor_degree_bound: a composite
    cofactor would need a divisor of degree at most deg//2 <= bound, so a
    surviving cofactor is certified irreducible.
    """
    if g.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    field = g.field
    memo = field._factor_memo
    key = g.coeffs
    hit = memo.get(key)
    if hit is not None:
        return hit
    bound = field.factor_degree_bound
    if g.degree > 2 * bound + 1:
        raise ValueError(
            f"deg(g) = {g.degree} exceeds the factorable range 2*{bound}+1 = "
            f"{2 * bound + 1}; raise factor_degree_bound on the field")
    unit = g.lc()
    m = g.monic()
    out = []
    d = 1
    while m.degree >= 1:
        if d > m.degree // 2:
            # all factors of degree < d removed, so a composite m would
            # need two factors of degree >= d > deg(m)/2: impossible
            out.append((m, 1))
            break
        for p in irreducibles_of_degree(field, d):
            k = 0
            while True:
                quo, rem = divmod(m, p)
                if not rem.is_zero():
                    break
                m, k = quo, k + 1
            if k:
                out.append((p, k))
                if m.degree < 1 or d > m.degree // 2:
                    break
        d += 1
    result = (unit, tuple(out))
    if len(memo) < _FACTOR_MEMO_CAP:
        memo[key] = result
    return result
