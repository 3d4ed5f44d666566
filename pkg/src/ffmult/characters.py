"""The three character families on F_q[x] and their Hayes products.

* Dirichlet characters mod g: characters of the unit group (F_q[x]/g)^*,
  extended by zero off the units.
* Short-interval characters of length <= s: characters of the group R_s of
  truncated series 1 + a_1 x^{-1} + ... + a_s x^{-s} under truncated
  multiplication, pulled back through the normalized top-coefficient map.
  They depend only on the s+1 highest coefficients and are completely
  multiplicative; units map to 1 (unit-invariant completion; an optional
  UnitCharacter covers the alternative completion through the leading
  coefficient).
* Degree twists e_theta: g -> exp(2*pi*i*theta*deg g).

Character values are exact exponents of a root of unity (exposed as
Fraction "turns" in [0,1)); conversion to complex happens only when sums
are formed.  Enumeration order is lexicographic over exponent vectors
against the elementary-divisor generators, so character index 0 is always
the principal character.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetError
from .fields import Field
from .groups import AbelianGroupStructure, decompose_abelian_group
from .polys import Poly, poly_gcd

_QUARTER_TURNS = {Fraction(0): 1 + 0j, Fraction(1, 4): 1j,
                  Fraction(1, 2): -1 + 0j, Fraction(3, 4): -1j}


def turns_to_complex(t) -> complex:
    """exp(2*pi*i*t) with exact values at quarter turns."""
    frac = Fraction(t) % 1
    hit = _QUARTER_TURNS.get(frac)
    if hit is not None:
        return hit
    return cmath.exp(2j * cmath.pi * float(frac))


def _character_table(structure: AbelianGroupStructure, exponents: tuple):
    """element -> numerator mod L for the character picked by `exponents`."""
    orders = structure.orders
    L = orders[0] if orders else 1
    table = {}
    for el, dl in structure.dlog.items():
        num = 0
        for e_i, x_i, d_i in zip(exponents, dl, orders):
            num += e_i * x_i * (L // d_i)
        table[el] = num % L
    return table, L


class DirichletCharacter:
    """A character of (F_q[x]/g)^*, zero off the units, periodic mod g."""

    def __init__(self, field: Field, modulus: Poly, structure, exponents: tuple):
        self.field = field
        self.modulus = modulus
        self.structure = structure
        self.exponents = tuple(exponents)
        if structure is None:                      # trivial modulus (deg 0)
            self.order, self._table = 1, None
        else:
            self._table, self.order = _character_table(structure, self.exponents)

    @classmethod
    def trivial(cls, field: Field):
        """The character mod 1: identically one (the no-twist option)."""
        return cls(field, Poly.one(field), None, ())

    @property
    def is_principal(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def exponent(self, h: Poly):
        """Numerator of the value's turns (mod self.order); None when value is 0."""
        if self._table is None:
            return 0
        return self._table.get(h % self.modulus)

    def turns(self, h: Poly):
        num = self.exponent(h)
        return None if num is None else Fraction(num, self.order)

    def __call__(self, h: Poly) -> complex:
        num = self.exponent(h)
        if num is None:
            return 0j
        return complex(self.field.unit_roots(self.order)[num])

    def descriptor(self) -> dict:
        return {"modulus": list(self.modulus.coeffs), "index": list(self.exponents),
                "orders": list(self.structure.orders) if self.structure else []}

    def __repr__(self):
        return f"DirichletCharacter(mod {self.modulus}, index {self.exponents})"


def unit_group(field: Field, modulus: Poly, budget: int = 100_000) -> AbelianGroupStructure:
    """(F_q[x]/g)^* as a decomposed abelian group, residues in index order."""
    if modulus.is_zero() or modulus.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    modulus = modulus.monic()
    units = [h for h in _residues(field, modulus)
             if poly_gcd(h, modulus) == Poly.one(field)]
    if len(units) > budget:
        raise BudgetError(f"unit group of size {len(units)} over budget {budget}")
    return decompose_abelian_group(units, lambda a, b: (a * b) % modulus, budget)


def _residues(field: Field, modulus: Poly):
    d = int(modulus.degree)
    for idx in range(field.q ** d):
        yield Poly.from_index(field, idx)


def dirichlet_characters(modulus: Poly, budget: int = 100_000) -> list:
    """All phi(g) characters mod g; index 0 is the principal character."""
    field = modulus.field
    structure = unit_group(field, modulus, budget)
    out = []
    for exps in itertools.product(*(range(d) for d in structure.orders)):
        out.append(DirichletCharacter(field, modulus.monic(), structure, exps))
    return out


# -- short interval characters -------------------------------------------------


def r_s_group(field: Field, s: int, budget: int = 100_000) -> AbelianGroupStructure:
    """R_s: tuples (a_1..a_s) as series 1 + a_1/x + ... under truncated product."""
    if s < 0:
        raise ValueError("s must be >= 0")
    if field.q ** s > budget:
        raise BudgetError(f"R_s of size {field.q ** s} over budget {budget}")
    add, mul = field.add_py, field.mul_py

    def op(a, b):
        c = []
        for k in range(1, s + 1):
            acc = add[a[k - 1]][b[k - 1]]
            for i in range(1, k):
                acc = add[acc][mul[a[i - 1]][b[k - i - 1]]]
            c.append(acc)
        return tuple(c)

    elements = list(itertools.product(range(field.q), repeat=s))
    return decompose_abelian_group(elements, op, budget)


def top_coefficient_tuple(field: Field, g: Poly, s: int) -> tuple:
    """Normalized top coefficients (g_{d-1}/g_d, ..., g_{d-s}/g_d), zero-padded."""
    if g.is_zero():
        raise ValueError("top coefficients of the zero polynomial are undefined")
    d = int(g.degree)
    inv = field.inv_py[g.coeffs[-1]]
    mul = field.mul_py
    return tuple(mul[g.coeff(d - i)][inv] for i in range(1, s + 1))


class ShortIntervalCharacter:
    """Multiplicative, depends only on the s+1 highest coefficients, units -> 1."""

    def __init__(self, field: Field, s: int, structure, exponents: tuple):
        self.field = field
        self.s = s
        self.structure = structure
        self.exponents = tuple(exponents)
        self._table, self.order = _character_table(structure, self.exponents)
        self._length = None

    @property
    def is_principal(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @property
    def length(self) -> int:
        """Effective length: least s' with triviality on the zero-prefix subgroup."""
        if self._length is None:
            self._length = self._effective_length()
        return self._length

    def _effective_length(self) -> int:
        for s_eff in range(self.s + 1):
            trivial = True
            for tail in itertools.product(range(self.field.q), repeat=self.s - s_eff):
                el = (0,) * s_eff + tail
                if self._table[el] != 0:
                    trivial = False
                    break
            if trivial:
                return s_eff
        return self.s

    def exponent(self, g: Poly) -> int:
        return self._table[top_coefficient_tuple(self.field, g, self.s)]

    def turns(self, g: Poly) -> Fraction:
        return Fraction(self.exponent(g), self.order)

    def __call__(self, g: Poly) -> complex:
        return complex(self.field.unit_roots(self.order)[self.exponent(g)])

    def descriptor(self) -> dict:
        return {"s": self.s, "index": list(self.exponents),
                "orders": list(self.structure.orders)}

    def __repr__(self):
        return f"ShortIntervalCharacter(s={self.s}, index {self.exponents})"


def short_interval_characters(field: Field, s: int, budget: int = 100_000) -> list:
    """All q^s characters of R_s; index 0 is the trivial one."""
    structure = r_s_group(field, s, budget)
    out = []
    for exps in itertools.product(*(range(d) for d in structure.orders)):
        out.append(ShortIntervalCharacter(field, s, structure, exps))
    return out


# -- degree twists and unit characters ------------------------------------------


@dataclass(frozen=True)
class DegreeTwist:
    """e_theta: g -> exp(2*pi*i*theta*deg g); exact when theta is a Fraction."""

    theta: Fraction | float

    def turns(self, degree: int) -> Fraction:
        return (Fraction(self.theta) * degree) % 1

    def __call__(self, degree: int) -> complex:
        return turns_to_complex(self.turns(degree))


class UnitCharacter:
    """A character of F_q^* applied to the leading coefficient.

    Covers the alternative multiplicative completion of short-interval
    characters; the default Hayes product leaves it out (units -> 1).
    """

    def __init__(self, field: Field, index: int):
        self.field = field
        self.index = index % (field.q - 1) if field.q > 1 else 0
        self.order = field.q - 1
        gen = self._least_generator(field)
        self.dlog = {1: 0}
        x = gen
        t = 1
        while x != 1:
            self.dlog[x] = t
            x = field.mul(x, gen)
            t += 1

    @staticmethod
    def _least_generator(field: Field) -> int:
        target = field.q - 1
        for c in range(1, field.q):
            x, t = c, 1
            while x != 1:
                x = field.mul(x, c)
                t += 1
            if t == target:
                return c
        raise AssertionError("F_q^* has a generator")

    def turns(self, c: int) -> Fraction:
        if self.order <= 1:
            return Fraction(0)
        return Fraction(self.index * self.dlog[c], self.order) % 1

    def __call__(self, c: int) -> complex:
        return complex(self.field.unit_roots(max(self.order, 1))[
            (self.index * self.dlog[c]) % self.order if self.order > 1 else 0])


# -- Hayes products -------------------------------------------------------------


class HayesCharacter:
    """chi * xi * e_theta (optionally times a unit character on the lc)."""

    def __init__(self, field: Field, dirichlet: DirichletCharacter | None = None,
                 short: ShortIntervalCharacter | None = None,
                 twist: DegreeTwist | None = None,
                 unit: UnitCharacter | None = None):
        for part in (dirichlet, short, unit):
            if part is not None and part.field != field:
                raise ValueError("component over a different field")
        self.field = field
        self.dirichlet = dirichlet
        self.short = short
        self.twist = twist
        self.unit = unit

    @classmethod
    def trivial(cls, field: Field):
        return cls(field)

    @property
    def is_trivial(self) -> bool:
        return ((self.dirichlet is None or self.dirichlet.is_principal
                 and self.dirichlet.modulus.degree == 0)
                and (self.short is None or self.short.is_principal)
                and (self.twist is None or Fraction(self.twist.theta) == 0)
                and (self.unit is None or self.unit.index == 0))

    def turns(self, g: Poly):
        """Total turns in [0,1), or None when the value is zero."""
        if g.is_zero():
            raise ValueError("Hayes characters are evaluated on nonzero polynomials")
        total = Fraction(0)
        if self.dirichlet is not None:
            t = self.dirichlet.turns(g)
            if t is None:
                return None
            total += t
        if self.short is not None:
            total += self.short.turns(g)
        if self.twist is not None:
            total += self.twist.turns(int(g.degree))
        if self.unit is not None:
            total += self.unit.turns(g.lc())
        return total % 1

    def __call__(self, g: Poly) -> complex:
        t = self.turns(g)
        if t is None:
            return 0j
        return turns_to_complex(t)

    def descriptor(self) -> dict:
        theta = None
        if self.twist is not None:
            th = self.twist.theta
            theta = str(Fraction(th)) if isinstance(th, Fraction) else float(th)
        return {
            "dirichlet": self.dirichlet.descriptor() if self.dirichlet else None,
            "short": self.short.descriptor() if self.short else None,
            "theta": theta,
            "unit_index": self.unit.index if self.unit else None,
        }

    def __repr__(self):
        bits = []
        if self.dirichlet is not None:
            bits.append(f"chi(mod {self.dirichlet.modulus})[{self.dirichlet.exponents}]")
        if self.short is not None:
            bits.append(f"xi(s={self.short.s})[{self.short.exponents}]")
        if self.twist is not None:
            bits.append(f"e_{self.twist.theta}")
        if self.unit is not None:
            bits.append(f"unit[{self.unit.index}]")
        return "HayesCharacter(" + (" * ".join(bits) if bits else "trivial") + ")"


def eval_hayes(H: HayesCharacter, g: Poly) -> complex:
    """Value of the Hayes product at g; zero exactly off the chi-units."""
    return H(g)
