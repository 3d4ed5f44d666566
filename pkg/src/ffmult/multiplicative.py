"""Multiplicative functions on F_q[x], evaluated through factorization.

A function here is determined by its rule on prime powers (irreducible p,
exponent k), a rule on units (default: constant 1, so built-ins are
unit-invariant), and the convention f(0) = 0.  Values at arbitrary
polynomials come from the factor table and are memoized.

Built-ins: moebius (mu(p) = -1, zero on non-squarefree), liouville
(lambda(p^k) = (-1)^k), one.  Character-derived functions wrap a Hayes
product directly (completely multiplicative).  Random candidates assign
seeded i.i.d. values to each irreducible and extend completely
multiplicatively; the same seed always reproduces the same function.

Functions whose prime-power values depend only on (deg p, k) carry a
degree profile; the Euler-product statistics use it to group local factors
by degree instead of enumerating irreducibles.
"""

from __future__ import annotations

import cmath
import random

from .characters import HayesCharacter
from .fields import Field
from .polys import Poly, factor, irreducibles_of_degree

_CACHE_CAP_DEFAULT = 1 << 20


class MultiplicativeFunction:
    """f with f(gh) = f(g)f(h) on coprime pairs, f(0) = 0, f(1) = 1."""

    def __init__(self, field: Field, prime_power_rule, *, name: str,
                 completely_multiplicative: bool = False, unit_rule=None,
                 eval_override=None, degree_profile=None, descriptor=None,
                 cache_cap: int = _CACHE_CAP_DEFAULT):
        self.field = field
        self.prime_power_rule = prime_power_rule
        self.name = name
        self.completely_multiplicative = completely_multiplicative
        self.unit_rule = unit_rule or (lambda c: 1.0 + 0j)
        self.eval_override = eval_override
        self.degree_profile = degree_profile
        self._descriptor = descriptor or {"kind": "custom", "name": name}
        self._cache: dict = {}
        self._cache_cap = cache_cap

    @property
    def kind(self) -> str:
        return "completely multiplicative" if self.completely_multiplicative else "multiplicative"

    def __call__(self, g: Poly) -> complex:
        if g.is_zero():
            return 0j
        key = g.coeffs
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if self.eval_override is not None:
            val = complex(self.eval_override(g))
        elif g.degree == 0:
            val = complex(self.unit_rule(g.coeffs[0]))
        else:
            unit, parts = factor(g)
            val = complex(self.unit_rule(unit))
            for p, k in parts:
                val *= self.prime_power_rule(p, k)
        if len(self._cache) < self._cache_cap:
            self._cache[key] = val
        return val

    def on_prime_power(self, p: Poly, k: int) -> complex:
        return complex(self.prime_power_rule(p, k))

    def descriptor(self) -> dict:
        return dict(self._descriptor)

    def __repr__(self):
        return f"MultiplicativeFunction({self.name} over {self.field!r})"


def builtin(field: Field, name: str) -> MultiplicativeFunction:
    """moebius | liouville | one."""
    if name == "one":
        return MultiplicativeFunction(
            field, lambda p, k: 1.0 + 0j, name="one",
            completely_multiplicative=True,
            degree_profile=lambda d, k: 1.0 + 0j,
            descriptor={"kind": "builtin", "name": "one"})
    if name == "moebius":
        return MultiplicativeFunction(
            field, lambda p, k: (-1.0 + 0j) if k == 1 else 0j, name="moebius",
            degree_profile=lambda d, k: (-1.0 + 0j) if k == 1 else 0j,
            descriptor={"kind": "builtin", "name": "moebius"})
    if name == "liouville":
        return MultiplicativeFunction(
            field, lambda p, k: complex((-1.0) ** k), name="liouville",
            completely_multiplicative=True,
            degree_profile=lambda d, k: complex((-1.0) ** k),
            descriptor={"kind": "builtin", "name": "liouville"})
    raise ValueError(f"unknown builtin {name!r}; have moebius, liouville, one")


def from_character(H: HayesCharacter) -> MultiplicativeFunction:
    """The Hayes product as a completely multiplicative function."""
    profile = None
    if H.dirichlet is None and H.short is None and H.unit is None:
        theta = H.twist.theta if H.twist is not None else 0

        def profile(d, k, _theta=theta):
            return cmath.exp(2j * cmath.pi * float(_theta) * d * k)

    return MultiplicativeFunction(
        H.field, lambda p, k: H(p) ** k, name="hayes",
        completely_multiplicative=True, eval_override=H,
        unit_rule=lambda c: H(Poly.constant(H.field, c)),
        degree_profile=profile,
        descriptor={"kind": "character", "hayes": H.descriptor()})


def random_on_irreducibles(field: Field, seed: int,
                           value_set: str = "pm1") -> MultiplicativeFunction:
    """Seeded i.i.d. values on irreducibles, extended completely multiplicatively.

    value_set: "pm1" for uniform {+1, -1}, "unit" for uniform on the circle.
    Values are drawn per degree block in enumeration order, so they do not
    depend on evaluation order.
    """
    if value_set not in ("pm1", "unit"):
        raise ValueError("value_set must be 'pm1' or 'unit'")
    tables: dict[int, dict] = {}

    def value_of(p: Poly) -> complex:
        d = int(p.degree)
        if d not in tables:
            # arithmetic mixing, not tuple hashing: str hashes are salted
            # per process and would break cross-run reproducibility
            key = ((seed * 1_000_003 + field.q) * 1_000_003 + d) * 2
            rng = random.Random(key + (1 if value_set == "unit" else 0))
            block = {}
            for irr in irreducibles_of_degree(field, d):
                if value_set == "pm1":
                    block[irr] = complex(rng.choice((1.0, -1.0)))
                else:
                    block[irr] = cmath.exp(2j * cmath.pi * rng.random())
            tables[d] = block
        return tables[d][p]

    return MultiplicativeFunction(
        field, lambda p, k: value_of(p) ** k, name=f"random[{seed},{value_set}]",
        completely_multiplicative=True,
        descriptor={"kind": "random", "seed": seed, "values": value_set})


def twist(f: MultiplicativeFunction, H: HayesCharacter,
          conjugate: bool = False) -> MultiplicativeFunction:
    """Pointwise product f*H, or f*conj(H) with conjugate=True."""

    def over(g: Poly) -> complex:
        h = H(g)
        return f(g) * (h.conjugate() if conjugate else h)

    sign = "conj " if conjugate else ""
    return MultiplicativeFunction(
        f.field,
        lambda p, k: f.prime_power_rule(p, k) * ((H(p) ** k).conjugate()
                                                 if conjugate else H(p) ** k),
        name=f"{f.name}*{sign}hayes",
        completely_multiplicative=f.completely_multiplicative,
        eval_override=over,
        unit_rule=lambda c: f.unit_rule(c) * (H(Poly.constant(f.field, c)).conjugate()
                                              if conjugate else H(Poly.constant(f.field, c))),
        descriptor={"kind": "twist", "base": f.descriptor(),
                    "hayes": H.descriptor(), "conjugate": conjugate})
