#!/usr/bin/env python3
"""The three character families and their Hayes products.

Dirichlet characters live on residues mod g; short-interval characters see
only the top s+1 coefficients; degree twists e_theta depend on the degree
alone.  All values are exact roots of unity (Fraction turns inside), so
multiplicativity checks below hold with zero tolerance.
"""

from fractions import Fraction
import random

from ffmult import (DegreeTwist, HayesCharacter, Poly, build_field,
                    dirichlet_characters, short_interval_characters)

F3 = build_field(3, 1)

print("Dirichlet characters mod x^2+1 over F_3")
modulus = Poly(F3, (1, 0, 1))
chars = dirichlet_characters(modulus)
print(f"  phi(x^2+1) = {len(chars)} characters; index 0 is principal:",
      chars[0].is_principal)
residues = [Poly.from_index(F3, i) for i in range(9)]
print("  orthogonality matrix (row x col inner products):")
for c1 in chars:
    row = []
    for c2 in chars:
        v = sum(c1(h) * c2(h).conjugate() for h in residues)
        row.append(f"{v.real:5.1f}")
    print("   ", " ".join(row))

print("\nShort-interval characters of length <= 2 over F_3")
xis = short_interval_characters(F3, 2)
print(f"  {len(xis)} characters (= q^s); effective lengths:",
      sorted(xi.length for xi in xis))
xi = xis[4]
rng = random.Random(1)
g = Poly(F3, (2, 1, 0, 2, 1))
h = g.scalar_mul(2) + Poly(F3, (1, 2))     # same top-3 coefficients
print(f"  xi(g) == xi(h) for g, h sharing top coefficients: {xi(g) == xi(h)}")
a = Poly.from_index(F3, rng.randrange(1, 81))
b = Poly.from_index(F3, rng.randrange(1, 81))
print("  exact multiplicativity in turns:",
      xi.turns(a * b) == (xi.turns(a) + xi.turns(b)) % 1)

print("\nHayes products chi * xi * e_theta")
H = HayesCharacter(F3, dirichlet=chars[1], short=xis[1],
                   twist=DegreeTwist(Fraction(1, 3)))
print("  value at x^3+2 :", H(Poly(F3, (2, 0, 0, 1))))
print("  value at a multiple of the modulus:", H(modulus * Poly.x(F3)))
trivial = HayesCharacter.trivial(F3)
print("  trivial product is identically 1:",
      all(trivial(Poly.from_index(F3, i)) == 1 for i in range(1, 81)))
