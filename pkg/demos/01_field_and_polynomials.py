#!/usr/bin/env python3
"""Tour of the exact arithmetic layer: F_q, F_q[x], irreducibles, factorization.

Everything here is table-driven integer arithmetic; no floats appear until
character sums are formed, which is what makes the downstream statistics
exactly reproducible.
"""

from ffmult import (Poly, build_field, factor, g_n, irreducible_count,
                    irreducibles_of_degree, monic_of_degree, p_k)


def banner(title):
    print("\n" + "=" * 72)
    print(title)
    print("=" * 72)


banner("Fields: F_4 = F_2[u]/(u^2+u+1), chosen deterministically")
F4 = build_field(2, 2)
print("modulus coefficients (low to high):", F4.modulus)
u = F4.element(2)
print("u * u =", u * u, "   u^3 =", u ** 3)
print("trace table:", [F4.trace(a) for a in range(4)], "(additive, onto F_2)")

banner("Polynomials over F_2: ring arithmetic and the char-2 square")
F2 = build_field(2, 1)
x, one = Poly.x(F2), Poly.one(F2)
print("(x+1)^2 =", (x + one) * (x + one))
print("divmod(x^3, x^2) =", divmod(x ** 3, x ** 2))

banner("Enumeration: G_n, monic slices, and the two-degree prime window P_k")
print("|G_3| over F_2:", len(list(g_n(F2, 3))), "(contains 0)")
print("monic of degree 0:", list(monic_of_degree(F2, 0)))
print("P_3 over F_2 (irreducibles of degree 3 or 4):")
for p in p_k(F2, 3):
    print("   ", p)

banner("Counting irreducibles: divisor-sum formula vs exhaustive sieve")
F3 = build_field(3, 1)
for F, d in ((F2, 3), (F2, 4), (F3, 2), (F3, 5)):
    formula = irreducible_count(F, d)
    sieved = len(irreducibles_of_degree(F, d))
    print(f"  q={F.q} d={d}: formula {formula}, sieve {sieved}, "
          f"agree: {formula == sieved}")

banner("Factorization by trial division against the cached table")
g = Poly(F2, (1, 0, 1))  # x^2 + 1
unit, parts = factor(g)
print(f"x^2+1 over F_2 = unit {unit} *",
      " * ".join(f"({p})^{k}" for p, k in parts))
g2 = (x + one) * Poly(F2, (1, 1, 0, 1)) ** 2
unit, parts = factor(g2)
print(f"{g2} = unit {unit} *", " * ".join(f"({p})^{k}" for p, k in parts))
