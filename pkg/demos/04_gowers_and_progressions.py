#!/usr/bin/env python3
"""Gowers uniformity norms and the arithmetic-progression inequality."""

import numpy as np

from ffmult import (LaurentTruncation, PolynomialPhase, ap_correlation,
                    build_field, gowers_norm, phase_character_array, u2_fourier)

F3 = build_field(3, 1)
F5 = build_field(5, 1)
rng = np.random.default_rng(7)


def random_bounded(size):
    return rng.uniform(0, 1, size) * np.exp(2j * np.pi * rng.uniform(0, 1, size))


print("U^k of structured functions on G_4 over F_3 (81 points)")
ones = np.ones(81, dtype=complex)
print("  constant 1:   U^1, U^2, U^3 =",
      [round(gowers_norm(F3, 4, ones, k), 6) for k in (1, 2, 3)])
ch = phase_character_array(
    PolynomialPhase.from_linear(LaurentTruncation(F3, (1, 0, 0, 0)), 4))
print("  additive character: U^1 =", round(gowers_norm(F3, 4, ch, 1), 10),
      " U^2 =", round(gowers_norm(F3, 4, ch, 2), 10))

print("\nBrute-force cube average vs character-transform route (U^2)")
for _ in range(3):
    f = random_bounded(81)
    a, b = gowers_norm(F3, 4, f, 2), u2_fourier(F3, 4, f)
    print(f"  cube {a:.12f}   transform {b:.12f}   gap {abs(a - b):.2e}")

print("\nMonotonicity U^1 <= U^2 <= U^3 on random 1-bounded functions")
for _ in range(4):
    f = random_bounded(81)
    u1, u2, u3 = (gowers_norm(F3, 4, f, k) for k in (1, 2, 3))
    print(f"  {u1:.4f} <= {u2:.4f} <= {u3:.4f}")

print("\n3-term progression means bounded by U^2 of the last function (F_5^3)")
for _ in range(4):
    fs = [random_bounded(125) for _ in range(3)]
    res = ap_correlation(F5, 3, fs)
    print(f"  |mean| = {abs(res.mean):.4f}  <=  U^2(f_3) = {res.gowers_bound:.4f}"
          f"   ({'ok' if res.satisfied else 'VIOLATED'})")
