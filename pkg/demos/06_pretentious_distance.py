#!/usr/bin/env python3
"""Pretentious distance, its minimization over Hayes products, Euler products.

The distance D(f, g; N) sums q^{-deg p} (1 - Re f(p) conj g(p)) over
irreducibles of degree <= N.  A function close to some chi * xi * e_theta
is detected by the minimizer; a genuinely aperiodic candidate drifts away
from every such product as N grows.
"""

from fractions import Fraction

from ffmult import (DegreeTwist, HayesCharacter, build_field, builtin,
                    from_character, halasz_product, mean_value,
                    min_distance_over_hayes, pretentious_distance)

F2 = build_field(2, 1)
F3 = build_field(3, 1)

print("D(mu, 1; N) over F_2 (strictly increasing, divergent)")
mu, one = builtin(F2, "moebius"), builtin(F2, "one")
for N in (1, 2, 5, 10, 15, 20):
    print(f"  N = {N:2d}: {pretentious_distance(mu, one, N):.4f}")

print("\nMinimizing over Hayes products (modulus deg <= 2, length <= 2)")
for N in (2, 5, 8):
    res = min_distance_over_hayes(mu, N, 2, 2, 32)
    print(f"  N = {N}: M = 1 + min D = {res.M:.4f}  "
          f"(argmin theta = {res.argmin['theta']})")

print("\nA function that pretends: e_{1/3} is found exactly")
f = from_character(HayesCharacter(F3, twist=DegreeTwist(Fraction(1, 3))))
res = min_distance_over_hayes(f, 5, 1, 1, [0.0, 1 / 3, 2 / 3])
print(f"  min distance {res.min_distance:.2e} at theta = {res.argmin['theta']:.4f}")

print("\nEuler products P(f, n) = prod (1 - q^-d) sum_k f(p^k) q^(-kd)")
for n in (5, 10, 20):
    print(f"  P(1, {n:2d}) over F_3 = {halasz_product(builtin(F3, 'one'), n):.12f}")
for n in (2, 4, 6, 8):
    print(f"  |P(mu, {n})| over F_2 = {abs(halasz_product(mu, n)):.6f}"
          "  (each local factor is (1 - 2^-d)^2 < 1)")

print("\nMean values over monic polynomials of fixed degree")
for theta in (0.25, 0.7):
    f = from_character(HayesCharacter(F3, twist=DegreeTwist(theta)))
    print(f"  e_{theta}: mean over monic degree 5 = {mean_value(f, 5, 'monic'):.6f}"
          f"  (expected phase 2*pi*{theta}*5)")
