#!/usr/bin/env python3
"""The exact linear-phase dichotomy.

For a Laurent tail beta, the full sum over G_n of alpha_1((beta g)_{-1}) is
q^n when every coefficient beta_{-1}..beta_{-n} vanishes and 0 otherwise:
the inner sum over any coordinate hit by a nonzero coefficient runs over a
complete character sum.  The computation below is brute force (every g
contributes through its exact trace exponent), so the dichotomy is a check
on the machinery, not an assumption.
"""

import random

from ffmult import LaurentTruncation, build_field, linear_phase_sum

for q, p, r in ((2, 2, 1), (3, 3, 1), (4, 2, 2)):
    F = build_field(p, r)
    rng = random.Random(q)
    print(f"\nF_{q}, n = 6: ten random tails")
    n = 6
    for i in range(10):
        if i < 7:
            beta = LaurentTruncation.random(F, n + 2, rng)
        else:  # force the vanishing branch
            beta = LaurentTruncation(
                F, (0,) * n + tuple(rng.randrange(1, F.q) for _ in range(2)))
        s = linear_phase_sum(F, beta, n)
        window = "zero" if beta.vanishes_through(n) else "hit "
        print(f"  window {window}  sum = {s.real:10.3f}{s.imag:+.1e}j   "
              f"(expect {F.q ** n if window == 'zero' else 0})")
