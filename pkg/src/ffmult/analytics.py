"""Correlation, norm, distance and criterion statistics over G_n.

Everything here is an exhaustive (or explicitly seeded-sampled) desk-scale
computation; nothing asserts asymptotics, the ops only report the numbers
whose trends the theory predicts.  Conventions shared by all ops:

* G_n is indexed canonically (polynomial <-> base-q index), so a function
  on G_n can be a callable on Poly or a complex array in index order.
* Multiplicative inputs use f(0) = 0; the `domain` selector picks between
  all of G_n ("all"), G_n minus 0 ("nonzero"), and the monic top slice of
  degree n-1 ("monic").
* Means are formed with exact compensated summation (math.fsum) in scalar
  paths and numpy pairwise summation in vectorized paths; both are
  bit-stable and partition-invariant.
* Gowers norms: the U^k brute-force cube average is computed by iterating
  multiplicative derivatives (an exact regrouping of the sum over
  (x, h_1..h_k)); the independent U^2 route goes through the additive
  character transform (multidimensional length-p DFT) and Parseval.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import BudgetError
from .fields import Field
from .laurent import LaurentTruncation, linear_form_table
from .multiplicative import MultiplicativeFunction
from .phases import PolynomialPhase, derivative_form
from .polys import Poly, g_n, irreducible_count, irreducibles_of_degree, monic_of_degree, p_k


# -- group indexing -----------------------------------------------------------


class GnIndex:
    """Vectorized additive-group arithmetic on G_n index arrays."""

    def __init__(self, field: Field, n: int):
        self.field = field
        self.n = n
        self.size = field.q ** n
        if self.size > field.enumeration_budget:
            raise BudgetError(f"G_{n} over the enumeration budget")
        self._table = None

    def digits(self, idx):
        q = self.field.q
        return [((idx // q ** j) % q).astype(np.int16) for j in range(self.n)]

    def add(self, a, b):
        q = self.field.q
        add_t = self.field.add_table
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for j in range(self.n):
            da = (a // q ** j) % q
            db = (b // q ** j) % q
            out += add_t[da, db].astype(np.int64) * q ** j
        return out

    def smul(self, c: int, a):
        q = self.field.q
        mul_row = self.field.mul_table[c]
        out = np.zeros(np.shape(a), dtype=np.int64)
        for j in range(self.n):
            da = (a // q ** j) % q
            out += mul_row[da].astype(np.int64) * q ** j
        return out

    @property
    def table(self) -> np.ndarray:
        """Full addition table; only for small groups (shift rows for U^k)."""
        if self._table is None:
            if self.size > 4096:
                raise BudgetError(f"addition table for |G| = {self.size} too large")
            idx = np.arange(self.size, dtype=np.int64)
            self._table = self.add(idx[:, None], idx[None, :])
        return self._table


def sample_on_gn(field: Field, n: int, f) -> np.ndarray:
    """Materialize a function on G_n to a complex array in index order."""
    size = field.q ** n
    if isinstance(f, np.ndarray):
        if f.shape != (size,):
            raise ValueError(f"array has shape {f.shape}, expected ({size},)")
        return f.astype(np.complex128)
    if isinstance(f, PolynomialPhase):
        if f.n != n:
            raise ValueError(f"phase lives on G_{f.n}, asked to sample on G_{n}")
        return phase_character_array(f)
    out = np.empty(size, dtype=np.complex128)
    for idx in range(size):
        out[idx] = f(Poly.from_index(field, idx))
    return out


def phase_character_array(P: PolynomialPhase, s: int = 1) -> np.ndarray:
    """alpha_s(P(g)) over G_n as a complex array (exact exponents inside)."""
    F = P.field
    return F.roots[P.exponent_values_on_gn(s)]


def hayes_on_gn(H, n: int) -> np.ndarray:
    """A Hayes character sampled on G_n (value 0 at g = 0)."""
    field = H.field
    out = np.zeros(field.q ** n, dtype=np.complex128)
    for idx in range(1, field.q ** n):
        out[idx] = H(Poly.from_index(field, idx))
    return out


def periodic_from_residues(field: Field, modulus: Poly, values) -> callable:
    """The periodic sequence g -> values[g mod modulus] (values by residue index)."""
    values = list(values)

    def t(g: Poly) -> complex:
        return values[(g % modulus).to_index()]

    return t


def composite_on_gn(field: Field, n: int, func, phases) -> np.ndarray:
    """func(P_1(g), ..., P_r(g)) over G_n, for any func on encoded values.

    Covers test functions built from several polynomial phases at once.
    """
    value_arrays = [P.values_on_gn() for P in phases]
    size = field.q ** n
    out = np.empty(size, dtype=np.complex128)
    for idx in range(size):
        out[idx] = func(*(int(v[idx]) for v in value_arrays))
    return out


def _fsum_complex(parts) -> complex:
    re, im = [], []
    for z in parts:
        z = complex(z)
        re.append(z.real)
        im.append(z.imag)
    return complex(math.fsum(re), math.fsum(im))


# -- correlation ----------------------------------------------------------------


@dataclass
class CorrelationSeries:
    """Rows of (n, mean, count) with enough metadata to re-derive them."""

    domain: str
    rows: list = dc_field(default_factory=list)
    metadata: dict = dc_field(default_factory=dict)

    def append(self, n: int, mean: complex, count: int):
        self.rows.append((n, mean, count))

    def abs_means(self):
        return [abs(m) for _, m, _ in self.rows]


def domain_indices(field: Field, n: int, domain: str):
    """Index iterator for the chosen slice of G_n."""
    size = field.q ** n
    if domain == "all":
        return range(size)
    if domain == "nonzero":
        return range(1, size)
    if domain == "monic":
        base = field.q ** (n - 1)
        return range(base, 2 * base)
    raise ValueError(f"unknown domain {domain!r}")


def correlate(field: Field, nu, t, n: int, domain: str = "all") -> complex:
    """Mean of nu(g) * t(g) over the chosen slice of G_n.

    `nu` is a callable on Poly (typically a MultiplicativeFunction); `t` is
    a callable on Poly, an index-order array on G_n, or a PolynomialPhase
    (meaning alpha_1 applied to it).
    """
    size = field.q ** n
    if size > field.enumeration_budget:
        raise BudgetError(f"G_{n} over the enumeration budget")
    if isinstance(t, (np.ndarray, PolynomialPhase)):
        t_arr = sample_on_gn(field, n, t)
        t_of = lambda idx, g: t_arr[idx]
    else:
        t_of = lambda idx, g: t(g)
    parts = []
    count = 0
    for idx in domain_indices(field, n, domain):
        g = Poly.from_index(field, idx)
        parts.append(complex(nu(g)) * complex(t_of(idx, g)))
        count += 1
    return _fsum_complex(parts) / count


# -- Gowers norms -----------------------------------------------------------------


def gowers_norm(field: Field, n: int, f, k: int, budget: int = 10 ** 8) -> float:
    """U^k norm by the 2^k-corner cube average over (x, h_1, ..., h_k).

    The sum is evaluated by iterating multiplicative derivatives
    f -> f(.+h) conj f(.), which regroups the corner sum exactly; cost is
    |G|^k vector operations, and the budget guards |G|^{k+1} corner tuples.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    size = field.q ** n
    if size ** (k + 1) > budget:
        raise BudgetError(f"U^{k} brute force needs {size ** (k + 1)} corner "
                          f"evaluations, over budget {budget}")
    arr = sample_on_gn(field, n, f)
    G = GnIndex(field, n)
    shift = G.table

    def cube_mean(v: np.ndarray, kk: int) -> float:
        if kk == 1:
            m = v.mean()
            return float((m * m.conjugate()).real)
        parts = np.empty(size, dtype=np.float64)
        for h in range(size):
            parts[h] = cube_mean(v[shift[h]] * v.conjugate(), kk - 1)
        return float(parts.mean())

    val = max(cube_mean(arr, k), 0.0)
    return val ** (1.0 / 2 ** k)


def u2_fourier(field: Field, n: int, f, budget: int = 1 << 20) -> float:
    """U^2 via the character transform: (sum |f_hat|^4)^(1/4).

    The characters of G_n are alpha_1(<x, xi>) under the trace pairing;
    re-indexed through the F_p-coordinate dual basis they become the
    standard multidimensional length-p DFT, which is what numpy computes.
    """
    size = field.q ** n
    if size > budget:
        raise BudgetError(f"transform size {size} over budget {budget}")
    arr = sample_on_gn(field, n, f).reshape((field.p,) * (field.r * n))
    hat = np.fft.fftn(arr) / size
    return float(np.sum(np.abs(hat) ** 4) ** 0.25)


def fourier_coefficients(field: Field, n: int, f) -> np.ndarray:
    """All normalized character coefficients of f (for Parseval checks)."""
    size = field.q ** n
    arr = sample_on_gn(field, n, f).reshape((field.p,) * (field.r * n))
    return (np.fft.fftn(arr) / size).ravel()


# -- arithmetic-progression correlation ---------------------------------------------


@dataclass
class ApResult:
    mean: complex
    gowers_bound: float
    satisfied: bool
    k: int


def ap_correlation(field: Field, n: int, fs, budget: int = 10 ** 8,
                   tolerance: float = 1e-9) -> ApResult:
    """E_{x,y in G_n} prod_j f_j(x + (j-1)y), checked against U^{k-1}(f_k).

    Requires k < char(F_q), so that j*y = 0 has only the trivial solution
    for every j < k.
    """
    fs = list(fs)
    k = len(fs)
    if k < 2:
        raise ValueError("need at least two functions")
    if k >= field.p:
        raise ValueError(f"k = {k} >= char = {field.p}: torsion condition fails")
    size = field.q ** n
    if size ** 2 > budget:
        raise BudgetError("pair enumeration over budget")
    arrays = [sample_on_gn(field, n, f) for f in fs]
    G = GnIndex(field, n)
    idx = np.arange(size, dtype=np.int64)
    prod = np.repeat(arrays[0][:, None], size, axis=1)
    for j in range(1, k):
        pos = G.add(idx[:, None], G.smul(j % field.p, idx)[None, :])
        prod = prod * arrays[j][pos]
    mean = complex(prod.mean())
    bound = gowers_norm(field, n, arrays[-1], k - 1, budget=budget)
    return ApResult(mean, bound, abs(mean) <= bound + tolerance, k)


# -- Katai statistic -------------------------------------------------------------


def katai_statistic(field: Field, f, n: int, k: int, pair_set: str = "P_k",
                    per_pair: bool = False) -> float:
    """Normalized double sum over irreducible pairs certifying orthogonality.

    sum_{a,b} |sum_{g in G_m} f(ag) conj f(bg)| with m = min(n-deg a, n-deg b),
    divided by |pairs|^2 * q^{n-k}.  The flat q^{n-k} weight is the default;
    per_pair=True divides each inner sum by its own q^m instead, which
    balances the two degrees in the pair window (useful for sensitivity
    studies, and the mode whose diagonal share is exactly 1/|pairs|).

    pair_set "P_k" uses irreducibles of degree k and k+1; "G_{k+1}" uses all
    nonzero polynomials of degree <= k.
    """
    if field.q ** (n - k) > field.enumeration_budget:
        raise BudgetError(f"inner sums over G_{n - k} exceed the enumeration budget")
    if pair_set == "P_k":
        base = list(p_k(field, k))
    elif pair_set == "G_{k+1}":
        base = [Poly.from_index(field, i) for i in range(1, field.q ** (k + 1))]
    else:
        raise ValueError("pair_set must be 'P_k' or 'G_{k+1}'")
    if not base:
        raise ValueError("empty pair set")
    if isinstance(f, np.ndarray):
        f_arr = f

        def f_of(g: Poly) -> complex:
            return complex(f_arr[g.to_index()])
    else:
        f_of = f
    total_parts = []
    for a in base:
        for b in base:
            m = n - int(max(a.degree, b.degree))
            if m < 0:
                raise ValueError("n too small for the chosen pair degrees")
            inner = []
            for gi in range(field.q ** m):
                g = Poly.from_index(field, gi)
                inner.append(complex(f_of(a * g)) * complex(f_of(b * g)).conjugate())
            mag = abs(_fsum_complex(inner))
            total_parts.append(mag / field.q ** m if per_pair else mag)
    total = math.fsum(total_parts)
    if per_pair:
        return total / len(base) ** 2
    return total / (len(base) ** 2 * field.q ** (n - k))


# -- derivative bias statistic ------------------------------------------------------


@dataclass
class RBiasResult:
    value: float
    imag_residual: float
    pairs: int
    inner_evaluations: int
    mode: str
    stderr: float | None = None


def r_bias_statistic(P: PolynomialPhase, n: int, k: int,
                     base_set: str = "G_{k+1}", mode: str = "exhaustive",
                     budget: int = 10 ** 8, max_pairs: int = 2000,
                     seed: int = 0, m: int | None = None) -> RBiasResult:
    """E_{a,b} E_{g in G_{n-k}^m} alpha_1(d^mP(a g) - d^mP(b g)).

    The inner form is m-linear in g for each fixed (a, b) (slot functionals
    compose with multiplication by a), so each inner mean is an exact bias
    computation.  The (a,b) average of the difference structure makes the
    statistic a modulus-squared average: real and nonnegative.  Declaring
    m above the structural degree makes d^mP vanish and the statistic is
    exactly 1.
    """
    field = P.field
    if m is None:
        m = P.degree
    if m < 1:
        raise ValueError("phase must have degree >= 1")
    dQ = derivative_form(P, m, verify=False)
    if base_set == "G_{k+1}":
        base = [Poly.from_index(field, i) for i in range(1, field.q ** (k + 1))]
    elif base_set == "P_k":
        base = list(p_k(field, k))
    else:
        raise ValueError("base_set must be 'G_{k+1}' or 'P_k'")
    inner_dim = n - k
    if inner_dim < 1:
        raise ValueError("n - k must be >= 1")
    inner_size = field.q ** (inner_dim * m)
    pairs = [(a, b) for a in base for b in base]
    mode_used = mode
    rng = np.random.default_rng(seed)
    if mode == "sampled" or len(pairs) > max_pairs:
        sel = rng.choice(len(pairs), size=min(max_pairs, len(pairs)), replace=False)
        pairs = [pairs[i] for i in sorted(sel)]
        mode_used = "sampled"
    if len(pairs) * inner_size > budget:
        raise BudgetError(f"{len(pairs)} pairs x {inner_size} inner evaluations "
                          f"over budget {budget}")
    scaled = {}
    for a in base:
        if a.coeffs not in scaled:
            scaled[a.coeffs] = dQ.scaled_by(a, (inner_dim,) * m)
    parts = []
    for a, b in pairs:
        diff = scaled[a.coeffs].minus(scaled[b.coeffs])
        counts = diff.exponent_counts()
        parts.append(complex(np.sum(counts * field.roots) / inner_size))
    mean = _fsum_complex(parts) / len(parts)
    stderr = None
    if mode_used == "sampled":
        vals = np.array(parts)
        stderr = float(np.abs(vals - vals.mean()).std() / math.sqrt(len(parts)))
    return RBiasResult(mean.real, abs(mean.imag), len(pairs),
                       len(pairs) * inner_size, mode_used, stderr)


# -- Turan-Kubilius ------------------------------------------------------------------


@dataclass
class TKResult:
    A: float
    lhs: float
    ratio: float
    n: int
    window: tuple


def turan_kubilius(field: Field, n: int, W: int, H: int) -> TKResult:
    """Variance of the windowed distinct-prime-divisor count on G_n.

    A = sum over irreducibles with W < deg p < H of q^{-deg p};
    lhs = sum over G_n of |#{p in window : p | g} - A|^2; ratio = lhs/(A q^n).
    """
    degrees = [d for d in range(W + 1, H) if d >= 1]
    primes = [p for d in degrees for p in irreducibles_of_degree(field, d)]
    if not primes:
        raise ValueError(f"no irreducibles with {W} < degree < {H}")
    size = field.q ** n
    if size > field.enumeration_budget:
        raise BudgetError(f"G_{n} over the enumeration budget")
    A = math.fsum(field.q ** -int(p.degree) for p in primes)
    counts = np.zeros(size, dtype=np.int32)
    q = field.q
    powers = q ** np.arange(n, dtype=np.int64)
    add_t, mul_t = field.add_table, field.mul_table
    for p in primes:
        d = int(p.degree)
        cof_size = q ** (n - d)
        cof = np.stack([((np.arange(cof_size, dtype=np.int64) // q ** j) % q).astype(np.int16)
                        for j in range(n - d)], axis=1)
        prod = np.zeros((cof_size, n), dtype=np.int16)
        for i, pc in enumerate(p.coeffs):
            if pc:
                seg = prod[:, i:i + n - d]
                prod[:, i:i + n - d] = add_t[seg, mul_t[pc][cof]]
        idx = prod.astype(np.int64) @ powers
        counts[idx] += 1
    dev = counts.astype(np.float64) - A
    lhs = float(np.sum(dev * dev))
    return TKResult(A, lhs, lhs / (A * size), n, (W, H))


# -- pretentious distance --------------------------------------------------------------


def _at_irreducible(f):
    """Evaluate at a monic irreducible without a factorization round trip."""
    if isinstance(f, MultiplicativeFunction):
        return lambda p: complex(f.on_prime_power(p, 1))
    return lambda p: complex(f(p))


def pretentious_distance(f, g, N: int, window_low: int = 0) -> float:
    """D(f, g; N): sqrt of sum over irreducibles with window_low <= deg <= N
    of q^{-deg p} (1 - Re f(p) conj g(p)), each summand clamped at >= 0."""
    field = f.field if isinstance(f, MultiplicativeFunction) else g.field
    f_at, g_at = _at_irreducible(f), _at_irreducible(g)
    parts = []
    for d in range(max(window_low, 1), N + 1):
        qd = float(field.q) ** -d
        for p in irreducibles_of_degree(field, d):
            term = 1.0 - (f_at(p) * g_at(p).conjugate()).real
            parts.append(qd * max(term, 0.0))
    return math.sqrt(max(math.fsum(parts), 0.0))


@dataclass
class MinDistanceResult:
    M: float
    min_distance: float
    argmin: dict
    N: int
    grid_size: int
    candidates: int


def min_distance_over_hayes(f, N: int, modulus_degree_bound: int,
                            length_bound: int, theta_grid=64,
                            budget: int = 100_000) -> MinDistanceResult:
    """1 + min over (chi, xi, theta) of D(f, chi xi e_theta; N).

    chi runs over all Dirichlet characters with deg(modulus) <= bound
    (modulus 1, i.e. no twist, included); xi over all characters of length
    <= length_bound; theta over a uniform grid (or an explicit list).
    """
    from .characters import (DirichletCharacter, dirichlet_characters,
                             short_interval_characters)
    field = f.field
    f_at = _at_irreducible(f)
    primes = []
    for d in range(1, N + 1):
        for p in irreducibles_of_degree(field, d):
            primes.append((d, p, f_at(p)))
    thetas = ([j / theta_grid for j in range(theta_grid)]
              if isinstance(theta_grid, int) else list(theta_grid))
    if not thetas:
        raise ValueError("theta grid must contain at least one point")
    chis = [DirichletCharacter.trivial(field)]
    for deg in range(1, modulus_degree_bound + 1):
        for mi in range(field.q ** deg):
            low = Poly.from_index(field, mi).coeffs
            modulus = Poly(field, low + (0,) * (deg - len(low)) + (1,))
            chis.extend(dirichlet_characters(modulus, budget))
    xis = short_interval_characters(field, length_bound, budget)
    weight_total = math.fsum(float(field.q) ** -d for d, _, _ in primes)
    best = None
    tried = 0
    for chi in chis:
        for xi in xis:
            # group the prime sums by degree so every theta costs O(N)
            by_degree = {}
            extra = 0.0  # chi(p) = 0 contributes a flat weight q^{-d}
            for d, p, fp in primes:
                z = chi(p) * xi(p)
                if z == 0:
                    extra += float(field.q) ** -d
                else:
                    by_degree[d] = by_degree.get(d, 0j) + float(field.q) ** -d * fp * z.conjugate()
            for theta in thetas:
                s = 0.0
                for d, zsum in by_degree.items():
                    s += (zsum * cmath.exp(-2j * cmath.pi * theta * d)).real
                dist_sq = max(weight_total - s, 0.0)
                # pairs with chi(p) = 0 hit the clamp exactly at weight q^{-d}
                tried += 1
                dist = math.sqrt(dist_sq)
                if best is None or dist < best[0]:
                    best = (dist, chi, xi, theta)
    dist, chi, xi, theta = best
    argmin = {"dirichlet": chi.descriptor() if chi.modulus.degree >= 1 else None,
              "short": xi.descriptor(), "theta": theta}
    return MinDistanceResult(1.0 + dist, dist, argmin, N,
                             len(thetas), tried)


# -- Euler products and mean values -------------------------------------------------------


def halasz_product(f: MultiplicativeFunction, n: int,
                   tail_eps: float = 1e-15) -> complex:
    """P(f, n) = prod over irreducibles of degree <= n of the local factor
    (1 - q^{-deg p}) * sum_k f(p^k) q^{-k deg p}, tails cut below tail_eps.

    Degree-determined functions (constant one, moebius, liouville, pure
    degree twists) take the grouped path: one local factor per degree,
    raised to the irreducible count, accumulated in log space with the
    deviation from 1 computed cancellation-free.  Other functions enumerate
    the cached irreducibles directly.
    """
    field = f.field
    if f.degree_profile is not None:
        log_acc = 0j
        for d in range(1, n + 1):
            u = float(field.q) ** -d
            T = 0j
            uk = u
            k = 1
            # the factor sits inside a power N_q(d) ~ q^d/d, so the tail
            # must be cut relative to u, not absolutely
            while uk >= tail_eps * u:
                T += f.degree_profile(d, k) * uk
                uk *= u
                k += 1
            delta = T - u - u * T        # (1-u)(1+T) - 1 without cancellation
            factor = 1.0 + delta
            if abs(factor) < 1e-12:
                return 0j
            log_acc += irreducible_count(field, d) * cmath.log(factor)
        return cmath.exp(log_acc)
    acc = 1.0 + 0j
    for d in range(1, n + 1):
        u = float(field.q) ** -d
        for p in irreducibles_of_degree(field, d):
            local = 1.0 + 0j
            uk = u
            k = 1
            while uk >= tail_eps * u:
                local += complex(f.on_prime_power(p, k)) * uk
                uk *= u
                k += 1
            acc *= (1.0 - u) * local
    return acc


def mean_value(f, n: int, domain: str = "monic") -> complex:
    """Exhaustive average of f over degree-n polynomials (monic or all)."""
    field = f.field
    if domain == "monic":
        it = monic_of_degree(field, n)
        count = field.q ** n
    elif domain == "all":
        it = (g for g in g_n(field, n + 1) if g.degree == n)
        count = (field.q - 1) * field.q ** n
    else:
        raise ValueError("domain must be 'monic' or 'all'")
    parts = [complex(f(g)) for g in it]
    assert len(parts) == count
    return _fsum_complex(parts) / count


# -- exact linear-phase sums ------------------------------------------------------


def linear_phase_sum(field: Field, beta: LaurentTruncation, n: int) -> complex:
    """Brute-force sum over G_n of alpha_1((beta g)_{-1}).

    Every g contributes through its exact trace exponent; the only floats
    are the final counts-times-roots sum.  Equals q^n when beta vanishes
    through depth n and 0 otherwise (the section-6.2 dichotomy), which the
    acceptance suite checks against this computation.
    """
    size = field.q ** n
    if size > field.enumeration_budget:
        raise BudgetError(f"G_{n} over the enumeration budget")
    vals = linear_form_table(beta, n)
    exps = field.trace_table[vals]
    counts = np.bincount(exps, minlength=field.p)
    return complex(np.sum(counts * field.roots))
