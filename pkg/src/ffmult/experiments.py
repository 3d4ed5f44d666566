"""Config-driven experiment runner: reproducible decay/growth tables.

Configs are JSON objects with nested sections; unknown keys anywhere are
errors (no silent typo tolerance), every violation is reported at once,
and a seed is mandatory as soon as any randomized object is referenced.
The same config and seed always produce a byte-identical numeric payload;
output files carry no timestamps.

CSV layout is fixed per experiment kind and versioned in a header comment,
one row per n, flushed as soon as it is computed so long runs can be
resumed by splitting the n-range.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from . import analytics
from .characters import (DegreeTwist, HayesCharacter, UnitCharacter,
                         dirichlet_characters, short_interval_characters)
from .errors import BudgetError, ConfigError
from .fields import Field, build_field, is_prime
from .laurent import LaurentTruncation
from .multiplicative import builtin, from_character, random_on_irreducibles, twist
from .phases import MultilinearForm, PolynomialPhase, projective_common_zeros
from .polys import Poly

KINDS = ("decay-table", "distance-growth", "gowers-decay", "ap-decay",
         "katai-check", "tk-check", "bias-rank-demo", "zero-count-check")

SCHEMA_VERSION = "v1"

COLUMNS = {
    "decay-table": ("n", "abs_mean", "re", "im", "count"),
    "distance-growth": ("N", "distance"),
    "gowers-decay": ("n", "norm"),
    "ap-decay": ("n", "abs_mean", "gowers_bound", "satisfied"),
    "katai-check": ("n", "statistic"),
    "tk-check": ("n", "A", "lhs", "ratio"),
    "bias-rank-demo": ("r", "bias", "analytic_rank", "bound", "meets_bound"),
    "zero-count-check": ("trial", "count", "projective_size", "bound",
                         "passes", "total_degree", "forms"),
}

_TOP_KEYS = {"kind", "field", "seed", "n", "budget", "domain", "function",
             "phase", "hayes", "gowers", "ap", "katai", "tk", "bias",
             "zero_count", "output"}

_DEFAULT_BUDGET = 2_000_000


@dataclass
class ExperimentConfig:
    kind: str
    field_params: dict
    seed: int | None
    n_start: int
    n_stop: int
    budget: int
    domain: str
    sections: dict
    output_path: str | None
    output_format: str
    raw: dict = dc_field(repr=False, default_factory=dict)

    def build_field(self) -> Field:
        kwargs = {}
        if self.field_params.get("factor_degree_bound") is not None:
            kwargs["factor_degree_bound"] = self.field_params["factor_degree_bound"]
        return build_field(self.field_params["p"], self.field_params["r"], **kwargs)


# -- descriptor resolution -------------------------------------------------------


def resolve_hayes(field: Field, desc: dict) -> HayesCharacter:
    dirichlet = short = twist_part = unit = None
    if desc.get("dirichlet") is not None:
        d = desc["dirichlet"]
        modulus = Poly(field, d["modulus"])
        chars = dirichlet_characters(modulus)
        dirichlet = chars[d.get("index", 0)]
    if desc.get("short") is not None:
        s = desc["short"]
        chars = short_interval_characters(field, s["s"])
        short = chars[s.get("index", 0)]
    if desc.get("theta") is not None:
        th = desc["theta"]
        twist_part = DegreeTwist(Fraction(th) if isinstance(th, str) else th)
    if desc.get("unit_index") is not None:
        unit = UnitCharacter(field, desc["unit_index"])
    return HayesCharacter(field, dirichlet, short, twist_part, unit)


def resolve_function(field: Field, desc: dict, default_seed: int | None):
    kind = desc.get("kind")
    if kind == "builtin":
        return builtin(field, desc["name"])
    if kind == "random":
        seed = desc.get("seed", default_seed)
        return random_on_irreducibles(field, seed, desc.get("values", "pm1"))
    if kind == "character":
        return from_character(resolve_hayes(field, desc["hayes"]))
    if kind == "twist":
        base = resolve_function(field, desc["base"], default_seed)
        return twist(base, resolve_hayes(field, desc["hayes"]),
                     desc.get("conjugate", False))
    raise ConfigError([f"function.kind: unknown kind {kind!r}"])


def resolve_phase(field: Field, desc: dict, min_depth: int) -> PolynomialPhase:
    n = desc.get("n", min_depth)
    terms = []
    for t in desc.get("terms", ()):
        factors = tuple(LaurentTruncation(field, f) for f in t["factors"])
        terms.append((t["coef"], factors))
    monomials = []
    for t in desc.get("monomials", ()):
        monomials.append((t["coef"], tuple((j, e) for j, e in t["powers"])))
    return PolynomialPhase(field, max(n, min_depth), terms, monomials)


# -- validation ---------------------------------------------------------------------


def _check_keys(problems, obj, allowed, where):
    if not isinstance(obj, dict):
        problems.append(f"{where}: expected an object")
        return False
    for key in obj:
        if key not in allowed:
            problems.append(f"{where}.{key}: unknown key")
    return True


def _estimated_cost(kind: str, n: int, q: int, sections: dict) -> int:
    if kind in ("decay-table", "distance-growth", "katai-check"):
        if kind == "katai-check":
            k = sections.get("katai", {}).get("k", 1)
            return q ** max(n - k, 0) * 4 * q ** 2  # pairs x inner, rough
        return q ** n
    if kind == "gowers-decay":
        k = sections.get("gowers", {}).get("k", 2)
        return q ** (n * (k + 1))
    if kind == "ap-decay":
        return q ** (2 * n)
    if kind == "tk-check":
        return q ** n
    if kind == "bias-rank-demo":
        dim = sections.get("bias", {}).get("slot_dim", 3)
        arity = sections.get("bias", {}).get("arity", 2)
        return q ** (dim * arity)
    if kind == "zero-count-check":
        return q ** sections.get("zero_count", {}).get("dim", 3)
    return 0


def validate_config(source) -> ExperimentConfig:
    """Parse and normalize a config (dict, JSON text, or path-like).

    Returns the normalized ExperimentConfig or raises ConfigError carrying
    every violation found.  Budget overruns are reported with a 'budget:'
    prefix so the CLI can map them to their own exit code.
    """
    if isinstance(source, (str, bytes)):
        try:
            raw = json.loads(source)
        except json.JSONDecodeError as e:
            raise ConfigError([f"config is not valid JSON: {e}"])
    else:
        raw = source
    problems: list[str] = []
    if not isinstance(raw, dict):
        raise ConfigError(["config must be a JSON object"])
    _check_keys(problems, raw, _TOP_KEYS, "config")

    kind = raw.get("kind")
    if kind not in KINDS:
        problems.append(f"kind: must be one of {', '.join(KINDS)} (got {kind!r})")

    fsec = raw.get("field", {})
    if _check_keys(problems, fsec, {"p", "r", "factor_degree_bound"}, "field"):
        p = fsec.get("p")
        r = fsec.get("r", 1)
        if not isinstance(p, int) or not is_prime(p):
            problems.append("field.p: required prime")
        if not isinstance(r, int) or r < 1:
            problems.append("field.r: must be a positive integer")
    field_params = {"p": fsec.get("p", 2), "r": fsec.get("r", 1),
                    "factor_degree_bound": fsec.get("factor_degree_bound")}

    nsec = raw.get("n", {})
    n_start = n_stop = 0
    if kind in ("bias-rank-demo", "zero-count-check"):
        if "n" in raw:
            problems.append("n: not used by this experiment kind")
    elif _check_keys(problems, nsec, {"start", "stop"}, "n"):
        n_start = nsec.get("start")
        n_stop = nsec.get("stop", n_start)
        if not isinstance(n_start, int) or n_start < 1:
            problems.append("n.start: required positive integer")
            n_start = n_stop = 1
        elif not isinstance(n_stop, int) or n_stop < n_start:
            problems.append("n.stop: must be an integer >= n.start")
            n_stop = n_start

    bsec = raw.get("budget", {})
    budget = _DEFAULT_BUDGET
    if _check_keys(problems, bsec, {"max_evals_per_n"}, "budget"):
        budget = bsec.get("max_evals_per_n", _DEFAULT_BUDGET)
        if not isinstance(budget, int) or budget < 1:
            problems.append("budget.max_evals_per_n: must be a positive integer")
            budget = _DEFAULT_BUDGET

    domain = raw.get("domain", "all")
    if domain not in ("all", "nonzero", "monic"):
        problems.append("domain: must be all | nonzero | monic")

    sections = {}
    section_keys = {
        "function": {"kind", "name", "seed", "values", "hayes", "base", "conjugate"},
        "phase": {"n", "terms", "monomials"},
        "hayes": {"dirichlet", "short", "theta", "unit_index"},
        "gowers": {"k"},
        "ap": {"k"},
        "katai": {"k", "pair_set", "per_pair"},
        "tk": {"W", "H"},
        "bias": {"r_values", "slot_dim", "arity"},
        "zero_count": {"dim", "trials", "max_total_degree"},
        "output": {"path", "format"},
    }
    for name, allowed in section_keys.items():
        if name in raw:
            if _check_keys(problems, raw[name], allowed, name):
                sections[name] = raw[name]

    needs = {
        "decay-table": ("function", "phase"),
        "distance-growth": ("function", "hayes"),
        "gowers-decay": ("function",),
        "ap-decay": ("function",),
        "katai-check": ("function",),
        "tk-check": ("tk",),
        "bias-rank-demo": (),
        "zero-count-check": ("zero_count",),
    }
    for req in needs.get(kind, ()):
        if req not in sections:
            problems.append(f"{req}: required for kind {kind}")

    seed = raw.get("seed")
    randomized = (kind == "zero-count-check"
                  or sections.get("function", {}).get("kind") == "random")
    if randomized and seed is None and sections.get("function", {}).get("seed") is None:
        problems.append("seed: required because a randomized object is referenced")
    if seed is not None and not isinstance(seed, int):
        problems.append("seed: must be an integer")

    out = sections.get("output", {})
    output_path = out.get("path")
    output_format = out.get("format", "csv")
    if output_format not in ("csv", "json"):
        problems.append("output.format: must be csv or json")

    if kind in KINDS and isinstance(fsec.get("p"), int):
        q = field_params["p"] ** field_params["r"]
        lo = n_start if kind not in ("bias-rank-demo", "zero-count-check") else 1
        hi = n_stop if kind not in ("bias-rank-demo", "zero-count-check") else 1
        for n in range(lo, hi + 1):
            cost = _estimated_cost(kind, n, q, sections)
            if cost > budget:
                problems.append(f"budget: n={n} needs about {cost} evaluations, "
                                f"over max_evals_per_n={budget}")
                break
        if kind in ("bias-rank-demo", "zero-count-check"):
            cost = _estimated_cost(kind, 1, q, sections)
            if cost > budget:
                problems.append(f"budget: experiment needs about {cost} evaluations, "
                                f"over max_evals_per_n={budget}")

    if problems:
        raise ConfigError(problems)
    return ExperimentConfig(kind=kind, field_params=field_params, seed=seed,
                            n_start=n_start, n_stop=n_stop, budget=budget,
                            domain=domain, sections=sections,
                            output_path=output_path, output_format=output_format,
                            raw=raw)


# -- execution -----------------------------------------------------------------------


@dataclass
class ExperimentResult:
    kind: str
    columns: tuple
    rows: list
    metadata: dict

    def csv_lines(self):
        yield f"# ffmult-experiment schema={self.kind}/{SCHEMA_VERSION}"
        for key in sorted(self.metadata):
            yield f"# {key}={self.metadata[key]}"
        yield f"# columns={','.join(self.columns)}"
        for row in self.rows:
            yield ",".join(_cell(v) for v in row)

    def to_json(self) -> str:
        return json.dumps({"schema": f"{self.kind}/{SCHEMA_VERSION}",
                           "metadata": self.metadata,
                           "columns": list(self.columns),
                           "rows": [[_jsonable(v) for v in row] for row in self.rows]},
                          indent=2, sort_keys=True)


def _cell(v) -> str:
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _jsonable(v):
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    return v


def _rows_decay_table(cfg: ExperimentConfig, field: Field):
    nu = resolve_function(field, cfg.sections["function"], cfg.seed)
    for n in range(cfg.n_start, cfg.n_stop + 1):
        P = resolve_phase(field, cfg.sections["phase"], cfg.n_stop)
        Pn = PolynomialPhase(field, n, P.product_terms, P.monomial_terms)
        mean = analytics.correlate(field, nu, analytics.phase_character_array(Pn),
                                   n, cfg.domain)
        yield (n, abs(mean), mean.real, mean.imag, field.q ** n)


def _rows_distance_growth(cfg: ExperimentConfig, field: Field):
    f = resolve_function(field, cfg.sections["function"], cfg.seed)
    target = from_character(resolve_hayes(field, cfg.sections["hayes"]))
    for N in range(cfg.n_start, cfg.n_stop + 1):
        yield (N, analytics.pretentious_distance(f, target, N))


def _rows_gowers_decay(cfg: ExperimentConfig, field: Field):
    f = resolve_function(field, cfg.sections["function"], cfg.seed)
    k = cfg.sections.get("gowers", {}).get("k", 2)
    for n in range(cfg.n_start, cfg.n_stop + 1):
        if k == 2:
            norm = analytics.u2_fourier(field, n, analytics.sample_on_gn(field, n, f))
        else:
            norm = analytics.gowers_norm(field, n, f, k, budget=cfg.budget)
        yield (n, norm)


def _rows_ap_decay(cfg: ExperimentConfig, field: Field):
    f = resolve_function(field, cfg.sections["function"], cfg.seed)
    k = cfg.sections.get("ap", {}).get("k", 3)
    for n in range(cfg.n_start, cfg.n_stop + 1):
        arr = analytics.sample_on_gn(field, n, f)
        res = analytics.ap_correlation(field, n, [arr] * k, budget=cfg.budget)
        yield (n, abs(res.mean), res.gowers_bound, res.satisfied)


def _rows_katai(cfg: ExperimentConfig, field: Field):
    f = resolve_function(field, cfg.sections["function"], cfg.seed)
    sec = cfg.sections.get("katai", {})
    k = sec.get("k", 2)
    for n in range(cfg.n_start, cfg.n_stop + 1):
        stat = analytics.katai_statistic(field, f, n, k,
                                         sec.get("pair_set", "P_k"),
                                         sec.get("per_pair", False))
        yield (n, stat)


def _rows_tk(cfg: ExperimentConfig, field: Field):
    sec = cfg.sections["tk"]
    for n in range(cfg.n_start, cfg.n_stop + 1):
        res = analytics.turan_kubilius(field, n, sec["W"], sec["H"])
        yield (n, res.A, res.lhs, res.ratio)


def _rows_bias_rank(cfg: ExperimentConfig, field: Field):
    sec = cfg.sections.get("bias", {})
    dim = sec.get("slot_dim", 3)
    arity = sec.get("arity", 2)
    coords = [LaurentTruncation.coordinate(field, j, dim) for j in range(dim)]
    for r in sec.get("r_values", [1, 2, 3]):
        if r > dim:
            raise BudgetError(f"r={r} needs slot_dim >= r")
        terms = [(1, tuple(coords[i] for _ in range(arity))) for i in range(r)]
        Q = MultilinearForm(field, (dim,) * arity, terms, block_count=r)
        res = Q.bias(budget=cfg.budget)
        bound = field.q ** -r
        yield (r, res.bias, res.analytic_rank, bound, res.bias >= bound - 1e-9)


def _rows_zero_count(cfg: ExperimentConfig, field: Field):
    sec = cfg.sections["zero_count"]
    dim = sec.get("dim", 3)
    trials = sec.get("trials", 20)
    max_total = sec.get("max_total_degree", 3)
    rng = random.Random(cfg.seed)
    done = 0
    while done < trials:
        D = rng.randint(1, max_total)
        degs = []
        left = D
        while left:
            d = rng.randint(1, left)
            degs.append(d)
            left -= d
        phases = []
        for d in degs:
            terms = [(rng.randrange(1, field.q),
                      tuple(LaurentTruncation.random(field, dim, rng)
                            for _ in range(d)))
                     for _ in range(rng.randint(1, 2))]
            phases.append(PolynomialPhase(field, dim, terms))
        if any(P.is_zero() or P.degree != d for P, d in zip(phases, degs)):
            continue
        done += 1
        res = projective_common_zeros(phases, dim, budget=cfg.budget)
        yield (done, res.count, res.projective_size, res.bound, res.passes,
               res.total_degree, len(phases))


_RUNNERS = {
    "decay-table": _rows_decay_table,
    "distance-growth": _rows_distance_growth,
    "gowers-decay": _rows_gowers_decay,
    "ap-decay": _rows_ap_decay,
    "katai-check": _rows_katai,
    "tk-check": _rows_tk,
    "bias-rank-demo": _rows_bias_rank,
    "zero-count-check": _rows_zero_count,
}


def run_experiment(config, stream=None) -> ExperimentResult:
    """Execute a validated (or raw) config; optionally stream CSV rows.

    When `stream` is a writable file object, header comments and each row
    are written and flushed as they are produced, so partial progress
    survives interruption.
    """
    cfg = config if isinstance(config, ExperimentConfig) else validate_config(config)
    field = cfg.build_field()
    metadata = {
        "field": f"F_{field.q}",
        "p": field.p, "r": field.r,
        "seed": cfg.seed,
        "domain": cfg.domain,
        "budget": cfg.budget,
        "config": json.dumps(cfg.raw, sort_keys=True),
    }
    columns = COLUMNS[cfg.kind]
    result = ExperimentResult(cfg.kind, columns, [], metadata)
    if stream is not None:
        stream.write(f"# ffmult-experiment schema={cfg.kind}/{SCHEMA_VERSION}\n")
        for key in sorted(metadata):
            stream.write(f"# {key}={metadata[key]}\n")
        stream.write(f"# columns={','.join(columns)}\n")
        stream.flush()
    for row in _RUNNERS[cfg.kind](cfg, field):
        result.rows.append(row)
        if stream is not None:
            stream.write(",".join(_cell(v) for v in row) + "\n")
            stream.flush()
    return result


def list_builtins() -> str:
    lines = ["experiment kinds:"]
    lines += [f"  {k}  (columns: {', '.join(COLUMNS[k])})" for k in KINDS]
    lines.append("builtin multiplicative functions: moebius, liouville, one")
    lines.append("random function value sets: pm1, unit")
    lines.append("function descriptor kinds: builtin, random, character, twist")
    lines.append("hayes descriptor: {dirichlet: {modulus, index}, short: {s, index}, "
                 "theta: float|'a/b', unit_index}")
    lines.append("phase descriptor: {n, terms: [{coef, factors: [[b_-1..b_-M], ...]}], "
                 "monomials: [{coef, powers: [[j, e], ...]}]}")
    return "\n".join(lines)
