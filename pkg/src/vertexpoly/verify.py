"""Identity harness: every main identity as a named, runnable check.

Each check computes one identity along two independent paths and compares
with exact equality (zero tolerance).  Exact mode works symbolically over
rational functions; eval mode evaluates at `trials` seeded random rational
points (Schwartz-Zippel reasoning: a nonzero rational-function difference
vanishes at a random million-scale point with negligible probability, and
five independent points drive that probability far below any practical
concern for the degrees involved).

Checks are independent; `run_checks` fans them out over a thread pool capped
by the VERTEXPOLY_THREADS environment variable and merges reports back in
the order requested.  Given the same CheckSpec, a report is reproducible
except for its wall-time field.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .dwbp import check_ik_properties, z_det_hom, z_det_inhom, z_sum
from .lattice import (HoleConfig, ParticleConfig, StateVector,
                      all_particle_configs, apply_row_operator, check_rll,
                      check_ybe, matrix_element, wavefunction)
from .mprod import (k_closed_form, k_prefactor, mat_eq, mat_mul, mat_scale,
                    mp_build, raising_parts, trace_wavefunction)
from .params import ParamSet
from .ring import QQ, RatFunc, RingError, canonical_vartable
from .sympoly import (degeneration_rhs, family_poly, interlaces, skew_factor)

__all__ = ["CheckSpec", "CheckReport", "CHECK_NAMES", "run_check",
           "run_checks", "default_suite", "reports_to_jsonl"]


_CONFIG_SAMPLE_LIMIT = 500

# wavefunction kind <-> closed-form family kind, with the config flavor
_KIND_TABLE = [
    ("psi", "G", "particle"),
    ("psi_dual", "Gbar", "particle"),
    ("phi", "H", "hole"),
    ("phi_dual", "Hbar", "hole"),
]


@dataclass(frozen=True)
class CheckSpec:
    """What to check, at which sizes, in which mode."""

    name: str
    m: int = 4
    n: int = 2
    mode: str = "exact"
    seed: int = 0
    trials: int = 5
    params: ParamSet = None

    def __post_init__(self):
        if self.mode not in ("exact", "eval"):
            raise RingError(f"unknown mode {self.mode!r}")
        if self.mode == "eval" and self.trials < 1:
            raise RingError("eval mode requires trials >= 1")


@dataclass
class CheckReport:
    """Outcome of one check: overall verdict plus the first failure seen."""

    name: str
    passed: bool
    breakdown: dict = field(default_factory=dict)
    witness: dict = None
    ms: float = 0.0

    def to_json(self):
        return json.dumps({"name": self.name, "pass": self.passed,
                           "witness": self.witness, "ms": round(self.ms, 1)},
                          sort_keys=True)


class _Recorder:
    """Accumulates comparisons, keeping the first failing witness."""

    def __init__(self):
        self.passed = True
        self.count = 0
        self.witness = None

    def compare(self, lhs, rhs, **where):
        self.count += 1
        if lhs != rhs and self.witness is None:
            self.passed = False
            self.witness = dict(where, lhs=str(lhs), rhs=str(rhs))

    def expect(self, ok, **where):
        self.count += 1
        if not ok and self.witness is None:
            self.passed = False
            self.witness = dict(where)


def _rng(spec, salt):
    return random.Random((spec.seed * 0x9E3779B1 + salt) & 0xFFFFFFFF)


def _draw_distinct(rng, n, lift=lambda v: v):
    values = []
    while len(values) < n:
        v = QQ(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6))
        if v not in values:
            values.append(v)
    return [lift(v) for v in values]


def _trial_setup(spec, trial, n_u):
    """Numeric (params, spectral list) for one eval-mode trial."""
    p = spec.params or ParamSet.sample(spec.seed * 7919 + trial * 31 + 1)
    rng = _rng(spec, 1000 + trial)
    return p, _draw_distinct(rng, n_u)


def _symbolic_setup(spec, n_u):
    """Symbolic (params, spectral list) for exact mode.

    A numeric params override is lifted into the symbolic table as
    constants (keeping any constraint violations intact, which is what
    fault-injection tests rely on).
    """
    if spec.params is not None and spec.params.symbolic:
        return spec.params, spec.params.spectral(n_u)
    vt = canonical_vartable(n_u=n_u)
    if spec.params is not None:
        p = spec.params.map(lambda v: RatFunc(vt.const(v)))
    else:
        p = ParamSet.symbolic_over(vt)
    return p, [RatFunc(vt.var(f"u{j}")) for j in range(1, n_u + 1)]


def _position_tuples(m, n, rng=None):
    """All n-subsets of 1..m, or a seeded sample when there are too many."""
    total = comb(m, n)
    if total <= _CONFIG_SAMPLE_LIMIT or rng is None:
        return list(combinations(range(1, m + 1), n))
    seen = set()
    while len(seen) < _CONFIG_SAMPLE_LIMIT:
        seen.add(tuple(sorted(rng.sample(range(1, m + 1), n))))
    return sorted(seen)


def _wrap(flavor, m, pos):
    return ParticleConfig(m, pos) if flavor == "particle" else HoleConfig(m, pos)


# -- the checks ---------------------------------------------------------


def check_correspondence(spec):
    """Lattice wavefunctions equal the closed-form families, all four kinds."""
    rec = _Recorder()
    positions = _position_tuples(spec.m, spec.n, _rng(spec, 7))

    def run_at(p, us, tag):
        for wf_kind, fam_kind, flavor in _KIND_TABLE:
            for pos in positions:
                config = _wrap(flavor, spec.m, pos)
                rec.compare(wavefunction(wf_kind, config, us, p),
                            family_poly(fam_kind, config, us, p),
                            kind=fam_kind, config=pos, trial=tag)

    if spec.mode == "exact":
        p, us = _symbolic_setup(spec, spec.n)
        run_at(p, us, "symbolic")
    else:
        for trial in range(spec.trials):
            p, us = _trial_setup(spec, trial, spec.n)
            run_at(p, us, trial)
    return rec


def check_pairing(spec):
    """Complementary-configuration sums equal a single determinant.

    Route one compares against the homogeneous determinant evaluated with
    the full spectral list; route two inserts a completeness relation and
    compares against the fully packed wavefunction.  Both the particle and
    the dual (hole) versions run.
    """
    rec = _Recorder()
    m, n = spec.m, spec.n

    def run_at(p, us, tag):
        us_first, us_last = us[:m - n], us[m - n:]
        packed = ParticleConfig(m, tuple(range(1, m + 1)))
        for dual in (False, True):
            h_kind, g_kind = ("Hbar", "Gbar") if dual else ("H", "G")
            wf_h, wf_g = ("phi_dual", "psi_dual") if dual else ("phi", "psi")
            sum_families = None
            sum_lattice = None
            for config in all_particle_configs(m, n):
                holes = config.complement()
                fam = family_poly(h_kind, holes, us_first, p) \
                    * family_poly(g_kind, config, us_last, p)
                lat = wavefunction(wf_h, holes, us_first, p) \
                    * wavefunction(wf_g, config, us_last, p)
                sum_families = fam if sum_families is None else sum_families + fam
                sum_lattice = lat if sum_lattice is None else sum_lattice + lat
            rec.compare(sum_families, z_det_hom(m, us, p, dual=dual),
                        route="determinant", dual=dual, trial=tag)
            rec.compare(sum_lattice,
                        wavefunction("psi_dual" if dual else "psi",
                                     packed, us, p),
                        route="completeness", dual=dual, trial=tag)

    if spec.mode == "exact":
        p, us = _symbolic_setup(spec, m)
        run_at(p, us, "symbolic")
    else:
        for trial in range(spec.trials):
            p, us = _trial_setup(spec, trial, m)
            run_at(p, us, trial)
    return rec


def check_branching(spec):
    """(N+1)-variable family = sum of skew factor times N-variable family."""
    rec = _Recorder()
    m, n = spec.m, spec.n

    def run_at(p, us, tag):
        us_small, u_new = us[:n], us[n]
        for wf_kind, fam_kind, flavor in _KIND_TABLE:
            for y in _position_tuples(m, n + 1, _rng(spec, 11)):
                lhs = family_poly(fam_kind, _wrap(flavor, m, y), us, p)
                xs = [x for x in combinations(range(1, m + 1), n)
                      if interlaces(y, x)]
                rec.expect(bool(xs), kind=fam_kind, y=y,
                           reason="no interlacing smaller config")
                rhs = None
                for x in xs:
                    term = skew_factor(fam_kind, y, x, u_new, p, m) \
                        * family_poly(fam_kind, _wrap(flavor, m, x), us_small, p)
                    rhs = term if rhs is None else rhs + term
                rec.compare(lhs, rhs, kind=fam_kind, y=y, trial=tag)

    if spec.mode == "exact":
        p, us = _symbolic_setup(spec, n + 1)
        run_at(p, us, "symbolic")
    else:
        for trial in range(spec.trials):
            p, us = _trial_setup(spec, trial, n + 1)
            run_at(p, us, trial)
    return rec


def check_degeneration(spec):
    """t -> 0 specialization of the first family gives the bialternant form.

    Always symbolic in t (the limit is a substitution, not an evaluation);
    eval mode makes the spectral parameters and beta numeric.
    """
    rec = _Recorder()
    m, n = spec.m, spec.n

    def run_at(vt, us, beta, tag):
        one = RatFunc(vt.const(1))
        t = RatFunc(vt.var("t"))
        p = ParamSet(t, one, t * beta, one, one)
        for pos in _position_tuples(m, n, _rng(spec, 13)):
            config = ParticleConfig(m, pos)
            lhs = family_poly("G", config, us, p).substitute({"t": 0})
            rhs = degeneration_rhs(config, us, beta, m)
            rec.compare(lhs, rhs, config=pos, trial=tag)

    if spec.mode == "exact":
        vt = canonical_vartable(n_u=n, free_params=("t",), beta=True)
        us = [RatFunc(vt.var(f"u{j}")) for j in range(1, n + 1)]
        run_at(vt, us, RatFunc(vt.var("beta")), "symbolic")
    else:
        vt = canonical_vartable(free_params=("t",))
        for trial in range(spec.trials):
            rng = _rng(spec, 1000 + trial)
            lift = lambda v: RatFunc(vt.const(v))
            us = _draw_distinct(rng, n, lift)
            beta = lift(QQ(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6)))
            run_at(vt, us, beta, trial)
    return rec


def check_mp_algebra(spec):
    """Raising-piece algebra, the operator-word wavefunction, the prefactor.

    Checks the quasi-commutation relations entrywise for every size up to
    N, the operator-word route against the direct lattice wavefunction for
    all configurations at (M, N), and the two prefactor expressions.
    """
    rec = _Recorder()
    m, n = spec.m, spec.n

    def run_at(p, us, tag):
        t, a, b, e, f = p.t, p.a, p.b, p.e, p.f
        for size in range(1, n + 1):
            sub = us[:size]
            a_mat, c_mat = mp_build(sub, p)
            parts = raising_parts(sub, p)
            total = parts[0]
            for piece in parts[1:]:
                total = [[x + y for x, y in zip(rx, ry)]
                         for rx, ry in zip(total, piece)]
            rec.expect(mat_eq(total, c_mat), relation="decomposition",
                       size=size, trial=tag)
            for j in range(size):
                uj = sub[j]
                rec.expect(
                    mat_eq(mat_mul(parts[j], a_mat),
                           mat_scale((e * uj + f) / (a * uj + b),
                                     mat_mul(a_mat, parts[j]))),
                    relation="exchange-with-diagonal", size=size, j=j + 1,
                    trial=tag)
                square = mat_mul(parts[j], parts[j])
                rec.expect(all(v == 0 for row in square for v in row),
                           relation="nilpotency", size=size, j=j + 1,
                           trial=tag)
                for k in range(size):
                    if k == j:
                        continue
                    uk = sub[k]
                    ratio = (e * uj + f) * (a * uk + b) * (uj - t * uk) \
                        / ((a * uj + b) * (e * uk + f) * (t * uj - uk))
                    rec.expect(
                        mat_eq(mat_mul(parts[j], parts[k]),
                               mat_scale(ratio, mat_mul(parts[k], parts[j]))),
                        relation="exchange", size=size, j=j + 1, k=k + 1,
                        trial=tag)
        for config in all_particle_configs(m, n):
            rec.compare(trace_wavefunction(config, us, p),
                        wavefunction("psi", config, us, p),
                        relation="operator-word", config=config.x, trial=tag)
        rec.compare(k_prefactor(m, us, p), k_closed_form(m, us, p),
                    relation="prefactor", trial=tag)

    if spec.mode == "exact":
        p, us = _symbolic_setup(spec, n)
        run_at(p, us, "symbolic")
    else:
        for trial in range(spec.trials):
            p, us = _trial_setup(spec, trial, n)
            run_at(p, us, trial)
    return rec


def check_ik(spec):
    """The four defining properties of the packed-boundary partition function."""
    rec = _Recorder()
    for trial in range(spec.trials if spec.mode == "eval" else 1):
        p = spec.params or ParamSet.sample(spec.seed * 7919 + trial * 31 + 1)
        report = check_ik_properties(spec.n, p, seed=spec.seed + trial)
        rec.expect(report.degree, property="degree", trial=trial)
        rec.expect(report.symmetric, property="symmetry", trial=trial)
        rec.expect(report.base_case, property="base-case", trial=trial)
        for k, ok in report.recursion.items():
            rec.expect(ok, property="recursion", k=k, trial=trial)
    return rec


def check_rll_suite(spec):
    """Intertwining relation at seeded random points (or symbolically)."""
    rec = _Recorder()
    if spec.mode == "exact":
        p, us = _symbolic_setup(spec, 2)
        rec.expect(check_rll(us[0], us[1], p), point="symbolic")
        return rec
    for trial in range(spec.trials):
        p, us = _trial_setup(spec, trial, 2)
        rec.expect(check_rll(us[0], us[1], p), point=trial)
    return rec


def check_ybe_suite(spec):
    """Yang-Baxter equation at seeded random points (or symbolically)."""
    rec = _Recorder()
    if spec.mode == "exact":
        p, us = _symbolic_setup(spec, 2)
        rec.expect(check_ybe(us[0], us[1], p), point="symbolic")
        return rec
    for trial in range(spec.trials):
        p, us = _trial_setup(spec, trial, 2)
        rec.expect(check_ybe(us[0], us[1], p), point=trial)
    return rec


def check_dwbp_triangle(spec):
    """Permutation sum, determinant and lattice brute force all agree."""
    rec = _Recorder()
    n = spec.n

    def lattice_z(us, p):
        s = StateVector.vacuum(n, p.one())
        for u in us:
            s = apply_row_operator("B", u, s, p)
        return s.amplitude((1 << n) - 1, p.zero())

    def run_at(p, us, ws, tag):
        reference = z_sum(us, p, ws=ws)
        rec.compare(reference, z_det_inhom(us, p, ws=ws),
                    route="determinant", trial=tag)
        p_w = ParamSet.unchecked(p.t, p.a, p.b, p.c, p.d, p.e, p.f, w=ws)
        rec.compare(reference, lattice_z(us, p_w), route="lattice", trial=tag)
        rec.compare(z_sum(us, p), z_det_hom(n, us, p),
                    route="homogeneous", trial=tag)

    if spec.mode == "exact":
        vt = canonical_vartable(n_u=n, n_w=n)
        p = ParamSet.symbolic_over(vt, n_w=n)
        run_at(p, p.spectral(n), list(p.w), "symbolic")
    else:
        for trial in range(spec.trials):
            p, us = _trial_setup(spec, trial, n)
            ws = _draw_distinct(_rng(spec, 2000 + trial), n)
            run_at(p, us, ws, trial)
    return rec


_CHECKS = {
    "correspondence": check_correspondence,
    "pairing": check_pairing,
    "branching": check_branching,
    "degeneration": check_degeneration,
    "mp-algebra": check_mp_algebra,
    "ik-properties": check_ik,
    "rll": check_rll_suite,
    "ybe": check_ybe_suite,
    "dwbp": check_dwbp_triangle,
}

CHECK_NAMES = tuple(_CHECKS)


def run_check(spec):
    """Run one named check and return its report."""
    fn = _CHECKS.get(spec.name)
    if fn is None:
        raise RingError(f"unknown check {spec.name!r}")
    start = time.perf_counter()
    rec = fn(spec)
    ms = (time.perf_counter() - start) * 1000
    return CheckReport(spec.name, rec.passed,
                       breakdown={"comparisons": rec.count,
                                  "mode": spec.mode},
                       witness=rec.witness, ms=ms)


def _pool_size():
    env = os.environ.get("VERTEXPOLY_THREADS")
    if env:
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def run_checks(specs, threads=None):
    """Run checks concurrently; reports come back in the order requested."""
    workers = threads or _pool_size()
    if workers == 1 or len(specs) == 1:
        return [run_check(s) for s in specs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_check, specs))


def default_suite(m=4, n=2, mode="eval", seed=0, trials=5, params=None):
    """One spec per named check, at sizes scaled to stay desk-fast."""
    def spec(name, **kw):
        base = dict(m=m, n=n, mode=mode, seed=seed, trials=trials,
                    params=params)
        base.update(kw)
        return CheckSpec(name, **base)

    return [
        spec("correspondence"),
        spec("pairing"),
        spec("branching", n=max(1, n - 1)),
        spec("degeneration"),
        spec("mp-algebra"),
        spec("ik-properties", n=max(2, n)),
        spec("dwbp", n=max(2, n)),
        spec("rll"),
        spec("ybe"),
    ]


def reports_to_jsonl(reports):
    return "\n".join(r.to_json() for r in reports)
