"""Closed-form symmetric polynomial families and skew factors.

Four families are defined by permutation sums over S_N with kind-specific
prefactors; `G` and `Gbar` are indexed by particle configurations, `H` and
`Hbar` by hole configurations.  At quantum parameter t = 0 and under the
specialization a = 1, b = t*beta, c = d = 1, e = -1/beta, f = -1 the first
family reduces (up to an explicit monomial factor) to the beta-Grothendieck
polynomials of the Grassmannian, with symmetric variables
z_j = -1/beta - 1/u_j and the partition read off the configuration by
lambda_j = x_{N-j+1} - N + j - 1.

Permutation sums iterate S_N in lexicographic order and evaluate the
inversion-condition products from the explicit inversion set (the factors
are ratios, not signs).  Summands are accumulated over a single explicit
common denominator so that symbolic results normalize to polynomials over
monomials.
"""

from __future__ import annotations

from itertools import permutations

from .lattice import HoleConfig, ParticleConfig
from .ring import RatFunc, RingError, determinant, exact_divide

__all__ = [
    "family_poly",
    "grothendieck_det",
    "degeneration_rhs",
    "skew_factor",
    "interlaces",
    "config_to_young",
    "young_to_config",
]


def config_to_young(config):
    """Partition lambda with lambda_j = x_{N-j+1} - N + j - 1."""
    x = config.x
    n = len(x)
    return tuple(x[n - j] - n + j - 1 for j in range(1, n + 1))


def young_to_config(lam, m):
    """Inverse of config_to_young on lattice length m."""
    n = len(lam)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise RingError(f"{lam} is not weakly decreasing")
    if lam and lam[0] > m - n:
        raise RingError(f"lambda_1 = {lam[0]} exceeds M - N = {m - n}")
    if any(v < 0 for v in lam):
        raise RingError("negative part in partition")
    x = sorted(lam[j - 1] + n - j + 1 for j in range(1, n + 1))
    return ParticleConfig(m, tuple(x))


def family_poly(kind, config, us, p, m=None):
    """One of the four symmetric polynomial families, by its closed formula.

    kind 'G'/'Gbar' take a ParticleConfig, 'H'/'Hbar' a HoleConfig; m
    defaults to the configuration's lattice length.  The spectral
    parameters must be pairwise distinct.
    """
    if m is None:
        m = config.m
    n = len(us)
    if len(config) != n:
        raise RingError("config size must match the number of spectral parameters")
    positions = _family_positions(kind, config)
    t, a, b, c, d, e, f = p.t, p.a, p.b, p.c, p.d, p.e, p.f
    one = p.one()

    if kind == "G":
        def site(u):  # numerator/denominator of the per-site ratio
            return e * u + f, a * u + b

        def pref(u):
            return (1 - t) * c * u * (a * u + b) ** m / (e * u + f)

        def outer(uj, uk):  # prod_{j<k} outer(u_j, u_k)
            return (t * uj - uk) / (uj - uk)

        def inv_num(usk, usj):
            return usk - t * usj

        def inv_den(usk, usj):
            return t * usk - usj
    elif kind == "Gbar":
        def site(u):
            return a * u + b, e * u + f

        def pref(u):
            return (1 - t) * d * (e * u + f) ** m / (a * u + b)

        def outer(uj, uk):
            return (uj - t * uk) / (uj - uk)

        def inv_num(usk, usj):
            return t * usk - usj

        def inv_den(usk, usj):
            return usk - t * usj
    elif kind == "H":
        def site(u):
            return e * u + t * f, a * t * u + b

        def pref(u):
            return (1 - t) * c * u * (a * t * u + b) ** m / (e * u + t * f)

        def outer(uj, uk):
            return (uj - t * uk) / (t * (uj - uk))

        def inv_num(usk, usj):
            return t * usk - usj

        def inv_den(usk, usj):
            return usk - t * usj
    elif kind == "Hbar":
        def site(u):
            return a * t * u + b, e * u + t * f

        def pref(u):
            return (1 - t) * d * (e * u + t * f) ** m / (a * t * u + b)

        def outer(uj, uk):
            return (t * uj - uk) / (t * (uj - uk))

        def inv_num(usk, usj):
            return usk - t * usj

        def inv_den(usk, usj):
            return t * usk - usj
    else:
        raise RingError(f"unknown family kind {kind!r}")

    prefactor = one
    for u in us:
        prefactor = prefactor * pref(u)
    for j in range(n):
        for k in range(j + 1, n):
            prefactor = prefactor * outer(us[j], us[k])

    # The sum is accumulated over one explicit common denominator (both
    # orientations of every pairwise inversion factor, and the maximal
    # site-ratio power); summands then stay polynomial and the single
    # division at the end cancels exactly.  Summing the fractions naively
    # leaves denominators the normalizer cannot fully clear, which makes
    # downstream sums of family values blow up.
    x_max = positions[-1] if positions else 0
    site_nums, site_dens = zip(*(site(u) for u in us)) if n else ((), ())
    denominator = one
    for p_idx in range(n):
        for q_idx in range(p_idx + 1, n):
            denominator = denominator \
                * inv_den(us[p_idx], us[q_idx]) * inv_den(us[q_idx], us[p_idx])
        denominator = denominator * site_dens[p_idx] ** x_max
    total = None
    for sigma in permutations(range(n)):
        term = one
        for j in range(n):
            for k in range(j + 1, n):
                usk, usj = us[sigma[k]], us[sigma[j]]
                if sigma[j] > sigma[k]:
                    # the matching inv_den orientation is in `denominator`;
                    # restore the unused orientation alongside the numerator
                    term = term * inv_num(usk, usj) * inv_den(usj, usk)
                else:
                    term = term * inv_den(usk, usj) * inv_den(usj, usk)
        for j in range(n):
            s = sigma[j]
            term = term * site_nums[s] ** positions[j] \
                * site_dens[s] ** (x_max - positions[j])
        total = term if total is None else total + term
    return prefactor * total / denominator


def _family_positions(kind, config):
    if kind in ("G", "Gbar"):
        if not isinstance(config, ParticleConfig):
            raise RingError(f"kind {kind} requires a ParticleConfig")
        return config.x
    if not isinstance(config, HoleConfig):
        raise RingError(f"kind {kind} requires a HoleConfig")
    return config.xbar


def grothendieck_det(lam, zs, beta):
    """Bialternant determinant form of the beta-Grothendieck polynomial.

    det_N(z_j^{lambda_k + N - k} (1 + beta z_j)^{k-1}) divided by the
    Vandermonde prod_{j<k}(z_j - z_k).  When all entries are polynomial the
    division is performed exactly (remainder asserted zero).
    """
    n = len(lam)
    if n == 0:
        return beta ** 0
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise RingError(f"{lam} is not weakly decreasing")
    matrix = [[z ** (lam[k - 1] + n - k) * (1 + beta * z) ** (k - 1)
               for k in range(1, n + 1)] for z in zs]
    det = determinant(matrix)
    if n == 1:
        return det
    vandermonde = None
    for j in range(n):
        for k in range(j + 1, n):
            factor = zs[j] - zs[k]
            vandermonde = factor if vandermonde is None else vandermonde * factor
    if isinstance(det, RatFunc) and det.is_poly() and \
            isinstance(vandermonde, RatFunc) and vandermonde.is_poly():
        return RatFunc(exact_divide(det.as_poly(), vandermonde.as_poly()))
    return det / vandermonde


def degeneration_rhs(x, us, beta, m):
    """Grothendieck side of the t -> 0 limit of the first family.

    (-beta)^{-N(N-1)/2} * prod u_j^m * G_lambda(z; beta) with
    z_j = -1/beta - 1/u_j and lambda from the translation rule.
    """
    n = len(x)
    lam = config_to_young(x)
    zs = [-(beta ** -1) - u ** -1 for u in us]
    g = grothendieck_det(lam, zs, beta)
    scale = (-beta) ** -(n * (n - 1) // 2)
    for u in us:
        scale = scale * u ** m
    return scale * g


def interlaces(y, x):
    """y_1 <= x_1 <= y_2 <= ... <= x_N <= y_{N+1} (|y| = |x| + 1)."""
    if len(y) != len(x) + 1:
        return False
    for j, xv in enumerate(x):
        if not (y[j] <= xv <= y[j + 1]):
            return False
    return True


def _skew_subsequences(y, x):
    """The distinguished subsequences of y and of x.

    p's are the entries y_j differing from both x_j and x_{j-1}; q's are the
    entries x_j differing from both y_j and y_{j+1}.  Missing comparands at
    the boundary are treated as never equal.
    """
    ps = [y[j] for j in range(len(y))
          if (j >= len(x) or y[j] != x[j]) and (j == 0 or y[j] != x[j - 1])]
    qs = [x[j] for j in range(len(x))
          if x[j] != y[j] and x[j] != y[j + 1]]
    return ps, qs


def skew_factor(kind, y, x, u, p, m):
    """Closed-product skew factor of one of the four families.

    y and x are the position tuples of the larger (size N+1) and smaller
    (size N) configurations; 0 unless y interlaces x.  Equals the
    corresponding single-row operator matrix element.
    """
    y, x = tuple(y), tuple(x)
    if not interlaces(y, x):
        return p.zero()
    ps, qs = _skew_subsequences(y, x)
    k = len(qs)
    if len(ps) != k + 1:
        raise RingError("skew subsequence extraction out of balance")
    qext = [0] + qs + [m + 1]
    t, a, b, c, d, e, f = p.t, p.a, p.b, p.c, p.d, p.e, p.f
    if kind in ("G", "H"):
        result = ((1 - t) * c * u) ** (k + 1) * ((1 - t) * d) ** k
    elif kind in ("Gbar", "Hbar"):
        result = ((1 - t) * d) ** (k + 1) * ((1 - t) * c * u) ** k
    else:
        raise RingError(f"unknown skew kind {kind!r}")
    # Weight pairs: (between p_j and q_j: occupied/empty), then
    # (between q_{j-1} and p_j: occupied/empty).
    weights = {
        "G": ((a * t * u + b, a * u + b), (e * u + t * f, e * u + f)),
        "H": ((a * u + b, a * t * u + b), (e * u + f, e * u + t * f)),
        "Gbar": ((e * u + t * f, e * u + f), (a * t * u + b, a * u + b)),
        "Hbar": ((e * u + f, e * u + t * f), (a * u + b, a * t * u + b)),
    }[kind]
    (w_up_occ, w_up_emp), (w_dn_occ, w_dn_emp) = weights
    for j in range(1, k + 2):
        pj, qj, qprev = ps[j - 1], qext[j], qext[j - 1]
        occ_up = sum(1 for v in x if pj < v < qj)
        occ_dn = sum(1 for v in x if qprev < v < pj)
        result = result \
            * w_up_occ ** occ_up * w_up_emp ** (qj - pj - 1 - occ_up) \
            * w_dn_occ ** occ_dn * w_dn_emp ** (pj - qprev - 1 - occ_dn)
    return result
