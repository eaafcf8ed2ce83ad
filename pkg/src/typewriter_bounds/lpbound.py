"""Linear-programming code bounds at the effective alphabet size q' = sqrt 5.

A feasible multiplier vector lam with lam_0 = 1, lam_ell >= 0 and
Lambda(u) = sum_ell lam_ell K_ell(u) <= 0 for u = d..n certifies that any
code whose confusable pairs all differ in at least d coordinates has at most
Lambda(0) words per Lovasz witness, for a composite bound of
(q cos / (1 + cos))^n * Lambda(0).  This module finds optimal multipliers by
simplex, builds the explicit two-point Christoffel-Darboux multipliers used
in the asymptotic analysis, reconstructs the product certificate function on
Z_q^n, and verifies it pointwise.  Exact small-length optima come from a
branch-and-bound clique search for cross-checking.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .construction import INF, word_distance
from .fourier import (
    GroupFunction,
    dft,
    freq_sphere_indicator,
    idft,
    lovasz_assignment,
    lovasz_bound,
)
from .scalars import bisect_root, krawtchouk
from .simplex import simplex_solve

__all__ = [
    "QPRIME",
    "LPSolution",
    "solve_distance_lp",
    "composite_bound",
    "first_root",
    "mrrw_certificate",
    "mrrw_params",
    "certificate_function",
    "CertificateReport",
    "verify_certificate",
    "max_code",
    "save_certificate",
    "load_certificate",
]

QPRIME = 1.0 + 1.0 / math.cos(math.pi / 5.0)  # equals sqrt 5


@dataclass(frozen=True)
class LPSolution:
    """Multiplier certificate for one (n, d) pair.

    lam[ell] are the Krawtchouk multipliers with lam[0] = 1, Lambda[u] the
    resulting polynomial values, objective = Lambda[0].  status is
    "optimal" for simplex output, "certificate" for the explicit
    Christoffel-Darboux construction, or a simplex failure string.
    """

    n: int
    d: float
    qprime: float
    lam: tuple
    Lambda: tuple
    objective: float
    status: str


def _normalize_d(n: int, d) -> float:
    if d != INF:
        if d != int(d) or d < 1:
            raise ValueError(f"distance {d} must be a positive integer or inf")
        d = int(d)
        if d > n:
            return INF
    return d


def _kraw_table(n: int, qprime: float) -> np.ndarray:
    """K[u, ell] = K_ell(u) for u, ell = 0..n."""
    return np.array(
        [[krawtchouk(n, ell, u, qprime) for ell in range(n + 1)] for u in range(n + 1)]
    )


def solve_distance_lp(n: int, d, qprime: float = QPRIME) -> LPSolution:
    """Minimize Lambda(0) over lam_0 = 1, lam >= 0, Lambda(u) <= 0, u = d..n.

    Columns are scaled by K_ell(0) so the tableau entries stay O(1); the
    multipliers are recovered afterwards.  With d > n (or inf) there is no
    constraint and the trivial lam = e_0 is optimal.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    d = _normalize_d(n, d)
    K = _kraw_table(n, qprime)
    if d == INF:
        lam = (1.0,) + (0.0,) * n
        return LPSolution(n, d, qprime, lam, tuple(K[:, 0]), 1.0, "optimal")

    k0 = K[0, 1:]  # K_ell(0) = (q'-1)^ell C(n, ell) > 0
    scaled = K[:, 1:] / k0
    res = simplex_solve(
        np.ones(n),
        A_ub=scaled[d:, :],
        b_ub=-np.ones(n + 1 - d),
    )
    if res.status != "optimal":
        nanv = (math.nan,) * (n + 1)
        return LPSolution(n, d, qprime, nanv, nanv, math.nan, res.status)
    mu = np.maximum(res.x, 0.0)
    lam = np.concatenate([[1.0], mu / k0])
    values = K @ lam
    slack = float(values[d:].max(initial=-math.inf))
    if slack > 1e-7 * max(1.0, float(values[0])):
        raise ArithmeticError(f"simplex solution violates Lambda <= 0 by {slack:.3e}")
    return LPSolution(
        n, d, qprime, tuple(lam), tuple(values), float(values[0]), "optimal"
    )


def composite_bound(n: int, d, qprime: float = QPRIME) -> float:
    """(5 cos / (1 + cos))^n times the distance-LP value."""
    sol = solve_distance_lp(n, d, qprime)
    if sol.status != "optimal":
        raise ArithmeticError(f"distance LP failed: {sol.status}")
    return lovasz_bound(n, 5) * sol.objective


def first_root(n: int, ell: int, qprime: float = QPRIME) -> float:
    """Smallest positive zero of u -> K_ell(u), by scan plus bisection."""
    if ell < 1:
        raise ValueError("K_0 has no root")
    f = lambda u: krawtchouk(n, ell, u, qprime)
    prev_u, prev_v = 0.0, f(0.0)
    u = 0.05
    while u <= n + 0.05:
        v = f(u)
        if v == 0.0:
            return u
        if (prev_v > 0.0) != (v > 0.0):
            return bisect_root(f, prev_u, u)
        prev_u, prev_v = u, v
        u += 0.05
    raise ArithmeticError(f"no sign change found for K_{ell} on [0, {n}]")


def mrrw_certificate(n: int, d: int, t: int, a: float, qprime: float = QPRIME) -> LPSolution:
    """Christoffel-Darboux multiplier at degree t and reference point a.

    Lambda(u) = (a - u)^-1 (K_t(a) K_{t+1}(u) - K_{t+1}(a) K_t(u))^2, which
    is <= 0 for u > a automatically; the multipliers come from Krawtchouk
    orthogonality with weight (q'-1)^u C(n, u) and are then normalized to
    lam_0 = 1.  Positivity of the lam_ell depends on the choice of (t, a)
    and is left to the caller (see mrrw_params).
    """
    if not 1 <= t < n:
        raise ValueError(f"degree {t} outside [1, {n - 1}]")
    if not 0.0 < a < d:
        raise ValueError(f"reference point {a} outside (0, {d})")
    kta = krawtchouk(n, t, a, qprime)
    kt1a = krawtchouk(n, t + 1, a, qprime)
    K = _kraw_table(n, qprime)
    values = np.array(
        [(kta * K[u, t + 1] - kt1a * K[u, t]) ** 2 / (a - u) for u in range(n + 1)]
    )
    weight = np.array(
        [(qprime - 1.0) ** u * math.comb(n, u) for u in range(n + 1)]
    )
    lam = np.empty(n + 1)
    for ell in range(n + 1):
        num = math.fsum(weight[u] * values[u] * K[u, ell] for u in range(n + 1))
        lam[ell] = num / (qprime**n * (qprime - 1.0) ** ell * math.comb(n, ell))
    lam0 = lam[0]
    if lam0 <= 0.0:
        raise ArithmeticError(f"lam_0 = {lam0:.3e} is not positive at (t={t}, a={a})")
    lam /= lam0
    values /= lam0
    return LPSolution(
        n, float(d), qprime, tuple(lam), tuple(values), float(values[0]), "certificate"
    )


def mrrw_params(n: int, d: int, qprime: float = QPRIME):
    """Search (t, a) giving a valid Christoffel-Darboux certificate.

    a sits just below min(first_root(K_t), d) and must stay above the first
    root of K_{t+1} so both boundary Krawtchouk values keep their signs.
    Returns (t, a, objective) with the smallest objective among valid
    choices, or None when no degree works.
    """
    best = None
    root_next = first_root(n, 1, qprime)
    for t in range(1, n // 2 + 2):
        root_t = root_next
        try:
            root_next = first_root(n, t + 1, qprime)
        except (ArithmeticError, ValueError):
            break
        a = min(root_t, float(d)) - 1e-6
        if a <= root_next or a <= 0.0:
            continue
        try:
            sol = mrrw_certificate(n, d, t, a, qprime)
        except ArithmeticError:
            continue
        lam = np.array(sol.lam)
        if lam.min() < -1e-9 * lam.max():
            continue
        if best is None or sol.objective < best[2]:
            best = (t, a, sol.objective)
    return best


def _hstar_coefficients(sol: LPSolution, q: int) -> list:
    """Frequency-sphere weights q^n lam_ell (2 cos)^-ell of the multiplier."""
    c = math.cos(math.pi / q)
    return [q**sol.n * lam / (2.0 * c) ** ell for ell, lam in enumerate(sol.lam)]


def certificate_function(sol: LPSolution, q: int = 5) -> GroupFunction:
    """Product witness times sphere multiplier, as a function on Z_q^n.

    Requires sol.qprime = 1 + 1/cos(pi/q), which ties the Krawtchouk
    parameter to the alphabet.  The result f vanishes off {0, +-1}^n, is
    <= 0 on confusable differences with >= d steps, has nonnegative
    transform, and satisfies q^n f(0) / f_hat(0) = composite bound.
    """
    c = math.cos(math.pi / q)
    if abs(sol.qprime - (1.0 + 1.0 / c)) > 1e-9:
        raise ValueError(f"certificate qprime {sol.qprime} does not match q = {q}")
    n = sol.n
    hhat = np.zeros((q,) * n)
    for ell, coeff in enumerate(_hstar_coefficients(sol, q)):
        if coeff != 0.0:
            hhat += coeff * freq_sphere_indicator(n, q, ell).values.real
    h = idft(GroupFunction(n, q, hhat))
    g = lovasz_assignment(n, q)
    return GroupFunction(n, q, g.values * h.values)


def _typewriter_weight(word, q: int) -> float:
    w = 0
    for cdig in word:
        cdig %= q
        if cdig == 0:
            continue
        if cdig == 1 or cdig == q - 1:
            w += 1
        else:
            return INF
    return float(w)


@dataclass(frozen=True)
class CertificateReport:
    ok: bool
    bound: float
    support_violation: float  # max f(x) over weights >= d, should be <= 0
    transform_minimum: float  # min of f_hat, should be >= 0
    detail: str


def verify_certificate(sol: LPSolution, q: int = 5) -> CertificateReport:
    """Pointwise check of the reconstructed certificate function.

    Confirms f <= 0 wherever the typewriter weight is >= d (including all
    non-confusable differences), f_hat >= 0 everywhere, and that the bound
    q^n f(0) / f_hat(0) matches the composite value lovasz * Lambda(0).
    Tolerances are relative to the largest magnitude in each array.
    """
    import itertools

    f = certificate_function(sol, q)
    fr = f.values.real
    scale = float(np.abs(fr).max())
    worst = -math.inf
    for x in itertools.product(range(q), repeat=sol.n):
        if _typewriter_weight(x, q) >= sol.d:
            worst = max(worst, fr[x])
    fhat = dft(f).values.real
    hatscale = float(np.abs(fhat).max())
    tmin = float(fhat.min())
    origin = (0,) * sol.n
    bound = q**sol.n * fr[origin] / fhat[origin]
    target = lovasz_bound(sol.n, q) * sol.objective
    ok = (
        worst <= 1e-9 * max(1.0, scale)
        and tmin >= -1e-9 * max(1.0, hatscale)
        and abs(bound - target) <= 1e-6 * max(1.0, abs(target))
    )
    detail = (
        f"bound={bound:.12g} target={target:.12g} "
        f"support_max={worst:.3e} transform_min={tmin:.3e}"
    )
    return CertificateReport(ok, float(bound), float(worst), tmin, detail)


def max_code(n: int, d):
    """Exact maximum code size for length n and typewriter distance >= d.

    Branch and bound over the compatibility graph on all 5^n words with
    bitset adjacency.  Words are scanned in base-5 lexicographic order, so
    the returned witness is the lexicographically first maximum code.  The
    greedy seed enters as a size bound only, one below its own size, which
    forces the search to rediscover (and thereby lex-minimize) the witness.
    """
    if n < 1 or 5**n > 500:
        raise ValueError(f"clique search limited to 5^n <= 500, got n = {n}")
    # normalize before the cache so every d > n shares the d = inf entry
    return _max_code_impl(n, _normalize_d(n, d))


@functools.lru_cache(maxsize=None)
def _max_code_impl(n: int, d):
    import itertools

    words = list(itertools.product(range(5), repeat=n))
    nv = len(words)
    adj = [0] * nv
    for i in range(nv):
        for j in range(i + 1, nv):
            dist = word_distance(words[i], words[j])
            compatible = dist == INF if d == INF else dist >= d
            if compatible:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    universe = (1 << nv) - 1
    # bitsets are keyed by their lowest set bit so the hot loops never need
    # an index extraction; single-bit ints hash cheaply
    adj_by_bit = {1 << v: adj[v] for v in range(nv)}
    conf_by_bit = {1 << v: (universe & ~adj[v]) & ~(1 << v) for v in range(nv)}

    greedy = []
    ok = universe
    while ok:
        v = (ok & -ok).bit_length() - 1
        greedy.append(v)
        ok &= adj[v]
    best_size = len(greedy) - 1
    best: list = []

    def extend(chosen: list, pool: int, depth: int) -> None:
        nonlocal best_size, best
        if depth > best_size:
            best_size = depth
            best = list(chosen)
        budget = best_size - depth
        if pool.bit_count() <= budget:
            return
        # greedy clique cover of the conflict graph: each class is an
        # independent set of the compatibility graph, so a code meets it at
        # most once and the class count bounds the residual clique; falling
        # out of the loop means the cover fits the budget, hence prune
        rem = pool
        count = 0
        while rem:
            count += 1
            if count > budget:
                break
            can = rem
            while can:
                low = can & -can
                rem ^= low
                can &= conf_by_bit[low]
        else:
            return
        while pool:
            if depth + pool.bit_count() <= best_size:
                return
            low = pool & -pool
            pool ^= low
            chosen.append(low)
            extend(chosen, pool & adj_by_bit[low], depth + 1)
            chosen.pop()

    extend([], universe, 0)
    return best_size, tuple(words[b.bit_length() - 1] for b in best)


def save_certificate(sol: LPSolution, path) -> None:
    """Write an LPSolution as a small key-value text file."""
    lines = [
        "# distance LP certificate",
        f"n {sol.n}",
        f"d {'inf' if sol.d == INF else int(sol.d)}",
        f"qprime {format(sol.qprime, '.17g')}",
        f"status {sol.status}",
        f"objective {format(sol.objective, '.17g')}",
        "lam " + " ".join(format(v, ".17g") for v in sol.lam),
        "Lambda " + " ".join(format(v, ".17g") for v in sol.Lambda),
    ]
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def load_certificate(path) -> LPSolution:
    fields = {}
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, rest = line.partition(" ")
            fields[key] = rest
    d = fields["d"]
    return LPSolution(
        n=int(fields["n"]),
        d=INF if d == "inf" else float(int(d)),
        qprime=float(fields["qprime"]),
        lam=tuple(float(v) for v in fields["lam"].split()),
        Lambda=tuple(float(v) for v in fields["Lambda"].split()),
        objective=float(fields["objective"]),
        status=fields["status"],
    )
