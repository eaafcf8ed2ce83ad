"""Scalar numeric kernels shared by the bound computations.

Everything here is deliberately dependency-free: q-ary entropy, log-domain
binomials, a deterministic bisection root finder, and Krawtchouk polynomial
evaluation for possibly non-integer alphabet parameters.  All logarithms are
base 2.
"""

from __future__ import annotations

import math

__all__ = [
    "qary_entropy",
    "log2_binomial",
    "bisect_root",
    "real_binomial",
    "krawtchouk",
    "krawtchouk_recurrence",
]

_MAX_KRAWTCHOUK_N = 64
_EXACT_BINOMIAL_N = 60


def qary_entropy(t: float, q: float) -> float:
    """H_q(t) = t*log2(q-1) - t*log2(t) - (1-t)*log2(1-t), with 0*log 0 = 0."""
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"entropy argument {t!r} outside [0, 1]")
    if q <= 1.0:
        raise ValueError(f"alphabet parameter {q!r} must exceed 1")
    s = 0.0
    if t > 0.0:
        s += t * math.log2(q - 1.0) - t * math.log2(t)
    if t < 1.0:
        s -= (1.0 - t) * math.log2(1.0 - t)
    return s


def log2_binomial(n: int, k: int) -> float:
    """log2 C(n, k).  Exact integer path for n <= 60, lgamma beyond."""
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"binomial ({n}, {k}) out of range")
    if n <= _EXACT_BINOMIAL_N:
        return math.log2(math.comb(n, k))
    lg = math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)
    return lg / math.log(2.0)


def bisect_root(f, lo: float, hi: float, tol: float = 1e-12, max_iter: int = 200) -> float:
    """Root of f by bisection on [lo, hi]; final bracket width <= tol.

    Requires a sign change over the bracket.  Endpoints where |f| <= 1e-12
    are accepted as roots directly, which keeps callers with tangential
    endpoint roots (no strict sign change) well defined.
    """
    if not lo < hi:
        raise ValueError(f"empty bracket [{lo}, {hi}]")
    flo, fhi = f(lo), f(hi)
    if abs(flo) <= 1e-12:
        return lo
    if abs(fhi) <= 1e-12:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise ValueError(f"no sign change on [{lo}, {hi}]: f(lo)={flo}, f(hi)={fhi}")
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return 0.5 * (lo + hi)


def real_binomial(u: float, j: int) -> float:
    """C(u, j) for real u via falling factorial; exact comb for integer u."""
    if j < 0:
        raise ValueError("lower index must be nonnegative")
    if isinstance(u, int) or float(u).is_integer():
        ui = int(round(u))
        if 0 <= ui:
            return float(math.comb(ui, j)) if j <= ui else 0.0
    p = 1.0
    for i in range(j):
        p *= u - i
    return p / math.factorial(j)


def krawtchouk(n: int, ell: int, u: float, qprime: float) -> float:
    """K_ell(u; n, q') = sum_j (-1)^j (q'-1)^(ell-j) C(u, j) C(n-u, ell-j).

    q' may be non-integer.  Terms are combined with exact compensated
    summation (math.fsum); n above 64 is refused because the term magnitudes
    then outgrow what double precision can cancel reliably.
    """
    if n < 0 or n > _MAX_KRAWTCHOUK_N:
        raise ValueError(f"n={n} outside supported range [0, {_MAX_KRAWTCHOUK_N}]")
    if not 0 <= ell <= n:
        raise ValueError(f"degree {ell} outside [0, {n}]")
    terms = []
    for j in range(ell + 1):
        cu = real_binomial(u, j)
        cn = real_binomial(n - u, ell - j)
        if cu == 0.0 or cn == 0.0:
            continue
        terms.append((-1.0) ** j * (qprime - 1.0) ** (ell - j) * cu * cn)
    return math.fsum(terms)


def krawtchouk_recurrence(n: int, ell: int, u: float, qprime: float) -> float:
    """Same polynomial via the three-term recurrence; cross-check path.

    (l+1) K_{l+1}(u) = [(q'-1)(n-l) + l - q'u] K_l(u) - (q'-1)(n-l+1) K_{l-1}(u)
    """
    if n < 0 or n > _MAX_KRAWTCHOUK_N:
        raise ValueError(f"n={n} outside supported range [0, {_MAX_KRAWTCHOUK_N}]")
    if not 0 <= ell <= n:
        raise ValueError(f"degree {ell} outside [0, {n}]")
    km1, k = 0.0, 1.0
    for l in range(ell):
        nxt = (((qprime - 1.0) * (n - l) + l - qprime * u) * k
               - (qprime - 1.0) * (n - l + 1) * km1) / (l + 1)
        km1, k = k, nxt
    return k
