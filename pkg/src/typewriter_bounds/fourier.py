"""Fourier analysis on Z_q^n used by the linear-programming code bounds.

Transforms use the symmetric kernel exp(+2 pi i <w, x> / q), applied axis by
axis as a dense matrix product.  The central object is the product witness
function that is 1 at the origin and 1/(2 cos(pi/q)) at the 2n words that
differ from it by one cyclic step: its transform vanishes identically on the
frequency spheres with all nonzero entries equal to +-(q-1)/2, which is what
lets sphere-supported multipliers be folded in without disturbing
nonnegativity, and its ratio q^n f(0)/f_hat(0) reproduces the theta-function
value (q cos(pi/q)/(1 + cos(pi/q)))^n.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .scalars import krawtchouk

__all__ = [
    "GroupFunction",
    "dft",
    "idft",
    "convolve",
    "inner",
    "lovasz_assignment",
    "lovasz_bound",
    "sphere_size",
    "freq_sphere_indicator",
    "canonical_sphere_word",
    "sphere_transform",
    "sphere_transform_closed_form",
]

_SIZE_GUARD = 10**7


@dataclass(frozen=True)
class GroupFunction:
    """Dense complex function on Z_q^n, stored as a (q,)*n array."""

    n: int
    q: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.q < 5 or self.q % 2 == 0:
            raise ValueError(f"alphabet size {self.q} must be odd and >= 5")
        if self.n < 1:
            raise ValueError("need n >= 1")
        if self.q**self.n > _SIZE_GUARD:
            raise ValueError(f"q^n = {self.q**self.n} exceeds guard {_SIZE_GUARD}")
        vals = np.asarray(self.values, dtype=np.complex128)
        if vals.shape != (self.q,) * self.n:
            raise ValueError(f"values shape {vals.shape} != {(self.q,) * self.n}")
        object.__setattr__(self, "values", vals)

    def __getitem__(self, word) -> complex:
        return complex(self.values[tuple(c % self.q for c in word)])


def _apply_axes(f: GroupFunction, kernel: np.ndarray) -> GroupFunction:
    arr = f.values
    for axis in range(f.n):
        arr = np.moveaxis(np.tensordot(kernel, arr, axes=([1], [axis])), 0, axis)
    return GroupFunction(f.n, f.q, arr)


def dft(f: GroupFunction) -> GroupFunction:
    """f_hat(w) = sum_x f(x) exp(+2 pi i <w, x> / q)."""
    q = f.q
    grid = np.arange(q)
    kernel = np.exp(2j * np.pi * np.outer(grid, grid) / q)
    return _apply_axes(f, kernel)


def idft(f: GroupFunction) -> GroupFunction:
    """Inverse of dft: q^-n sum_w f(w) exp(-2 pi i <w, x> / q)."""
    q = f.q
    grid = np.arange(q)
    kernel = np.exp(-2j * np.pi * np.outer(grid, grid) / q) / q
    return _apply_axes(f, kernel)


def convolve(f: GroupFunction, g: GroupFunction) -> GroupFunction:
    """Cyclic convolution (f * g)(x) = sum_y f(x - y) g(y), direct sum."""
    if (f.n, f.q) != (g.n, g.q):
        raise ValueError("mismatched domains")
    q, n = f.q, f.n
    if q ** (2 * n) > _SIZE_GUARD:
        raise ValueError("domain too large for direct convolution")
    out = np.zeros((q,) * n, dtype=np.complex128)
    for y in itertools.product(range(q), repeat=n):
        shifted = f.values
        for axis, c in enumerate(y):
            shifted = np.roll(shifted, c, axis=axis)
        out += shifted * g.values[y]
    return GroupFunction(n, q, out)


def inner(f: GroupFunction, g: GroupFunction) -> complex:
    """(f, g) = q^-n sum_x conj(f(x)) g(x)."""
    if (f.n, f.q) != (g.n, g.q):
        raise ValueError("mismatched domains")
    return complex(np.vdot(f.values, g.values) / f.q**f.n)


def lovasz_assignment(n: int, q: int) -> GroupFunction:
    """Product witness: 1 at 0 and 1/(2 cos(pi/q)) at single cyclic steps.

    Built as the n-fold product of the one-letter assignment, so g(x) =
    phi^(number of nonzero coordinates) on {0, +-1}^n and 0 elsewhere.
    """
    phi = 1.0 / (2.0 * math.cos(math.pi / q))
    one = np.zeros(q)
    one[0] = 1.0
    one[1] = phi
    one[-1] = phi
    vals = one
    for _ in range(n - 1):
        vals = np.multiply.outer(vals, one)
    return GroupFunction(n, q, vals)


def lovasz_bound(n: int, q: int) -> float:
    """Theta-type zero-error bound (q cos(pi/q) / (1 + cos(pi/q)))^n."""
    if q < 5 or q % 2 == 0:
        raise ValueError(f"alphabet size {q} must be odd and >= 5")
    if n < 1:
        raise ValueError("need n >= 1")
    c = math.cos(math.pi / q)
    return (q * c / (1.0 + c)) ** n


def sphere_size(n: int, ell: int) -> int:
    """Number of words with exactly ell coordinates in a fixed +- pair."""
    return math.comb(n, ell) * 2**ell


def freq_sphere_indicator(n: int, q: int, ell: int) -> GroupFunction:
    """Indicator of words with ell coordinates equal to +-(q-1)/2, rest 0."""
    if not 0 <= ell <= n:
        raise ValueError(f"sphere index {ell} outside [0, {n}]")
    c = (q - 1) // 2
    vals = np.zeros((q,) * n)
    for positions in itertools.combinations(range(n), ell):
        for signs in itertools.product((c, q - c), repeat=ell):
            w = [0] * n
            for pos, s in zip(positions, signs):
                w[pos] = s
            vals[tuple(w)] = 1.0
    return GroupFunction(n, q, vals)


def canonical_sphere_word(n: int, u: int) -> tuple[int, ...]:
    """A representative with u leading ones: (1,...,1,0,...,0)."""
    if not 0 <= u <= n:
        raise ValueError(f"weight {u} outside [0, {n}]")
    return (1,) * u + (0,) * (n - u)


def sphere_transform(n: int, q: int, ell: int, x) -> float:
    """Transform of the ell-th frequency sphere at x, by direct summation.

    x must have entries in {0, 1, q-1}.  The sum over sphere members is real
    by the +- symmetry; the imaginary residue is checked and discarded.
    """
    x = tuple(c % q for c in x)
    if len(x) != n or any(c not in (0, 1, q - 1) for c in x):
        raise ValueError(f"word {x!r} is not in a unit sphere of Z_{q}^{n}")
    c = (q - 1) // 2
    total = 0.0 + 0.0j
    for positions in itertools.combinations(range(n), ell):
        for signs in itertools.product((c, q - c), repeat=ell):
            phase = sum(s * x[pos] for pos, s in zip(positions, signs))
            total += np.exp(2j * np.pi * phase / q)
    if abs(total.imag) > 1e-9 * max(1.0, abs(total.real)):
        raise AssertionError(f"non-real sphere transform {total!r}")
    return float(total.real)


def sphere_transform_closed_form(n: int, q: int, ell: int, u: int) -> float:
    """(2 cos(pi/q))^ell K_ell(u; n, q') with q' = 1 + 1/cos(pi/q).

    For q = 5 the effective alphabet parameter q' equals sqrt 5 exactly.
    """
    c = math.cos(math.pi / q)
    qprime = 1.0 + 1.0 / c
    return (2.0 * c) ** ell * krawtchouk(n, ell, u, qprime)
