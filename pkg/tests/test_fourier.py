"""Group Fourier analysis on Z_q^n and the theta-type bound."""

import math

import numpy as np
import pytest

from typewriter_bounds.fourier import (
    GroupFunction,
    canonical_sphere_word,
    convolve,
    dft,
    freq_sphere_indicator,
    idft,
    inner,
    lovasz_assignment,
    lovasz_bound,
    sphere_size,
    sphere_transform,
    sphere_transform_closed_form,
)


def _random_function(n, q, seed):
    rng = np.random.default_rng(seed)
    vals = rng.normal(size=(q,) * n) + 1j * rng.normal(size=(q,) * n)
    return GroupFunction(n, q, vals)


def test_group_function_validation():
    with pytest.raises(ValueError):
        GroupFunction(1, 4, np.zeros(4))  # even alphabet
    with pytest.raises(ValueError):
        GroupFunction(1, 3, np.zeros(3))  # too small
    with pytest.raises(ValueError):
        GroupFunction(2, 5, np.zeros(5))  # wrong shape
    f = GroupFunction(2, 5, np.arange(25.0).reshape(5, 5))
    assert f[(6, -1)] == f[(1, 4)]


def test_dft_matches_fft_oracle():
    f = _random_function(2, 5, seed=3)
    # with the +i kernel the transform is q^n times numpy's inverse FFT
    want = 25.0 * np.fft.ifftn(f.values)
    assert np.allclose(dft(f).values, want, atol=1e-12)


def test_idft_inverts_dft():
    for n, q in ((1, 5), (2, 5), (2, 7)):
        f = _random_function(n, q, seed=n * q)
        back = idft(dft(f))
        assert np.allclose(back.values, f.values, atol=1e-12)


def test_parseval():
    f = _random_function(2, 5, seed=9)
    lhs = inner(dft(f), dft(f))
    rhs = 25.0 * inner(f, f)
    assert lhs == pytest.approx(rhs, abs=1e-9)


def test_convolution_theorem():
    f = _random_function(2, 5, seed=1)
    g = _random_function(2, 5, seed=2)
    lhs = dft(convolve(f, g)).values
    rhs = dft(f).values * dft(g).values
    assert np.allclose(lhs, rhs, atol=1e-9)


def test_convolve_rejects_mismatched_or_huge_domains():
    f = _random_function(1, 5, seed=0)
    g = _random_function(1, 7, seed=0)
    with pytest.raises(ValueError):
        convolve(f, g)
    big = GroupFunction(6, 5, np.zeros((5,) * 6))
    with pytest.raises(ValueError):
        convolve(big, big)


def test_lovasz_assignment_structure():
    g = lovasz_assignment(1, 5)
    phi = 1.0 / (2.0 * math.cos(math.pi / 5.0))
    assert g[(0,)] == pytest.approx(1.0, abs=0)
    assert g[(1,)] == pytest.approx(phi, abs=1e-15)
    assert g[(4,)] == pytest.approx(phi, abs=1e-15)
    assert g[(2,)] == 0.0
    g2 = lovasz_assignment(2, 5)
    assert g2[(1, 4)] == pytest.approx(phi * phi, abs=1e-15)


def test_lovasz_assignment_transform_is_nonnegative():
    for n in (1, 2):
        ghat = dft(lovasz_assignment(n, 5)).values
        assert np.abs(ghat.imag).max() <= 1e-12
        assert ghat.real.min() >= -1e-12


def test_lovasz_bound_values():
    assert lovasz_bound(1, 5) == pytest.approx(math.sqrt(5.0), abs=1e-9)
    assert lovasz_bound(2, 5) == pytest.approx(5.0, abs=1e-9)
    assert lovasz_bound(3, 5) == pytest.approx(5.0 * math.sqrt(5.0), abs=1e-8)
    c = math.cos(math.pi / 7.0)
    assert lovasz_bound(1, 7) == pytest.approx(7.0 * c / (1.0 + c), abs=1e-12)
    with pytest.raises(ValueError):
        lovasz_bound(1, 4)


def test_sphere_size_and_indicator():
    assert sphere_size(4, 2) == 24
    ind = freq_sphere_indicator(3, 5, 1)
    total = ind.values.sum()
    assert total.real == sphere_size(3, 1)
    assert ind[(2, 0, 0)] == 1.0
    assert ind[(3, 0, 0)] == 1.0
    assert ind[(1, 0, 0)] == 0.0
    assert ind[(2, 3, 0)] == 0.0


def test_canonical_sphere_word():
    assert canonical_sphere_word(4, 2) == (1, 1, 0, 0)
    assert canonical_sphere_word(3, 0) == (0, 0, 0)
    with pytest.raises(ValueError):
        canonical_sphere_word(3, 4)


def test_sphere_transform_identity_small():
    for n in (2, 4):
        for ell in range(n + 1):
            for u in range(n + 1):
                direct = sphere_transform(n, 5, ell, canonical_sphere_word(n, u))
                closed = sphere_transform_closed_form(n, 5, ell, u)
                assert direct == pytest.approx(closed, abs=1e-10)


def test_sphere_transform_rejects_words_off_the_unit_sphere():
    with pytest.raises(ValueError):
        sphere_transform(2, 5, 1, (2, 0))


def test_effective_alphabet_parameter_is_sqrt5():
    qprime = 1.0 + 1.0 / math.cos(math.pi / 5.0)
    assert qprime == pytest.approx(math.sqrt(5.0), abs=1e-12)
