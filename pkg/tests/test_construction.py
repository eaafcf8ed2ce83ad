"""Structured code construction, spectra, and the GV-style exponent."""

import itertools
import math

import numpy as np
import pytest

from typewriter_bounds.construction import (
    INF,
    StructuredGenerator,
    code_from_generator,
    gv_delta,
    gv_spectrum_exponent,
    hamming_spectrum,
    optimize_exponent,
    random_inner_generator,
    read_code_file,
    spectrum_csv,
    structured_weight,
    symbol_distance,
    union_bound,
    weight_spectrum,
    word_distance,
    word_weight,
    write_code_file,
)
from typewriter_bounds.curves import GV_SLOPE, LOG5
from typewriter_bounds.scalars import bisect_root


def test_symbol_and_word_distance():
    assert symbol_distance(0, 0) == 0
    assert symbol_distance(0, 1) == 1
    assert symbol_distance(1, 0) == 1
    assert symbol_distance(4, 0) == 1
    assert symbol_distance(0, 2) == INF
    assert word_distance((0, 1), (1, 1)) == 1
    assert word_distance((0, 1), (1, 2)) == 2
    assert word_distance((0, 0), (2, 0)) == INF
    assert word_weight((1, 4, 0)) == 2
    with pytest.raises(ValueError):
        word_distance((0,), (0, 0))


def test_structured_weight_matches_direct_weight_exhaustively():
    for n in (1, 2):
        words = list(itertools.product(range(5), repeat=n))
        for u1 in words:
            for nu in words:
                full = u1 + tuple((2 * a + v) % 5 for a, v in zip(u1, nu))
                assert structured_weight(u1, nu) == word_weight(full)


def test_structured_generator_matrix_layout():
    gen = StructuredGenerator(2, 1, [[1, 2]])
    want = np.array(
        [
            [1, 0, 2, 0],
            [0, 1, 0, 2],
            [0, 0, 1, 2],
        ]
    )
    assert (gen.matrix == want).all()
    assert gen.message_count == 125
    with pytest.raises(ValueError):
        StructuredGenerator(2, 1, [[1, 2, 3]])


def test_seed_code_spectrum():
    gen = StructuredGenerator(2, 1, [[1, 2]])
    spec = weight_spectrum(gen)
    assert spec.counts == {0: 1, 2: 4, 3: 8, 4: 4}
    assert spec.infinite_count == 108
    assert spec.total == 125


def test_hamming_spectrum_of_identity():
    spec = hamming_spectrum(np.eye(2, dtype=int))
    assert spec.counts == {0: 1, 1: 8, 2: 16}
    assert spec.infinite_count == 0


def test_spectrum_from_inner_hamming_distribution():
    # each nonzero symbol of the inner word contributes weight 1 or 2, so
    # A_z = sum_d B_d C(d, z - d) over d <= z <= 2d
    G = random_inner_generator(3, 2, seed=11)
    spec = weight_spectrum(StructuredGenerator(3, 2, G))
    ham = hamming_spectrum(G)
    predicted: dict[int, int] = {}
    for d, count in ham.counts.items():
        for z in range(d, 2 * d + 1):
            predicted[z] = predicted.get(z, 0) + count * math.comb(d, z - d)
    assert spec.counts == predicted


def test_union_bound_on_the_seed_code():
    spec = weight_spectrum(StructuredGenerator(2, 1, [[1, 2]]))
    assert union_bound(spec) == pytest.approx(2.25, abs=1e-12)


def test_gv_delta_anchors():
    assert gv_delta(0.0) == pytest.approx(0.8, abs=1e-9)
    assert gv_delta(0.5) < gv_delta(0.1) < 0.8
    with pytest.raises(ValueError):
        gv_delta(1.0)
    with pytest.raises(ValueError):
        gv_delta(-0.1)


def test_gv_delta_zeroes_the_spectrum_exponent():
    for r in (0.0, 0.2, 0.5, 0.9):
        assert gv_spectrum_exponent(r, gv_delta(r)) == pytest.approx(0.0, abs=1e-9)


def test_optimize_exponent_branches_agree_at_the_switch():
    r_switch = bisect_root(lambda t: gv_delta(t) - 0.75, 0.0, 0.5)
    lo = optimize_exponent(r_switch - 1e-9)
    hi = optimize_exponent(r_switch + 1e-9)
    assert abs(lo.exponent - hi.exponent) <= 1e-6
    assert lo.exponent == pytest.approx(0.311278, abs=1e-5)
    assert hi.delta_star == 0.75
    assert lo.tau_star == hi.tau_star == pytest.approx(1.0 / 3.0, abs=0)


def test_optimize_exponent_at_zero_rate():
    res = optimize_exponent(0.0)
    assert res.delta_gv == pytest.approx(0.8, abs=1e-9)
    assert res.delta_star == res.delta_gv
    assert res.exponent == pytest.approx(0.8 * GV_SLOPE, abs=1e-9)


def test_code_from_generator_matches_spectrum():
    gen = StructuredGenerator(2, 1, [[1, 2]])
    code = code_from_generator(gen)
    assert code.shape == (125, 4)
    assert len({tuple(w) for w in code.tolist()}) == 125
    weights = [word_weight(tuple(w)) for w in code.tolist()]
    finite = [w for w in weights if w != INF]
    spec = weight_spectrum(gen)
    assert sorted(finite) == sorted(
        w for w, c in spec.counts.items() for _ in range(c)
    )


def test_code_file_roundtrip(tmp_path):
    path = tmp_path / "code.txt"
    code = [(0, 1, 2), (3, 4, 0)]
    write_code_file(path, code, header_comment="two words")
    text = path.read_text()
    assert text.startswith("# two words\n")
    back = read_code_file(path)
    assert back.tolist() == [[0, 1, 2], [3, 4, 0]]


def test_code_file_rejects_bad_content(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("012\n905\n")
    with pytest.raises(ValueError):
        read_code_file(bad)
    mixed = tmp_path / "mixed.txt"
    mixed.write_text("012\n01\n")
    with pytest.raises(ValueError):
        read_code_file(mixed)
    empty = tmp_path / "empty.txt"
    empty.write_text("# only a comment\n")
    with pytest.raises(ValueError):
        read_code_file(empty)


def test_spectrum_csv_layout():
    spec = weight_spectrum(StructuredGenerator(2, 1, [[1, 2]]))
    text = spectrum_csv(spec, header_comment="seed")
    assert text == "# seed\nweight,count\n0,1\n2,4\n3,8\n4,4\ninf,108\n"


def test_random_inner_generator_is_seeded():
    a = random_inner_generator(3, 2, seed=7)
    b = random_inner_generator(3, 2, seed=7)
    c = random_inner_generator(3, 2, seed=8)
    assert (a == b).all()
    assert a.shape == (2, 3)
    assert not (a == c).all()


def test_weight_spectrum_guard():
    gen = StructuredGenerator(8, 4, np.zeros((4, 8), dtype=int))
    with pytest.raises(ValueError):
        weight_spectrum(gen)
