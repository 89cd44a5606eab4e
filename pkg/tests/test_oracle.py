"""Exhaustive enumeration oracle: distributions, neighbors, thresholds."""

import numpy as np
import pytest

from coldec import (
    LinearCode,
    OracleThresholdError,
    PrimeField,
    coset_weight,
    count_at_distance,
    enumerate_min_distance,
    nearest_neighbors,
    projective_min_weight_count,
    projective_words_of_weight,
    weight_distribution,
)
from conftest import random_code


def test_enumerate_min_distance_demo(demo_code, hamming_code):
    assert enumerate_min_distance(demo_code) == 3
    assert enumerate_min_distance(hamming_code) == 3


def test_weight_distribution_repetition():
    # [3,1] repetition over GF(3): two nonzero words, both of weight 3
    C = LinearCode(PrimeField(3), [[1, 1, 1]])
    dist = weight_distribution(C)
    assert dist.counts == {3: 1}  # one projective class
    assert dist.total() == 1


def test_weight_distribution_demo(demo_code):
    dist = weight_distribution(demo_code)
    # seven nonzero binary words: weights 3,3,3,3,4,4,4
    assert dist.counts == {3: 4, 4: 3}
    assert dist.total() == 7


def test_projective_min_weight_count_demo(demo_code):
    assert projective_min_weight_count(demo_code) == 4


def test_nearest_neighbors_demo(demo_code, demo_word):
    d_w, vectors = nearest_neighbors(demo_code, demo_word)
    assert d_w == 1
    assert vectors.shape == (1, 6)
    assert vectors[0].tolist() == [0, 1, 1, 1, 1, 0]
    assert coset_weight(demo_code, demo_word) == 1


def test_nearest_neighbors_of_codeword(demo_code):
    d_w, vectors = nearest_neighbors(demo_code, [1, 1, 0, 0, 1, 1])
    assert d_w == 0
    assert vectors.shape == (1, 6)  # the word is its own neighbor


def test_nearest_neighbors_tie(demo_code):
    # equidistant from three codewords
    w = np.array([1, 1, 0, 1, 0, 0])
    d_w, vectors = nearest_neighbors(demo_code, w)
    assert d_w == 2
    assert vectors.shape[0] == 3
    for v in vectors:
        assert ((w - v) % 2).sum() == d_w
        inside, _ = demo_code.contains(v)
        assert inside


def test_count_at_distance(demo_code, demo_word):
    assert count_at_distance(demo_code, demo_word, 1) == 1
    assert count_at_distance(demo_code, demo_word, 0) == 0
    # distance-2 shell around the received word
    d2 = count_at_distance(demo_code, demo_word, 2)
    w = np.asarray(demo_word)
    brute = 0
    for m in range(2**3):
        msg = [(m >> i) & 1 for i in range(3)]
        v = demo_code.encode(msg).v
        if ((w - v) % 2 != 0).sum() == 2:
            brute += 1
    assert d2 == brute


def test_projective_words_of_weight(demo_code, demo_word):
    Cw = demo_code.augment(demo_word)
    words = projective_words_of_weight(Cw, 1)
    assert words.shape == (1, 6)
    assert words[0].tolist() == [0, 0, 0, 0, 1, 0]
    with pytest.raises(ValueError):
        projective_words_of_weight(Cw, 0)


def test_projective_dedup_over_gf5():
    # [4,1] over GF(5): four scalar multiples of the generator, one class
    C = LinearCode(PrimeField(5), [[1, 2, 0, 3]])
    words = projective_words_of_weight(C, 3)
    assert words.shape == (1, 4)
    assert words[0].tolist() == [1, 2, 0, 3]  # first nonzero scaled to one


def test_threshold_enforced():
    C = LinearCode(PrimeField(2), [[1, 0, 1], [0, 1, 1]])
    with pytest.raises(OracleThresholdError):
        enumerate_min_distance(C, threshold=3)
    with pytest.raises(OracleThresholdError):
        nearest_neighbors(C, [1, 1, 1], threshold=3)


def test_oracle_identities_randomized():
    # weight distribution total, minimum distance, and neighbor distances
    # agree with each other across random small codes
    rng = np.random.default_rng(31)
    for _ in range(20):
        p = int(rng.choice([2, 3]))
        k = int(rng.integers(1, 4))
        n = int(rng.integers(k + 1, 8))
        C = random_code(rng, p, k, n)
        dist = weight_distribution(C)
        assert dist.total() == (p**k - 1) // (p - 1)
        assert min(dist.counts) == enumerate_min_distance(C)
        assert projective_min_weight_count(C) == dist.counts[min(dist.counts)]
        w = rng.integers(0, p, size=n)
        d_w, vectors = nearest_neighbors(C, w)
        assert d_w == coset_weight(C, w)
        assert count_at_distance(C, w, d_w) == vectors.shape[0]
        for v in vectors:
            assert ((w - v) % p != 0).sum() == d_w
