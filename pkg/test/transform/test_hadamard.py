import itertools

import numpy as np
import pytest

from qhrand.core.base import build_transform
from qhrand.core.modmath import matvec_mod
from qhrand.transform.hadamard import (HadamardMatrix, hadamard_forward_fast, hadamard_forward_naive,
                                       hadamard_inverse, sylvester_build)
from qhrand.utils.exceptions import BlockSizeMismatch, DegenerateOrder, OutOfAlphabet, ValidationError

H8_MOD7 = """\
1 1 1 1 1 1 1 1
1 6 1 6 1 6 1 6
1 1 6 6 1 1 6 6
1 6 6 1 1 6 6 1
1 1 1 1 6 6 6 6
1 6 1 6 6 1 6 1
1 1 6 6 6 6 1 1
1 6 6 1 6 1 1 6
"""

H4_MOD7 = """\
1 1 1 1
1 6 1 6
1 1 6 6
1 6 6 1
"""

H8_MOD31 = H8_MOD7.replace('6', '30')

PRIMES = (3, 5, 7, 31, 257)


def test_golden_tables():
    assert sylvester_build(3, 7).to_text() == H8_MOD7
    assert sylvester_build(2, 7).to_text() == H4_MOD7
    assert sylvester_build(3, 31).to_text() == H8_MOD31
    assert sylvester_build(0, 7).entries.tolist() == [[1]]


def test_degenerate_order():
    with pytest.raises(DegenerateOrder):
        sylvester_build(1, 2)
    with pytest.raises(ValidationError):
        sylvester_build(-1, 7)
    assert sylvester_build(0, 2).entries.tolist() == [[1]]


def test_entries_structure():
    for p in PRIMES:
        for m in range(11):
            h = sylvester_build(m, p).entries
            assert set(np.unique(h).tolist()) <= {1, p - 1}
            assert np.all(h[0] == 1) and np.all(h[:, 0] == 1)
            assert np.array_equal(h, h.T)


def test_orthogonality_direct():
    for p in PRIMES:
        for m in range(8):
            H = sylvester_build(m, p)
            gram = matvec_mod(H.entries, H.entries, p)
            assert np.array_equal(gram, np.eye(H.n, dtype=np.int64) * (H.n % p))


def test_orthogonality_large_orders():
    # rows of H pushed through the butterfly give H H^T
    for p in PRIMES:
        for m in (8, 9, 10):
            H = sylvester_build(m, p)
            gram = H.forward_fast(H.entries)
            assert np.array_equal(gram, np.eye(H.n, dtype=np.int64) * (H.n % p))


def test_forward_examples():
    H8 = sylvester_build(3, 7)
    assert hadamard_forward_naive(H8, np.zeros(8, dtype=np.int64)).tolist() == [0] * 8
    e0 = np.eye(8, dtype=np.int64)[0]
    assert hadamard_forward_naive(H8, e0).tolist() == [1] * 8
    assert hadamard_forward_fast(H8, e0).tolist() == [1] * 8

    H4 = sylvester_build(2, 7)
    # +-1 view: 1+2+3+4, 1-2+3-4, 1+2-3-4, 1-2-3+4
    assert hadamard_forward_naive(H4, [1, 2, 3, 4]).tolist() == [3, 5, 3, 0]
    assert hadamard_forward_fast(H4, [1, 2, 3, 4]).tolist() == [3, 5, 3, 0]


def test_single_butterfly():
    H2 = sylvester_build(1, 7)
    for a in range(7):
        for b in range(7):
            expected = [(a + b) % 7, (a + 6 * b) % 7]
            assert hadamard_forward_fast(H2, [a, b]).tolist() == expected
            assert hadamard_forward_naive(H2, [a, b]).tolist() == expected


def test_block_validation():
    H4 = sylvester_build(2, 7)
    with pytest.raises(BlockSizeMismatch):
        hadamard_forward_naive(H4, [1, 2, 3])
    with pytest.raises(BlockSizeMismatch):
        hadamard_forward_fast(H4, 5)
    with pytest.raises(BlockSizeMismatch):
        hadamard_inverse(H4, np.zeros((2, 2, 4), dtype=np.int64))
    with pytest.raises(OutOfAlphabet):
        hadamard_forward_fast(H4, [7, 0, 0, 0])
    with pytest.raises(ValidationError):
        H4.forward([0, 0, 0, 0], kernel='gpu')


def test_fast_matches_naive():
    rng = np.random.RandomState(2)
    for p in (7, 31, 257):
        for m in range(1, 11):
            H = sylvester_build(m, p)
            blocks = rng.randint(0, p, size=(334, H.n))
            assert np.array_equal(H.forward_fast(blocks), H.forward_naive(blocks))
            assert np.array_equal(H.inverse(blocks, kernel='fast'), H.inverse(blocks, kernel='naive'))


def test_inverse_examples():
    H8 = sylvester_build(3, 7)
    assert H8.inv_scale == 1
    assert np.array_equal(H8.inverse_entries, H8.entries)
    H1 = sylvester_build(0, 7)
    for v in range(7):
        assert hadamard_inverse(H1, [v]).tolist() == [v]


def test_inverse_exhaustive_order_4():
    H4 = sylvester_build(2, 7)
    blocks = np.array(list(itertools.product(range(7), repeat=4)), dtype=np.int64)
    assert blocks.shape == (2401, 4)
    for kernel in ('naive', 'fast'):
        y = H4.forward(blocks, kernel=kernel)
        assert np.array_equal(hadamard_inverse(H4, y, kernel=kernel), blocks)


def test_inverse_round_trip():
    rng = np.random.RandomState(4)
    for p in PRIMES:
        for m in range(8):
            H = HadamardMatrix(m, p)
            blocks = rng.randint(0, p, size=(50, H.n))
            assert np.array_equal(H.inverse(H.forward(blocks)), blocks)


def test_build_transform():
    H = build_transform('hadamard', order=8, modulus=7)
    assert isinstance(H, HadamardMatrix)
    assert H.m == 3
    assert build_transform('Hadamard', depth=2, modulus=31).n == 4
    with pytest.raises(ValidationError):
        build_transform('hadamard', order=6, modulus=7)
    with pytest.raises(ValidationError):
        build_transform('dct', order=8, modulus=7)
