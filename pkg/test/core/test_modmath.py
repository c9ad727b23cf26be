import numpy as np
import pytest

from qhrand.core.modmath import (PrimeModulus, Residue, as_modulus, as_symbols, has_order, is_prime, primitive_root,
                                 matvec_mod, mod_inverse, mod_pow, prime_factors)
from qhrand.utils.exceptions import DomainError, NotPrime, OutOfAlphabet, ZeroInverse


def _sieve(limit):
    flags = np.ones(limit, dtype=bool)
    flags[:2] = False
    for i in range(2, int(limit ** 0.5) + 1):
        if flags[i]:
            flags[i * i::i] = False
    return flags


def test_is_prime_examples():
    assert is_prime(7)
    assert not is_prime(1)
    assert not is_prime(0)
    assert is_prime(2029)
    assert is_prime(2 ** 31 - 1)
    assert not is_prime(2 ** 31 - 2)
    # strong pseudoprime to bases 2, 3, 5, 7
    assert not is_prime(3215031751)


def test_is_prime_matches_sieve():
    flags = _sieve(10000)
    assert [n for n in range(10000) if is_prime(n)] == np.flatnonzero(flags).tolist()


def test_is_prime_rejects_negative():
    with pytest.raises(DomainError):
        is_prime(-3)


def test_prime_factors():
    assert prime_factors(6) == [2, 3]
    assert prime_factors(2028) == [2, 3, 13]
    assert prime_factors(256) == [2]
    assert prime_factors(1) == []


def test_prime_modulus_validation():
    assert PrimeModulus(7).p == 7
    assert as_modulus(PrimeModulus(31)) == 31
    for bad in (1, 4, 9, 2 ** 31 + 11, 7.0, '7'):
        with pytest.raises(NotPrime):
            PrimeModulus(bad)


def test_residue_canonical_form():
    for z in range(-50, 50):
        assert Residue(z, 7).value == ((z % 7) + 7) % 7
    assert Residue(-1, 7) == 6
    assert Residue(-1, 31).value == 30


def test_residue_arithmetic():
    a = Residue(5, 7)
    b = Residue(4, 7)
    assert a + b == 2
    assert a - b == 1
    assert b - a == 6
    assert a * b == 6
    assert -a == 2
    assert 3 - a == 5
    assert a ** 3 == 125 % 7
    with pytest.raises(DomainError):
        a + Residue(1, 11)


def test_mod_inverse_examples():
    assert mod_inverse(Residue(1, 7)) == 1
    assert mod_inverse(Residue(6, 7)) == 6
    assert mod_inverse(Residue(8, 7)) == 1
    with pytest.raises(ZeroInverse):
        mod_inverse(Residue(0, 7))
    with pytest.raises(ZeroInverse):
        Residue(14, 7).inverse()


def test_mod_inverse_exhaustive():
    for p in (2, 3, 7, 31, 257, 2029):
        for a in range(1, p):
            assert (mod_inverse(Residue(a, p)).value * a) % p == 1


def test_mod_pow():
    assert mod_pow(Residue(3, 7), 6) == 1
    assert mod_pow(Residue(3, 7), 2) == 2
    assert mod_pow(Residue(5, 13), 0) == 1
    assert mod_pow(Residue(0, 13), 0) == 1
    with pytest.raises(DomainError):
        mod_pow(Residue(3, 7), -1)


def test_fermat():
    for p in (3, 5, 7, 31, 257):
        for a in range(1, p):
            assert mod_pow(Residue(a, p), p - 1) == 1


def test_has_order():
    assert has_order(3, 6, 7)
    assert not has_order(2, 6, 7)
    assert has_order(2, 3, 7)
    assert has_order(6, 2, 7)
    assert has_order(2, 2028, 2029)


def test_matvec_mod_matches_python():
    rng = np.random.RandomState(0)
    p = 257
    matrix = rng.randint(0, p, size=(5, 5))
    blocks = rng.randint(0, p, size=(3, 5))
    expected = [[sum(int(matrix[i][j]) * int(row[j]) for j in range(5)) % p for i in range(5)] for row in blocks]
    assert matvec_mod(matrix, blocks, p).tolist() == expected
    assert matvec_mod(matrix, blocks[0], p).tolist() == expected[0]


def test_matvec_mod_large_modulus():
    # n (p-1)^2 overflows int64 here, so the product goes through Python integers
    p = 2 ** 31 - 1
    matrix = np.full((4, 4), p - 1, dtype=np.int64)
    block = np.full(4, p - 1, dtype=np.int64)
    assert matvec_mod(matrix, block, p).tolist() == [4 % p] * 4


def test_as_symbols():
    assert as_symbols([[1, 2], [3, 4]], 7).tolist() == [1, 2, 3, 4]
    assert as_symbols([], 7).shape == (0,)
    with pytest.raises(OutOfAlphabet):
        as_symbols([1, 7], 7)
    with pytest.raises(OutOfAlphabet):
        as_symbols([-1], 7)


def test_primitive_root():
    assert primitive_root(2) == 1
    assert primitive_root(7) == 3
    assert primitive_root(13) == 2
    assert primitive_root(257) == 3
    assert primitive_root(65537) == 3
    assert primitive_root(2 ** 31 - 1) == 7
    for p in np.flatnonzero(_sieve(200))[1:].tolist():
        g = primitive_root(p)
        assert len({pow(g, k, p) for k in range(1, p)}) == p - 1
        assert all(len({pow(h, k, p) for k in range(1, p)}) < p - 1 for h in range(2, g))
