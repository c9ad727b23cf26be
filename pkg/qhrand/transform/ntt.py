# License: MIT

from math import gcd

import numpy as np

from qhrand.core.base import BlockTransform
from qhrand.core.modmath import as_modulus, primitive_root, Residue
from qhrand.utils.exceptions import NoSuchRoot, UnsupportedFastOrder, ValidationError
from qhrand.utils.util_funcs import is_power_of_two


def find_primitive_nth_root(n, p) -> Residue:
    """
    Smallest g in [2, p) of multiplicative order exactly n; n = 1 gives 1.

    With r a generator, the elements of order n are exactly w^k for w = r^((p-1)/n)
    and gcd(k, n) = 1, so the search walks n powers instead of the whole field.
    """
    modulus = as_modulus(p)
    p = modulus.p
    if n < 1:
        raise ValidationError('NTT order must be positive, got %d!' % n)
    if (p - 1) % n != 0:
        raise NoSuchRoot(n, p)
    if n == 1:
        return Residue(1, modulus)
    w = pow(primitive_root(p), (p - 1) // n, p)
    best = w
    power = w
    for k in range(2, n):
        power = power * w % p
        if power < best and gcd(k, n) == 1:
            best = power
    return Residue(best, modulus)


def _bit_reverse_permutation(n):
    bits = n.bit_length() - 1
    idx = np.arange(n)
    rev = np.zeros(n, dtype=np.int64)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return rev


def _power_table(w, n, p):
    powers = np.empty(n, dtype=np.int64)
    acc = 1
    for k in range(n):
        powers[k] = acc
        acc = acc * w % p
    return powers


class NttMatrix(BlockTransform):
    """
    Number-theoretic transform matrix W[i][j] = w^(ij) mod p for a primitive n-th root w.

    Exponents are reduced mod n, so w^9 in an order-4 matrix is w^1.
    """

    def __init__(self, n, modulus):
        modulus = as_modulus(modulus)
        super().__init__(n, modulus)
        self.w = find_primitive_nth_root(self.n, modulus)
        self.w_inv = self.w.inverse()
        self._powers = _power_table(self.w.value, self.n, self.p)
        self._inv_powers = _power_table(self.w_inv.value, self.n, self.p)
        self._bitrev = _bit_reverse_permutation(self.n) if is_power_of_two(self.n) else None
        self.logger.debug('NTT matrix of order %d mod %d with root w=%d.', self.n, self.p, self.w.value)

    @property
    def supports_fast(self):
        return self._bitrev is not None

    def _exponents(self):
        i = np.arange(self.n, dtype=np.int64)
        return np.outer(i, i) % self.n

    def _build_entries(self):
        return self._powers[self._exponents()]

    def _build_inverse_entries(self):
        return np.mod(self._inv_powers[self._exponents()] * self.inv_scale.value, self.p)

    def _radix2(self, blocks, powers):
        """Iterative decimation-in-time butterflies; the stage of length L uses twiddles w^(kn/L)."""
        if self._bitrev is None:
            raise UnsupportedFastOrder('Fast NTT needs a power-of-two order, got %d; use the naive kernel!'
                                       % self.n)
        k, n = blocks.shape
        p = self.p
        y = blocks[:, self._bitrev]  # fancy indexing copies: per-call scratch
        length = 2
        while length <= n:
            half = length // 2
            twiddles = powers[np.arange(half) * (n // length)]
            y = y.reshape(k, -1, length)
            u = y[:, :, :half]
            v = np.mod(y[:, :, half:] * twiddles, p)
            y = np.concatenate((np.mod(u + v, p), np.mod(u - v, p)), axis=2)
            length *= 2
        return y.reshape(k, n)

    def _forward_fast(self, blocks):
        return self._radix2(blocks, self._powers)

    def _inverse_fast(self, blocks):
        return np.mod(self._radix2(blocks, self._inv_powers) * self.inv_scale.value, self.p)


def ntt_build(n, p) -> NttMatrix:
    return NttMatrix(n, p)


def ntt_forward_naive(M: NttMatrix, block) -> np.ndarray:
    return M.forward(block, kernel='naive')


def ntt_forward_fast(M: NttMatrix, block) -> np.ndarray:
    return M.forward(block, kernel='fast')


def ntt_inverse(M: NttMatrix, block, kernel='auto') -> np.ndarray:
    return M.inverse(block, kernel=kernel)
