# License: MIT

import numpy as np

from qhrand.core.base import BlockTransform
from qhrand.core.modmath import as_modulus
from qhrand.utils.exceptions import DegenerateOrder, ValidationError


def _fwht_mod(blocks: np.ndarray, p: int) -> np.ndarray:
    """
    Walsh-Hadamard butterflies on every row of blocks: log2(n) stages of (u+v, u-v) mod p.
    Sylvester (natural) ordering, so the result equals H @ x.
    """
    k, n = blocks.shape
    y = np.array(blocks, dtype=np.int64)  # per-call scratch
    h = 1
    while h < n:
        y = y.reshape(k, -1, 2, h)
        u = y[:, :, 0, :]
        v = y[:, :, 1, :]
        y = np.stack((np.mod(u + v, p), np.mod(u - v, p)), axis=2)
        h *= 2
    return y.reshape(k, n)


class HadamardMatrix(BlockTransform):
    """
    Sylvester Hadamard matrix of order n = 2^m over Z_p, with -1 written as p - 1.

    H_0 = [1], H_m = [[H, H], [H, -H]]. The real 1/sqrt(2) factor is not used: the
    matrix satisfies H H^T = n I (mod p) and is inverted exactly by n^-1 H.
    """

    def __init__(self, m, modulus):
        if m < 0:
            raise ValidationError('Hadamard depth must be non-negative, got %d!' % m)
        modulus = as_modulus(modulus)
        if (2 ** m) % modulus.p == 0:
            raise DegenerateOrder('Hadamard order 2^%d is zero mod %d!' % (m, modulus.p))
        super().__init__(2 ** m, modulus)
        self.m = int(m)
        self.logger.debug('Hadamard matrix of order %d mod %d, inverse scale %d.',
                          self.n, self.p, self.inv_scale.value)

    def _build_entries(self):
        h = np.ones((1, 1), dtype=np.int64)
        for _ in range(self.m):
            h = np.block([[h, h], [h, np.mod(-h, self.p)]])
        return h

    def _build_inverse_entries(self):
        # H is symmetric, so H^T / n = n^-1 H
        return np.mod(self.entries * self.inv_scale.value, self.p)

    def _forward_fast(self, blocks):
        return _fwht_mod(blocks, self.p)

    def _inverse_fast(self, blocks):
        return np.mod(_fwht_mod(blocks, self.p) * self.inv_scale.value, self.p)


def sylvester_build(m, p) -> HadamardMatrix:
    return HadamardMatrix(m, p)


def hadamard_forward_naive(H: HadamardMatrix, block) -> np.ndarray:
    return H.forward(block, kernel='naive')


def hadamard_forward_fast(H: HadamardMatrix, block) -> np.ndarray:
    return H.forward(block, kernel='fast')


def hadamard_inverse(H: HadamardMatrix, block, kernel='auto') -> np.ndarray:
    return H.inverse(block, kernel=kernel)
