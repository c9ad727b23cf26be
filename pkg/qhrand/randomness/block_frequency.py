# License: MIT

import collections

import numpy as np

from qhrand.randomness.special import igamc
from qhrand.utils.constants import SIGNIFICANCE_LEVEL, RANDOM, NON_RANDOM
from qhrand.utils.exceptions import BlockTooLarge, DomainError

BlockFrequencyResult = collections.namedtuple(
    'BlockFrequencyResult', ['chi2', 'n_blocks', 'block_size', 'p_value', 'verdict'])


def block_frequency_test(bits, block_size) -> BlockFrequencyResult:
    """
    Frequency test within M-bit blocks.

    N = floor(n / M) blocks, unused trailing bits discarded; pi_i is the ones
    proportion of block i; chi2 = 4M sum (pi_i - 1/2)^2;
    P-value = igamc(N / 2, chi2 / 2); non-random if P-value < 0.01.
    """
    eps = np.asarray(bits, dtype=np.int64).reshape(-1)
    n = eps.shape[0]
    m = int(block_size)
    if m < 1:
        raise DomainError('Block size must be at least 1, got %d!' % m)
    if m > n:
        raise BlockTooLarge(m, n)
    n_blocks = n // m
    ones = eps[:n_blocks * m].reshape(n_blocks, m).sum(axis=1)
    # 4M (ones/M - 1/2)^2 == (2 ones - M)^2 / M, an integer numerator
    chi2 = float(np.sum((2 * ones - m) ** 2)) / m
    p_value = igamc(n_blocks / 2.0, chi2 / 2.0)
    verdict = NON_RANDOM if p_value < SIGNIFICANCE_LEVEL else RANDOM
    return BlockFrequencyResult(chi2, n_blocks, m, p_value, verdict)
