# License: MIT

import numpy as np

from qhrand.core.modmath import as_modulus, as_symbols
from qhrand.utils.logging_utils import get_logger

logger = get_logger(__name__)


def bits_per_symbol(p) -> int:
    """ceil(log2(p)): 3 bits for p = 7."""
    p = as_modulus(p).p
    return (p - 1).bit_length()


def to_bits(symbols, p) -> np.ndarray:
    """Each symbol as ceil(log2 p) bits, most significant first."""
    width = bits_per_symbol(p)
    x = as_symbols(symbols, as_modulus(p).p)
    shifts = np.arange(width - 1, -1, -1, dtype=np.int64)
    return ((x[:, np.newaxis] >> shifts) & 1).reshape(-1)


def to_bipolar(bits) -> np.ndarray:
    """0 -> -1, 1 -> +1."""
    b = np.asarray(bits, dtype=np.int64).reshape(-1)
    return 2 * b - 1


def pack_bits(bits, p):
    """
    Inverse of to_bits: pack ceil(log2 p) consecutive bits per symbol, dropping a
    trailing partial group. Values >= p are reduced mod p.

    Returns (symbols, number_of_reduced_symbols).
    """
    p = as_modulus(p).p
    width = bits_per_symbol(p)
    b = np.asarray(bits, dtype=np.int64).reshape(-1)
    groups = b[:(b.shape[0] // width) * width].reshape(-1, width)
    weights = 1 << np.arange(width - 1, -1, -1, dtype=np.int64)
    values = groups.dot(weights)
    reduced = int(np.count_nonzero(values >= p))
    if reduced:
        logger.warning('%d of %d packed symbols were >= %d and reduced mod p.', reduced, values.shape[0], p)
    return np.mod(values, p), reduced
