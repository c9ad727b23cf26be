# License: MIT

import numpy as np

from qhrand.core.base import BlockTransform
from qhrand.core.modmath import as_symbols
from qhrand.utils.exceptions import LengthNotAligned


def _split(transform, iv, symbols):
    x = as_symbols(symbols, transform.p)
    if x.shape[0] % transform.n != 0:
        raise LengthNotAligned(x.shape[0], transform.n)
    iv = transform.check_block(iv)
    return x.reshape(-1, transform.n), iv


def chained_block_transform(transform: BlockTransform, iv, symbols, kernel='auto') -> np.ndarray:
    """
    CBC-style chaining: c_0 = iv, c_i = T((x_i + c_{i-1}) mod p).

    Sequential by construction, each block depends on the previous output.
    """
    blocks, prev = _split(transform, iv, symbols)
    p = transform.p
    out = np.empty_like(blocks)
    for i in range(blocks.shape[0]):
        prev = transform.forward(np.mod(blocks[i] + prev, p), kernel=kernel, check=False)
        out[i] = prev
    return out.reshape(-1)


def chained_block_inverse(transform: BlockTransform, iv, cipher, kernel='auto') -> np.ndarray:
    """x_i = (T^-1(c_i) - c_{i-1}) mod p. All blocks are inverted in one batched call."""
    blocks, iv = _split(transform, iv, cipher)
    if blocks.shape[0] == 0:
        return blocks.reshape(-1)
    previous = np.vstack((iv[np.newaxis, :], blocks[:-1]))
    plain = np.mod(transform.inverse(blocks, kernel=kernel, check=False) - previous, transform.p)
    return plain.reshape(-1)
