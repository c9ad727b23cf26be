# License: MIT

import abc

import numpy as np

from qhrand.core.modmath import as_modulus, matvec_mod, Residue
from qhrand.utils.exceptions import BlockSizeMismatch, OutOfAlphabet, ValidationError
from qhrand.utils.logging_utils import get_logger
from qhrand.utils.util_funcs import is_power_of_two

KERNELS = ('auto', 'naive', 'fast')


class BlockTransform(object, metaclass=abc.ABCMeta):
    """
    Invertible n x n transform over Z_p applied to blocks of residues.

    Blocks are 1-D arrays of length n, or 2-D arrays whose rows are independent
    blocks. The dense matrix is built lazily since the fast kernels never need it.
    """

    def __init__(self, order, modulus):
        self.n = int(order)
        self.modulus = as_modulus(modulus)
        self.p = self.modulus.p
        self.logger = get_logger(self.__class__.__name__)
        self._entries = None
        self._inverse_entries = None

    @property
    def inv_scale(self) -> Residue:
        return Residue(self.n, self.modulus).inverse()

    @property
    def entries(self) -> np.ndarray:
        if self._entries is None:
            self._entries = self._build_entries()
            self._entries.setflags(write=False)
        return self._entries

    @property
    def inverse_entries(self) -> np.ndarray:
        if self._inverse_entries is None:
            self._inverse_entries = self._build_inverse_entries()
            self._inverse_entries.setflags(write=False)
        return self._inverse_entries

    @property
    def supports_fast(self) -> bool:
        return True

    @abc.abstractmethod
    def _build_entries(self) -> np.ndarray:
        raise NotImplementedError()

    @abc.abstractmethod
    def _build_inverse_entries(self) -> np.ndarray:
        raise NotImplementedError()

    @abc.abstractmethod
    def _forward_fast(self, blocks: np.ndarray) -> np.ndarray:
        raise NotImplementedError()

    @abc.abstractmethod
    def _inverse_fast(self, blocks: np.ndarray) -> np.ndarray:
        raise NotImplementedError()

    def check_block(self, block) -> np.ndarray:
        arr = np.asarray(block, dtype=np.int64)
        if arr.ndim == 0 or arr.shape[-1] != self.n or arr.ndim > 2:
            got = arr.shape[-1] if arr.ndim else 0
            raise BlockSizeMismatch(got, self.n)
        if arr.size and (arr.min() < 0 or arr.max() >= self.p):
            bad = arr[(arr < 0) | (arr >= self.p)][0]
            raise OutOfAlphabet(int(bad), self.p)
        return arr

    def _select(self, kernel):
        if kernel not in KERNELS:
            raise ValidationError('Invalid kernel %s!' % kernel)
        if kernel == 'auto':
            return 'fast' if self.supports_fast else 'naive'
        return kernel

    def forward_naive(self, block) -> np.ndarray:
        return self.forward(block, kernel='naive')

    def forward_fast(self, block) -> np.ndarray:
        return self.forward(block, kernel='fast')

    def forward(self, block, kernel='auto', check=True) -> np.ndarray:
        blocks = self.check_block(block) if check else block
        if self._select(kernel) == 'fast':
            return self._forward_fast(blocks.reshape(-1, self.n)).reshape(blocks.shape)
        return matvec_mod(self.entries, blocks, self.p)

    def inverse(self, block, kernel='auto', check=True) -> np.ndarray:
        blocks = self.check_block(block) if check else block
        if self._select(kernel) == 'fast':
            return self._inverse_fast(blocks.reshape(-1, self.n)).reshape(blocks.shape)
        return matvec_mod(self.inverse_entries, blocks, self.p)

    def to_text(self):
        return format_grid(self.entries)

    def __repr__(self):
        return '%s(n=%d, p=%d)' % (self.__class__.__name__, self.n, self.p)


def format_grid(matrix) -> str:
    """Whitespace-separated decimal grid, one matrix row per line."""
    return '\n'.join(' '.join(str(int(v)) for v in row) for row in matrix) + '\n'


def build_transform(kind='hadamard', order=None, modulus=None, depth=None):
    kind = kind.lower()
    if kind == 'hadamard':
        from qhrand.transform.hadamard import HadamardMatrix
        if depth is None:
            if order is None or not is_power_of_two(order):
                raise ValidationError('Hadamard order must be a power of two, got %s!' % order)
            depth = order.bit_length() - 1
        return HadamardMatrix(depth, modulus)
    elif kind == 'ntt':
        from qhrand.transform.ntt import NttMatrix
        return NttMatrix(order, modulus)
    raise ValidationError('Invalid string %s for block transform!' % kind)
