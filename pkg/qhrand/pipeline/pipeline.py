# License: MIT

from typing import Callable, Optional

import numpy as np

from qhrand.core.quasigroup import qg_encrypt, qg_decrypt
from qhrand.core.modmath import as_symbols
from qhrand.pipeline.chaining import chained_block_transform, chained_block_inverse
from qhrand.pipeline.config import PipelineConfig
from qhrand.transform.hadamard import HadamardMatrix
from qhrand.transform.ntt import NttMatrix
from qhrand.utils.exceptions import LengthNotAligned
from qhrand.utils.logging_utils import get_logger

PHASES = ('quasigroup', 'hadamard1', 'ntt', 'hadamard2')

TraceHook = Callable[[str, np.ndarray], None]


def check_length(cfg: PipelineConfig, length: int):
    if length % cfg.lcm != 0:
        raise LengthNotAligned(length, cfg.lcm)


def pad_to_alignment(symbols, lcm):
    """Zero-pad to the next multiple of lcm. Returns (padded, original_length)."""
    x = np.asarray(symbols, dtype=np.int64).reshape(-1)
    length = x.shape[0]
    extra = (-length) % lcm
    if extra:
        x = np.concatenate((x, np.zeros(extra, dtype=np.int64)))
    return x, length


class Pipeline(object):
    """
    quasigroup chain -> chained Hadamard(n1) -> chained NTT(n2) -> chained Hadamard(n3).

    The transforms are built once; encrypt/decrypt keep no state between calls.
    """

    def __init__(self, config: PipelineConfig, kernel='auto'):
        self.config = config
        self.kernel = kernel
        self.logger = get_logger(self.__class__.__name__)
        self.h1 = HadamardMatrix(config.h1_depth, config.modulus)
        self.ntt = NttMatrix(config.ntt_order, config.modulus)
        self.h2 = HadamardMatrix(config.h2_depth, config.modulus)
        self.logger.debug('Built %s.', config)

    def _prepare(self, symbols):
        x = as_symbols(symbols, self.config.p)
        if self.config.pad:
            x, _ = pad_to_alignment(x, self.config.lcm)
        check_length(self.config, x.shape[0])
        return x

    def encrypt(self, symbols, trace: Optional[TraceHook] = None) -> np.ndarray:
        cfg = self.config
        x = self._prepare(symbols)
        stages = (
            (PHASES[0], lambda s: qg_encrypt(cfg.qg, s)),
            (PHASES[1], lambda s: chained_block_transform(self.h1, cfg.iv1, s, self.kernel)),
            (PHASES[2], lambda s: chained_block_transform(self.ntt, cfg.iv2, s, self.kernel)),
            (PHASES[3], lambda s: chained_block_transform(self.h2, cfg.iv3, s, self.kernel)),
        )
        for name, stage in stages:
            x = stage(x)
            if trace is not None:
                trace(name, x)
        self.logger.debug('Encrypted %d symbols.', x.shape[0])
        return x

    def decrypt(self, cipher, length=None, trace: Optional[TraceHook] = None) -> np.ndarray:
        """Inverse phases in reverse order; length truncates zero padding added by encrypt."""
        cfg = self.config
        x = as_symbols(cipher, cfg.p)
        check_length(cfg, x.shape[0])
        stages = (
            (PHASES[3], lambda s: chained_block_inverse(self.h2, cfg.iv3, s, self.kernel)),
            (PHASES[2], lambda s: chained_block_inverse(self.ntt, cfg.iv2, s, self.kernel)),
            (PHASES[1], lambda s: chained_block_inverse(self.h1, cfg.iv1, s, self.kernel)),
            (PHASES[0], lambda s: qg_decrypt(cfg.qg, s)),
        )
        for name, stage in stages:
            x = stage(x)
            if trace is not None:
                trace(name, x)
        if length is not None:
            x = x[:length]
        return x


def pipeline_encrypt(cfg: PipelineConfig, symbols, trace: Optional[TraceHook] = None) -> np.ndarray:
    return Pipeline(cfg).encrypt(symbols, trace=trace)


def pipeline_decrypt(cfg: PipelineConfig, cipher, length=None, trace: Optional[TraceHook] = None) -> np.ndarray:
    return Pipeline(cfg).decrypt(cipher, length=length, trace=trace)
