# License: MIT

import numpy as np

from qhrand.core.modmath import as_modulus
from qhrand.core.quasigroup import QuasigroupKey, QuasigroupTable, resolve_table
from qhrand.utils import constants
from qhrand.utils.config_utils import CONFIG_KEYS, parse_int, parse_vector
from qhrand.utils.exceptions import ConfigError
from qhrand.utils.util_funcs import lcm, parse_bool


class PipelineConfig(object):
    """
    Parameters of the four-phase randomizer.

    Parameters
    ----------
    p : prime modulus, odd. Every phase works on residues mod p.
    qg : quasigroup key for phase 1; its table order must equal p.
    h1_depth : phase-2 Hadamard order is n1 = 2^h1_depth.
    ntt_order : phase-3 NTT order n2, which must divide p - 1.
    h2_depth : phase-4 Hadamard order is n3 = 2^h2_depth.
    iv1, iv2, iv3 : chaining IVs of lengths n1, n2, n3 (zero vectors by default).
    pad : pad misaligned inputs with zeros instead of rejecting them.
    """

    def __init__(self, p=constants.DEFAULT_PRIME, qg: QuasigroupKey = None,
                 h1_depth=constants.DEFAULT_H1_DEPTH, ntt_order=constants.DEFAULT_NTT_ORDER,
                 h2_depth=constants.DEFAULT_H2_DEPTH, iv1=None, iv2=None, iv3=None, pad=False):
        self.modulus = as_modulus(p)
        self.p = self.modulus.p
        if self.p == 2:
            raise ConfigError('The pipeline needs an odd prime modulus!')
        if qg is None:
            qg = QuasigroupKey(resolve_table(constants.DEFAULT_QG_TABLE), constants.DEFAULT_QG_SEED)
        if qg.table.order != self.p:
            raise ConfigError('Quasigroup order %d must equal the modulus %d!' % (qg.table.order, self.p))
        self.qg = qg

        if h1_depth < 0 or h2_depth < 0:
            raise ConfigError('Hadamard depths must be non-negative!')
        if max(h1_depth, h2_depth) > constants.MAX_HADAMARD_DEPTH:
            raise ConfigError('Hadamard depths must not exceed %d, got h1_depth=%d, h2_depth=%d!'
                              % (constants.MAX_HADAMARD_DEPTH, h1_depth, h2_depth))
        self.h1_depth = int(h1_depth)
        self.h2_depth = int(h2_depth)
        self.ntt_order = int(ntt_order)
        if self.ntt_order > constants.MAX_NTT_ORDER:
            raise ConfigError('NTT order must not exceed %d, got %d!' % (constants.MAX_NTT_ORDER, self.ntt_order))
        if self.ntt_order < 1 or (self.p - 1) % self.ntt_order != 0:
            raise ConfigError('NTT order %d must divide p - 1 = %d!' % (self.ntt_order, self.p - 1))
        if len({self.n1, self.n2, self.n3}) != 3:
            raise ConfigError('Block orders must differ pairwise, got n1=%d, n2=%d, n3=%d!'
                              % (self.n1, self.n2, self.n3))

        self.iv1 = self._check_iv('iv1', iv1, self.n1)
        self.iv2 = self._check_iv('iv2', iv2, self.n2)
        self.iv3 = self._check_iv('iv3', iv3, self.n3)
        self.pad = bool(pad)

    def _check_iv(self, name, iv, n):
        if iv is None:
            iv = np.zeros(n, dtype=np.int64)
        iv = self.modulus.canonical(iv).reshape(-1)
        if iv.shape[0] != n:
            raise ConfigError('%s has length %d but its phase order is %d!' % (name, iv.shape[0], n))
        iv.setflags(write=False)
        return iv

    @property
    def n1(self):
        return 2 ** self.h1_depth

    @property
    def n2(self):
        return self.ntt_order

    @property
    def n3(self):
        return 2 ** self.h2_depth

    @property
    def orders(self):
        return self.n1, self.n2, self.n3

    @property
    def lcm(self):
        return lcm(*self.orders)

    @classmethod
    def from_dict(cls, config_dict=None, **kwargs):
        """Build a config from parsed key=value strings (or already typed values)."""
        params = dict(config_dict or {})
        params.update(kwargs)
        unknown = set(params) - set(CONFIG_KEYS)
        if unknown:
            raise ConfigError('Unknown config keys: %s' % ', '.join(sorted(unknown)))

        p = parse_int('p', params.get('p', constants.DEFAULT_PRIME))
        table = params.get('qg_table', constants.DEFAULT_QG_TABLE)
        if not isinstance(table, QuasigroupTable):
            table = resolve_table(str(table), order=p)
        seed = parse_int('qg_seed', params.get('qg_seed', constants.DEFAULT_QG_SEED))
        try:
            pad = parse_bool(params.get('pad', False))
        except ValueError as e:
            raise ConfigError(str(e))
        return cls(p=p,
                   qg=QuasigroupKey(table, seed),
                   h1_depth=parse_int('h1_depth', params.get('h1_depth', constants.DEFAULT_H1_DEPTH)),
                   ntt_order=parse_int('ntt_order', params.get('ntt_order', constants.DEFAULT_NTT_ORDER)),
                   h2_depth=parse_int('h2_depth', params.get('h2_depth', constants.DEFAULT_H2_DEPTH)),
                   iv1=parse_vector('iv1', params.get('iv1')),
                   iv2=parse_vector('iv2', params.get('iv2')),
                   iv3=parse_vector('iv3', params.get('iv3')),
                   pad=pad)

    def __repr__(self):
        return 'PipelineConfig(p=%d, seed=%d, n1=%d, n2=%d, n3=%d)' % (
            self.p, self.qg.seed, self.n1, self.n2, self.n3)
