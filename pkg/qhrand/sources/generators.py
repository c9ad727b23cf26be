# License: MIT

import numbers

import numpy as np

from qhrand.core.modmath import as_modulus, is_prime
from qhrand.randomness.bits import bits_per_symbol, pack_bits
from qhrand.utils.constants import LCG_MULTIPLIER, LCG_MODULUS
from qhrand.utils.exceptions import BadSeed, BadPrime, ValidationError
from qhrand.utils.io_utils import read_symbols
from qhrand.utils.logging_utils import get_logger

logger = get_logger(__name__)

PATTERNS = ('zeros', 'ones', 'zeros-last-one', 'triangle')
KINDS = ('lcg', 'dseq') + PATTERNS + ('file',)


def _check_length(length):
    if not isinstance(length, (numbers.Integral, np.integer)) or length < 0:
        raise ValidationError('Length must be a non-negative integer, got %r!' % (length,))
    return int(length)


def gen_lcg(seed, length, p) -> np.ndarray:
    """
    Park-Miller minimal standard generator: s_{k+1} = 16807 s_k mod (2^31 - 1);
    symbol k is s_{k+1} mod p.
    """
    length = _check_length(length)
    p = as_modulus(p).p
    if not isinstance(seed, (numbers.Integral, np.integer)) or not 1 <= seed <= LCG_MODULUS - 1:
        raise BadSeed('LCG seed must lie in [1, 2^31 - 2], got %r!' % (seed,))
    out = np.empty(length, dtype=np.int64)
    state = int(seed)
    for k in range(length):
        state = state * LCG_MULTIPLIER % LCG_MODULUS
        out[k] = state % p
    return out


def _check_dseq_prime(q):
    if not isinstance(q, (numbers.Integral, np.integer)) or q < 3 or not is_prime(int(q)):
        raise BadPrime('d-sequence needs an odd prime, got %r!' % (q,))
    return int(q)


def gen_dsequence_bits(q, length) -> np.ndarray:
    """Binary expansion of 1/q: a_i = (2^i mod q) mod 2 for i = 1..length."""
    q = _check_dseq_prime(q)
    length = _check_length(length)
    out = np.empty(length, dtype=np.int64)
    r = 1
    for i in range(length):
        r = 2 * r % q
        out[i] = r & 1
    return out


def dsequence_period(q) -> int:
    """Period of the binary d-sequence of 1/q, i.e. the multiplicative order of 2 mod q."""
    q = _check_dseq_prime(q)
    k, r = 1, 2 % q
    while r != 1:
        r = 2 * r % q
        k += 1
    return k


def gen_dsequence(q, length, p):
    """length symbols packed from d-sequence bits. Returns (symbols, reduced_count)."""
    length = _check_length(length)
    bits = gen_dsequence_bits(q, length * bits_per_symbol(p))
    return pack_bits(bits, p)


def gen_pattern(kind, length, p=None) -> np.ndarray:
    length = _check_length(length)
    if kind == 'zeros':
        return np.zeros(length, dtype=np.int64)
    elif kind == 'ones':
        return np.ones(length, dtype=np.int64)
    elif kind == 'zeros-last-one':
        out = np.zeros(length, dtype=np.int64)
        if length:
            out[-1] = 1
        return out
    elif kind == 'triangle':
        # 0, 1, .., p-1, p-2, .., 1, 0, 1, ..
        if p is None:
            raise ValidationError('The triangle pattern needs a modulus!')
        p = as_modulus(p).p
        period = 2 * (p - 1)
        k = np.arange(length, dtype=np.int64) % period
        return np.where(k < p, k, period - k)
    raise ValidationError('Invalid pattern %s! Valid choices: %s' % (kind, ', '.join(PATTERNS)))


class SourceSpec(object):
    """
    Description of an input stream.

    Parameters
    ----------
    kind : one of lcg, dseq, zeros, ones, zeros-last-one, triangle, file.
    length : number of symbols (ignored for file).
    seed : LCG seed in [1, 2^31 - 2].
    prime : odd prime of the d-sequence.
    path : symbol file for kind=file.
    """

    def __init__(self, kind, length=0, seed=1, prime=2029, path=None):
        if kind not in KINDS:
            raise ValidationError('Invalid source kind %s! Valid choices: %s' % (kind, ', '.join(KINDS)))
        self.kind = kind
        self.length = _check_length(length)
        self.seed = seed
        self.prime = prime
        self.path = path
        if kind == 'dseq':
            _check_dseq_prime(prime)
        if kind == 'file' and path is None:
            raise ValidationError('Source kind file needs a path!')

    def generate(self, p) -> np.ndarray:
        if self.kind == 'lcg':
            return gen_lcg(self.seed, self.length, p)
        elif self.kind == 'dseq':
            symbols, reduced = gen_dsequence(self.prime, self.length, p)
            logger.info('d-sequence of 1/%d: %d symbols, %d reduced mod %d.',
                        self.prime, self.length, reduced, as_modulus(p).p)
            return symbols
        elif self.kind == 'file':
            return read_symbols(self.path, p=p)
        return gen_pattern(self.kind, self.length, p)

    def __repr__(self):
        return 'SourceSpec(kind=%s, length=%d)' % (self.kind, self.length)
