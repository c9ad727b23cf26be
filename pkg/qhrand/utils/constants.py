# License: MIT

# products of two residues must fit in a signed 64-bit word
MAX_MODULUS = 2 ** 31
MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

DEFAULT_PRIME = 7
DEFAULT_QG_TABLE = 'paper7'
DEFAULT_QG_SEED = 3
DEFAULT_H1_DEPTH = 2
DEFAULT_NTT_ORDER = 6
DEFAULT_H2_DEPTH = 1

DEFAULT_BLOCK_SIZE = 18
SIGNIFICANCE_LEVEL = 0.01
RANDOM = 'random'
NON_RANDOM = 'non-random'

LCG_MULTIPLIER = 16807
LCG_MODULUS = 2 ** 31 - 1

# input bounds: symbols are stored as int64, block orders cap the matrix sizes
MAX_SYMBOL = 2 ** 63 - 1
MAX_HADAMARD_DEPTH = 24
MAX_NTT_ORDER = 2 ** 24

IGAMC_EPS = 1e-10
IGAMC_MAX_ITER = 500
IGAMC_TINY = 1e-300

CIPHER_MAGIC = 'qhn1'
SYMBOLS_PER_LINE = 32

SUCCESS = 0
VALIDATION_ERROR = 1
IO_ERROR = 2
