# License: MIT

from qhrand.sources.generators import (SourceSpec, gen_lcg, gen_dsequence_bits, gen_dsequence, gen_pattern,
                                       dsequence_period, KINDS, PATTERNS)
