# License: MIT

from qhrand.core.modmath import PrimeModulus, Residue, is_prime, mod_inverse, mod_pow
from qhrand.core.quasigroup import (QuasigroupTable, QuasigroupKey, qg_validate, qg_mul, qg_left_divide,
                                    qg_right_divide, qg_encrypt, qg_decrypt, get_builtin_table, load_table)
from qhrand.core.base import BlockTransform, build_transform
