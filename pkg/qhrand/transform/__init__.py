# License: MIT

from qhrand.transform.hadamard import (HadamardMatrix, sylvester_build, hadamard_forward_naive,
                                       hadamard_forward_fast, hadamard_inverse)
from qhrand.transform.ntt import (NttMatrix, find_primitive_nth_root, ntt_build, ntt_forward_naive,
                                  ntt_forward_fast, ntt_inverse)
