# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from .pkginfo import version as __version__, package_name

from .core.modmath import PrimeModulus, Residue
from .core.quasigroup import QuasigroupTable, QuasigroupKey, qg_validate, get_builtin_table
from .core.base import build_transform

from .transform.hadamard import HadamardMatrix
from .transform.ntt import NttMatrix

from .pipeline.config import PipelineConfig
from .pipeline.pipeline import Pipeline, pipeline_encrypt, pipeline_decrypt

from .randomness.report import AnalysisReport, analyze, compare

from .sources.generators import SourceSpec
