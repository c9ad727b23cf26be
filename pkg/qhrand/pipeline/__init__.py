# License: MIT

from qhrand.pipeline.config import PipelineConfig
from qhrand.pipeline.chaining import chained_block_transform, chained_block_inverse
from qhrand.pipeline.pipeline import (Pipeline, PHASES, check_length, pad_to_alignment,
                                      pipeline_encrypt, pipeline_decrypt)
from qhrand.pipeline.avalanche import avalanche
