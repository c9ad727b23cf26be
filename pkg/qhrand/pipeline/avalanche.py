# License: MIT

import numpy as np

from qhrand.pipeline.config import PipelineConfig
from qhrand.pipeline.pipeline import Pipeline
from qhrand.randomness.bits import to_bits
from qhrand.utils.util_funcs import check_random_state


def avalanche(cfg: PipelineConfig, symbols, position=None, trials=100, random_state=None) -> float:
    """
    Mean fraction of output bits that flip when one input symbol is replaced by a
    different random symbol. position=None draws a fresh position per trial.
    """
    rng = check_random_state(random_state)
    pipeline = Pipeline(cfg)
    x = np.asarray(symbols, dtype=np.int64).reshape(-1)
    base_bits = to_bits(pipeline.encrypt(x), cfg.p)
    fractions = list()
    for _ in range(trials):
        i = rng.randint(x.shape[0]) if position is None else position
        changed = x.copy()
        changed[i] = (changed[i] + rng.randint(1, cfg.p)) % cfg.p
        bits = to_bits(pipeline.encrypt(changed), cfg.p)
        fractions.append(np.count_nonzero(bits != base_bits) / bits.shape[0])
    return float(np.mean(fractions))
