# License: MIT

from qhrand.randomness.bits import to_bits, to_bipolar, pack_bits, bits_per_symbol
from qhrand.randomness.autocorrelation import autocorrelation, randomness_measure
from qhrand.randomness.special import igamc
from qhrand.randomness.block_frequency import block_frequency_test, BlockFrequencyResult
from qhrand.randomness.report import AnalysisReport, analyze, analyze_bits, compare
