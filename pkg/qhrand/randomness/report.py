# License: MIT

from qhrand.randomness.autocorrelation import autocorrelation, randomness_measure
from qhrand.randomness.bits import to_bits, to_bipolar
from qhrand.randomness.block_frequency import block_frequency_test
from qhrand.utils.constants import DEFAULT_BLOCK_SIZE


class AnalysisReport(object):
    def __init__(self, autocorrelation, r, chi2, n_blocks, block_size, p_value, verdict):
        self.autocorrelation = autocorrelation
        self.r = r
        self.chi2 = chi2
        self.n_blocks = n_blocks
        self.block_size = block_size
        self.p_value = p_value
        self.verdict = verdict

    @property
    def period(self):
        return len(self.autocorrelation)

    def to_dict(self):
        return {
            'r': '%.6f' % self.r,
            'chi2': '%.6f' % self.chi2,
            'n_blocks': '%d' % self.n_blocks,
            'block_size': '%d' % self.block_size,
            'period': '%d' % self.period,
            'p_value': '%.6f' % self.p_value,
            'verdict': self.verdict,
        }

    def to_text(self):
        return ''.join('%s=%s\n' % item for item in self.to_dict().items())

    def autocorrelation_text(self):
        """Two columns, k and C(k), for external plotting."""
        return ''.join('%d %.6f\n' % (k, c) for k, c in enumerate(self.autocorrelation))

    def __repr__(self):
        return 'AnalysisReport(r=%.6f, p_value=%.6f, verdict=%s)' % (self.r, self.p_value, self.verdict)


def analyze_bits(bits, block_size=DEFAULT_BLOCK_SIZE) -> AnalysisReport:
    c = autocorrelation(to_bipolar(bits))
    r = randomness_measure(c)
    bf = block_frequency_test(bits, block_size)
    return AnalysisReport(c, r, bf.chi2, bf.n_blocks, bf.block_size, bf.p_value, bf.verdict)


def analyze(symbols, p, block_size=DEFAULT_BLOCK_SIZE) -> AnalysisReport:
    """to_bits -> to_bipolar -> C(k) -> R, plus the block-frequency test on the same bits."""
    return analyze_bits(to_bits(symbols, p), block_size)


def compare(input_symbols, output_symbols, p, block_size=DEFAULT_BLOCK_SIZE):
    """Reports for a stream before and after randomization."""
    return analyze(input_symbols, p, block_size), analyze(output_symbols, p, block_size)


def format_comparison(before: AnalysisReport, after: AnalysisReport) -> str:
    from terminaltables import AsciiTable
    b, a = before.to_dict(), after.to_dict()
    table_data = [['Measure', 'Input', 'Output']] + [[key, b[key], a[key]] for key in b]
    return AsciiTable(table_data).table
