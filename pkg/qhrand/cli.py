# License: MIT

import argparse
import sys

import numpy as np

from qhrand import pkginfo
from qhrand.benchmark.kernel_bench import run_benchmark, format_results, DEFAULT_SIZES
from qhrand.pipeline.config import PipelineConfig
from qhrand.pipeline.pipeline import Pipeline
from qhrand.randomness.report import analyze, compare, format_comparison
from qhrand.sources.generators import SourceSpec, KINDS
from qhrand.utils.config_utils import load_config_file, parse_vector
from qhrand.utils.constants import DEFAULT_BLOCK_SIZE, DEFAULT_PRIME, SUCCESS, VALIDATION_ERROR, IO_ERROR
from qhrand.utils.exceptions import QhrandException, InputOutputError, ConfigError
from qhrand.utils.io_utils import (CipherHeader, read_symbols, write_symbols, read_cipher, write_cipher,
                                   write_text)
from qhrand.utils.logging_utils import setup_logger, get_logger

logger = get_logger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors as ConfigError instead of exiting."""

    def error(self, message):
        raise ConfigError('%s: %s' % (self.prog, message))


def _add_config(parser):
    parser.add_argument('-c', '--config', default=None, help='key=value pipeline config file')
    parser.add_argument('--kernel', choices=('auto', 'naive', 'fast'), default='auto')


def _add_source(parser, default_length):
    parser.add_argument('--kind', choices=KINDS, default='lcg')
    parser.add_argument('-n', '--length', type=int, default=default_length)
    parser.add_argument('--seed', type=int, default=1, help='LCG seed in [1, 2^31 - 2]')
    parser.add_argument('--prime', type=int, default=2029, help='d-sequence prime')
    parser.add_argument('--path', default=None, help='symbol file for --kind file')


def build_parser():
    parser = ArgumentParser(prog=pkginfo.package_name,
                            description='Four-phase quasigroup/Hadamard/NTT sequence randomizer.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + pkginfo.version)
    parser.add_argument('--log-file', default=None)
    parser.add_argument('--log-level', default=None, choices=('DEBUG', 'INFO', 'WARNING', 'ERROR'))
    verbs = parser.add_subparsers(dest='verb', parser_class=ArgumentParser)
    verbs.required = True

    p = verbs.add_parser('encrypt', help='randomize a symbol stream')
    _add_config(p)
    p.add_argument('-i', '--input', default='-')
    p.add_argument('-o', '--output', default='-')
    p.add_argument('--pad', action='store_true', help='zero-pad to the block alignment')

    p = verbs.add_parser('decrypt', help='invert a ciphertext file')
    _add_config(p)
    p.add_argument('-i', '--input', default='-')
    p.add_argument('-o', '--output', default='-')

    p = verbs.add_parser('analyze', help='autocorrelation and block-frequency report')
    p.add_argument('-i', '--input', default='-')
    p.add_argument('-o', '--output', default='-')
    p.add_argument('-p', '--modulus', type=int, default=DEFAULT_PRIME)
    p.add_argument('-M', '--block-size', type=int, default=DEFAULT_BLOCK_SIZE)
    p.add_argument('--compare', default=None, metavar='INPUT', help='stream before randomization')
    p.add_argument('--ck-out', default=None, help='write "k C(k)" lines to this file')

    p = verbs.add_parser('gen', help='write a source stream')
    _add_source(p, default_length=1200)
    p.add_argument('-p', '--modulus', type=int, default=DEFAULT_PRIME)
    p.add_argument('-o', '--output', default='-')

    p = verbs.add_parser('bench', help='time naive against fast kernels')
    p.add_argument('--transform', choices=('hadamard', 'ntt'), default='hadamard')
    p.add_argument('--sizes', default=','.join(str(n) for n in DEFAULT_SIZES))
    p.add_argument('-p', '--modulus', type=int, default=None)
    p.add_argument('--repeats', type=int, default=20)
    p.add_argument('--progress', action='store_true')

    p = verbs.add_parser('roundtrip', help='encrypt, decrypt and compare as a self-test')
    _add_config(p)
    _add_source(p, default_length=1200)
    p.add_argument('--count', type=int, default=1, help='number of sequences (seeds seed..seed+count-1)')
    return parser


def load_config(path, **overrides) -> PipelineConfig:
    config_dict = load_config_file(path) if path is not None else dict()
    config_dict.update(overrides)
    return PipelineConfig.from_dict(config_dict)


def _encrypt(args):
    cfg = load_config(args.config, **({'pad': True} if args.pad else {}))
    symbols = read_symbols(args.input, p=cfg.p)
    cipher = Pipeline(cfg, kernel=args.kernel).encrypt(symbols)
    header = CipherHeader(cfg.p, cfg.n1, cfg.n2, cfg.n3, symbols.shape[0])
    write_cipher(args.output, header, cipher)


def _decrypt(args):
    cfg = load_config(args.config)
    header, cipher = read_cipher(args.input)
    expected = CipherHeader(cfg.p, cfg.n1, cfg.n2, cfg.n3, header.length)
    if header != expected:
        raise ConfigError('Ciphertext header (p=%d, n1=%d, n2=%d, n3=%d) does not match the config '
                          '(p=%d, n1=%d, n2=%d, n3=%d)!' % (header[:4] + expected[:4]))
    plain = Pipeline(cfg, kernel=args.kernel).decrypt(cipher, length=header.length)
    write_symbols(args.output, plain)


def _analyze(args):
    output = read_symbols(args.input, p=args.modulus)
    if args.compare is not None:
        before, report = compare(read_symbols(args.compare, p=args.modulus), output, args.modulus, args.block_size)
        text = format_comparison(before, report) + '\n'
    else:
        report = analyze(output, args.modulus, args.block_size)
        text = report.to_text()
    write_text(args.output, text)
    if args.ck_out is not None:
        write_text(args.ck_out, report.autocorrelation_text())


def _source(args, seed=None):
    return SourceSpec(args.kind, length=args.length, seed=args.seed if seed is None else seed,
                      prime=args.prime, path=args.path)


def _gen(args):
    write_symbols(args.output, _source(args).generate(args.modulus))


def _bench(args):
    sizes = parse_vector('sizes', args.sizes)
    results = run_benchmark(args.transform, sizes=sizes, p=args.modulus, repeats=args.repeats,
                            progress=args.progress)
    write_text('-', format_results(results) + '\n')


def _roundtrip(args):
    cfg = load_config(args.config)
    pipeline = Pipeline(cfg, kernel=args.kernel)
    for k in range(args.count):
        symbols = _source(args, seed=args.seed + k).generate(cfg.p)
        cipher = pipeline.encrypt(symbols)
        plain = pipeline.decrypt(cipher, length=symbols.shape[0])
        if not np.array_equal(plain, symbols):
            logger.error('Round trip failed for sequence %d of %d.', k + 1, args.count)
            write_text('-', 'mismatch\n')
            return VALIDATION_ERROR
    write_text('-', 'match\n')
    return SUCCESS


VERBS = {
    'encrypt': _encrypt,
    'decrypt': _decrypt,
    'analyze': _analyze,
    'gen': _gen,
    'bench': _bench,
    'roundtrip': _roundtrip,
}


def _diagnose(e):
    sys.stderr.write('%s: %s: %s\n' % (pkginfo.package_name, e.__class__.__name__, e))


def run(argv=None) -> int:
    """Parse argv, run one verb, and map failures to exit codes (1 validation, 2 I/O)."""
    try:
        args = build_parser().parse_args(argv)
    except ConfigError as e:
        _diagnose(e)
        return VALIDATION_ERROR
    except SystemExit as e:
        # --help / --version
        return e.code or SUCCESS

    setup_logger(output_file=args.log_file, level=args.log_level)
    try:
        code = VERBS[args.verb](args)
    except (InputOutputError, OSError) as e:
        _diagnose(e)
        return IO_ERROR
    except QhrandException as e:
        _diagnose(e)
        return VALIDATION_ERROR
    return SUCCESS if code is None else code
