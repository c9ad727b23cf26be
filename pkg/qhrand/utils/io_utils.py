# License: MIT

import collections
import sys

import numpy as np

from qhrand.core.modmath import as_symbols
from qhrand.utils.constants import CIPHER_MAGIC, MAX_SYMBOL, SYMBOLS_PER_LINE
from qhrand.utils.exceptions import FormatError

CipherHeader = collections.namedtuple('CipherHeader', ['p', 'n1', 'n2', 'n3', 'length'])

_HEADER_FIELDS = (('p', 'p'), ('n1', 'n1'), ('n2', 'n2'), ('n3', 'n3'), ('len', 'length'))


def format_header(header: CipherHeader) -> str:
    return ' '.join([CIPHER_MAGIC] + ['%s=%d' % (key, getattr(header, attr)) for key, attr in _HEADER_FIELDS])


def parse_header(line) -> CipherHeader:
    tokens = line.split()
    if not tokens or tokens[0] != CIPHER_MAGIC:
        raise FormatError('Ciphertext must start with a %s header line!' % CIPHER_MAGIC)
    fields = dict()
    for token in tokens[1:]:
        key, sep, value = token.partition('=')
        if not sep or key in fields:
            raise FormatError('Malformed ciphertext header field %s!' % token)
        try:
            fields[key] = int(value)
        except ValueError:
            raise FormatError('Ciphertext header field %s is not an integer!' % token)
    missing = [key for key, _ in _HEADER_FIELDS if key not in fields]
    unknown = set(fields) - set(key for key, _ in _HEADER_FIELDS)
    if missing or unknown:
        raise FormatError('Ciphertext header fields missing: %s, unknown: %s!'
                          % (', '.join(missing) or '-', ', '.join(sorted(unknown)) or '-'))
    return CipherHeader(**{attr: fields[key] for key, attr in _HEADER_FIELDS})


def format_symbols(symbols) -> str:
    x = np.asarray(symbols, dtype=np.int64).reshape(-1)
    lines = [' '.join(str(v) for v in x[i:i + SYMBOLS_PER_LINE].tolist())
             for i in range(0, x.shape[0], SYMBOLS_PER_LINE)]
    return ''.join(line + '\n' for line in lines)


def parse_symbols(text) -> np.ndarray:
    """Whitespace-separated non-negative decimal integers that fit in int64."""
    values = list()
    for token in text.split():
        if not (token.isascii() and token.isdigit()):
            raise FormatError('Invalid symbol %r in symbol stream!' % token)
        value = int(token)
        if value > MAX_SYMBOL:
            raise FormatError('Symbol %s does not fit in a 64-bit integer!' % token)
        values.append(value)
    return np.array(values, dtype=np.int64)


def _read_text(path):
    try:
        if path == '-':
            return sys.stdin.read()
        with open(path, 'r', encoding='utf-8') as fh:
            return fh.read()
    except UnicodeDecodeError as e:
        raise FormatError('%s is not a UTF-8 text file: %s' % (path, e))


def _write_text(path, text):
    if path == '-':
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, 'w') as fh:
        fh.write(text)


def _split_header(text):
    stripped = text.lstrip()
    if stripped.startswith(CIPHER_MAGIC):
        first, _, body = stripped.partition('\n')
        return parse_header(first), body
    return None, text


def read_symbols(path, p=None) -> np.ndarray:
    """
    Read a symbol stream. A ciphertext header, if present, is skipped so encrypted
    output can be analyzed directly. With p given, symbols must lie in [0, p).
    """
    _, body = _split_header(_read_text(path))
    symbols = parse_symbols(body)
    if p is not None:
        symbols = as_symbols(symbols, p)
    return symbols


def write_symbols(path, symbols):
    _write_text(path, format_symbols(symbols))


def read_cipher(path):
    """Returns (CipherHeader, symbols)."""
    header, body = _split_header(_read_text(path))
    if header is None:
        raise FormatError('%s has no %s header!' % (path, CIPHER_MAGIC))
    symbols = parse_symbols(body)
    if symbols.shape[0] < header.length:
        raise FormatError('Ciphertext body holds %d symbols but the header says len=%d!'
                          % (symbols.shape[0], header.length))
    return header, symbols


def write_cipher(path, header: CipherHeader, symbols):
    _write_text(path, format_header(header) + '\n' + format_symbols(symbols))


def write_text(path, text):
    _write_text(path, text)
