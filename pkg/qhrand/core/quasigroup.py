# License: MIT

import numbers
from typing import Sequence

import numpy as np

from qhrand.core.modmath import as_symbols
from qhrand.utils.exceptions import NotLatinSquare, OutOfAlphabet, ValidationError, FormatError
from qhrand.utils.logging_utils import get_logger

logger = get_logger(__name__)

# Built-in order-7 table (row a, column x gives a*x). Rows are permutations but
# column 4 repeats 0 (rows 1, 6) and column 5 repeats 6 (rows 0, 1).
ORDER7 = (
    (2, 1, 0, 5, 4, 6, 3),
    (1, 4, 3, 2, 0, 6, 5),
    (0, 5, 1, 6, 3, 4, 2),
    (4, 3, 6, 1, 2, 5, 0),
    (6, 2, 5, 0, 1, 3, 4),
    (3, 0, 2, 4, 5, 1, 6),
    (5, 6, 4, 3, 0, 2, 1),
)

# ORDER7 with row 1 columns 4/5 swapped: a full Latin square, same 6*3 and 3*4.
ORDER7_LATIN = tuple(
    (1, 4, 3, 2, 6, 0, 5) if i == 1 else row for i, row in enumerate(ORDER7)
)


def _is_permutation(line, q):
    return len(line) == q and sorted(line) == list(range(q))


class QuasigroupTable(object):
    """
    Cayley table of a (left) quasigroup over {0..q-1}.

    With strict=True every row and column must be a permutation (Latin square), so
    both a*x=b and y*a=b are uniquely solvable. With strict=False only rows are
    checked, which is all the chained encryption needs (left division).
    """

    def __init__(self, table, strict=True):
        rows = [[int(v) for v in row] for row in table]
        q = len(rows)
        if q < 1:
            raise NotLatinSquare('shape', 0, 'empty table')
        for i, row in enumerate(rows):
            if len(row) != q:
                raise NotLatinSquare('row', i, 'expected %d entries, got %d' % (q, len(row)))
        for i, row in enumerate(rows):
            if not _is_permutation(row, q):
                raise NotLatinSquare('row', i)

        latin = True
        for j in range(q):
            if not _is_permutation([rows[i][j] for i in range(q)], q):
                if strict:
                    raise NotLatinSquare('column', j)
                latin = False
                break

        self.order = q
        self.strict = strict
        self.is_latin = latin
        self.table = np.array(rows, dtype=np.int64)
        self.table.setflags(write=False)
        self._rows = rows

        # left_div[a][b] = x with a*x = b
        self._left_div = [[0] * q for _ in range(q)]
        for a in range(q):
            for x, b in enumerate(rows[a]):
                self._left_div[a][b] = x
        self._right_div = None
        if latin:
            # right_div[a][b] = y with y*a = b
            self._right_div = [[0] * q for _ in range(q)]
            for y in range(q):
                for a, b in enumerate(rows[y]):
                    self._right_div[a][b] = y

    def _check(self, *symbols):
        for s in symbols:
            if not 0 <= s < self.order:
                raise OutOfAlphabet(s, self.order)

    def mul(self, a, x):
        self._check(a, x)
        return self._rows[a][x]

    def left_divide(self, a, b):
        self._check(a, b)
        return self._left_div[a][b]

    def right_divide(self, b, a):
        self._check(a, b)
        if self._right_div is None:
            raise ValidationError('Right division needs a Latin square; this table only has permutation rows!')
        return self._right_div[a][b]

    def to_text(self):
        return '\n'.join([str(self.order)] + [' '.join(str(v) for v in row) for row in self._rows]) + '\n'

    def __eq__(self, other):
        return isinstance(other, QuasigroupTable) and self._rows == other._rows

    def __hash__(self):
        return hash(tuple(map(tuple, self._rows)))

    def __repr__(self):
        return 'QuasigroupTable(order=%d, latin=%s)' % (self.order, self.is_latin)


class QuasigroupKey(object):
    def __init__(self, table: QuasigroupTable, seed: int):
        if not isinstance(seed, (numbers.Integral, np.integer)) or not 0 <= seed < table.order:
            raise OutOfAlphabet(seed, table.order)
        self.table = table
        self.seed = int(seed)

    def __repr__(self):
        return 'QuasigroupKey(order=%d, seed=%d)' % (self.table.order, self.seed)


def qg_validate(table, strict=True) -> QuasigroupTable:
    return QuasigroupTable(table, strict=strict)


def qg_mul(t: QuasigroupTable, a, x):
    return t.mul(a, x)


def qg_left_divide(t: QuasigroupTable, a, b):
    return t.left_divide(a, b)


def qg_right_divide(t: QuasigroupTable, b, a):
    return t.right_divide(b, a)


def _as_symbols(symbols, q):
    return as_symbols(symbols, q).tolist()


def qg_encrypt(key: QuasigroupKey, symbols: Sequence[int]) -> np.ndarray:
    """e_1 = seed * a_1, e_i = e_{i-1} * a_i."""
    rows = key.table._rows
    out = list()
    e = key.seed
    for a in _as_symbols(symbols, key.table.order):
        e = rows[e][a]
        out.append(e)
    return np.array(out, dtype=np.int64)


def qg_decrypt(key: QuasigroupKey, cipher: Sequence[int]) -> np.ndarray:
    """a_1 = seed \\ e_1, a_i = e_{i-1} \\ e_i."""
    left_div = key.table._left_div
    out = list()
    prev = key.seed
    for e in _as_symbols(cipher, key.table.order):
        out.append(left_div[prev][e])
        prev = e
    return np.array(out, dtype=np.int64)


def cyclic_table(q):
    return [[(a + x) % q for x in range(q)] for a in range(q)]


def get_builtin_table(name, order=None) -> QuasigroupTable:
    name = name.lower()
    if name == 'paper7':
        logger.debug('Loading paper7 as a left quasigroup (columns 4 and 5 repeat entries).')
        return QuasigroupTable(ORDER7, strict=False)
    elif name == 'paper7-latin':
        return QuasigroupTable(ORDER7_LATIN, strict=True)
    elif name == 'cyclic':
        if order is None:
            raise ValidationError('The cyclic table needs an order!')
        return QuasigroupTable(cyclic_table(order), strict=True)
    raise ValidationError('Invalid built-in quasigroup table %s!' % name)


def parse_table(text, strict=True) -> QuasigroupTable:
    """First line q, then q lines of q whitespace-separated integers."""
    lines = [line.split() for line in text.splitlines() if line.strip()]
    try:
        q = int(lines[0][0])
        rows = [[int(v) for v in line] for line in lines[1:]]
    except (IndexError, ValueError) as e:
        raise FormatError('Malformed quasigroup table: %s' % e)
    if len(lines[0]) != 1 or len(rows) != q:
        raise FormatError('Quasigroup table header says %s rows but %d follow!' % (lines[0][0], len(rows)))
    return qg_validate(rows, strict=strict)


def load_table(path, strict=True) -> QuasigroupTable:
    try:
        with open(path, 'r', encoding='utf-8') as fh:
            text = fh.read()
    except UnicodeDecodeError as e:
        raise FormatError('Quasigroup table %s is not UTF-8 text: %s' % (path, e))
    return parse_table(text, strict=strict)


def resolve_table(spec, order=None, strict=True) -> QuasigroupTable:
    """A built-in name (paper7, paper7-latin, cyclic) or a path to a table file."""
    if spec.lower() in ('paper7', 'paper7-latin', 'cyclic'):
        return get_builtin_table(spec, order=order)
    return load_table(spec, strict=strict)
