# License: MIT


class QhrandException(Exception):
    pass


class ValidationError(QhrandException):
    """Input or configuration violates an invariant. The CLI exits with 1."""
    pass


class InputOutputError(QhrandException):
    """A file could not be parsed. The CLI exits with 2."""
    pass


class FormatError(InputOutputError):
    pass


class ConfigError(ValidationError):
    pass


class NotPrime(ValidationError):
    pass


class ZeroInverse(ValidationError):
    pass


class DomainError(ValidationError):
    pass


class ConvergenceError(QhrandException):
    pass


class OutOfAlphabet(ValidationError):
    def __init__(self, symbol, order):
        self.symbol = symbol
        self.order = order
        super().__init__('Symbol %s is outside the alphabet [0, %d)!' % (symbol, order))


class NotLatinSquare(ValidationError):
    def __init__(self, kind, index, detail=''):
        self.kind = kind
        self.index = index
        msg = 'Table is not a quasigroup: %s %d is not a permutation' % (kind, index)
        if detail:
            msg += ' (%s)' % detail
        super().__init__(msg + '!')


class DegenerateOrder(ValidationError):
    pass


class BlockSizeMismatch(ValidationError):
    def __init__(self, got, expected):
        self.got = got
        self.expected = expected
        super().__init__('Block length %d does not match transform order %d!' % (got, expected))


class NoSuchRoot(ValidationError):
    def __init__(self, n, p):
        self.n = n
        self.p = p
        super().__init__('No primitive %d-th root of unity mod %d: %d does not divide %d!' % (n, p, n, p - 1))


class UnsupportedFastOrder(ValidationError):
    pass


class LengthNotAligned(ValidationError):
    def __init__(self, length, lcm):
        self.length = length
        self.lcm = lcm
        super().__init__('Input length %d is not a multiple of %d (lcm of the block orders)!' % (length, lcm))


class EmptySequence(ValidationError):
    pass


class PeriodTooShort(ValidationError):
    pass


class BlockTooLarge(ValidationError):
    def __init__(self, block_size, length):
        self.block_size = block_size
        self.length = length
        super().__init__('Block size M=%d exceeds sequence length n=%d!' % (block_size, length))


class BadSeed(ValidationError):
    pass


class BadPrime(ValidationError):
    pass
