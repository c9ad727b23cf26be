# License: MIT

import numbers

import numpy as np

from qhrand.utils.constants import MAX_MODULUS, MR_WITNESSES
from qhrand.utils.exceptions import NotPrime, ZeroInverse, DomainError, OutOfAlphabet


def is_prime(n: int) -> bool:
    """
    Deterministic Miller-Rabin. The witness set is complete for every n < 3.3e24,
    which covers the whole 64-bit range.
    """
    if n < 0:
        raise DomainError('is_prime expects a non-negative integer, got %d!' % n)
    if n < 2:
        return False
    for w in MR_WITNESSES:
        if n % w == 0:
            return n == w

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int):
    """Distinct prime factors of n by trial division (n is at most p - 1 < 2^31)."""
    factors = list()
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


class PrimeModulus(object):
    def __init__(self, p):
        if isinstance(p, PrimeModulus):
            p = p.p
        if not isinstance(p, (numbers.Integral, np.integer)):
            raise NotPrime('Modulus must be an integer, got %r!' % (p,))
        p = int(p)
        if p >= MAX_MODULUS:
            raise NotPrime('Modulus %d is too large: p < 2^31 is required!' % p)
        if not is_prime(p):
            raise NotPrime('Modulus %d is not prime!' % p)
        self.p = p

    def residue(self, z):
        return Residue(z, self)

    def canonical(self, values):
        """Reduce an array of integers of any size to canonical representatives in [0, p)."""
        return np.mod(np.asarray(values, dtype=object), self.p).astype(np.int64)

    def __int__(self):
        return self.p

    def __index__(self):
        return self.p

    def __eq__(self, other):
        if isinstance(other, PrimeModulus):
            return self.p == other.p
        if isinstance(other, (numbers.Integral, np.integer)):
            return self.p == int(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.p)

    def __repr__(self):
        return 'PrimeModulus(%d)' % self.p


def as_modulus(p) -> PrimeModulus:
    if isinstance(p, PrimeModulus):
        return p
    return PrimeModulus(p)


class Residue(object):
    """An element of Z_p held in canonical form, so -1 becomes p - 1."""
    __slots__ = ('value', 'modulus')

    def __init__(self, value, modulus):
        self.modulus = as_modulus(modulus)
        self.value = int(value) % self.modulus.p

    @property
    def p(self):
        return self.modulus.p

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise DomainError('Cannot mix residues mod %d and mod %d!' % (self.p, other.p))
            return other.value
        return int(other)

    def __add__(self, other):
        return Residue(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.value - self._coerce(other), self.modulus)

    def __rsub__(self, other):
        return Residue(self._coerce(other) - self.value, self.modulus)

    def __mul__(self, other):
        return Residue(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, exp):
        return mod_pow(self, exp)

    def inverse(self):
        return mod_inverse(self)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, (numbers.Integral, np.integer)):
            return self.value == int(other) % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __repr__(self):
        return 'Residue(%d mod %d)' % (self.value, self.p)


def mod_inverse(a: Residue) -> Residue:
    if a.value == 0:
        raise ZeroInverse('0 has no inverse mod %d!' % a.p)
    return Residue(pow(a.value, -1, a.p), a.modulus)


def mod_pow(base: Residue, exp: int) -> Residue:
    if exp < 0:
        raise DomainError('mod_pow expects a non-negative exponent, got %d!' % exp)
    # built-in pow is square-and-multiply
    return Residue(pow(base.value, int(exp), base.p), base.modulus)


def has_order(g: int, n: int, p: int, n_factors=None) -> bool:
    """True iff g has multiplicative order exactly n mod p."""
    if pow(g, n, p) != 1:
        return False
    if n_factors is None:
        n_factors = prime_factors(n)
    return all(pow(g, n // q, p) != 1 for q in n_factors)


def primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group mod a prime p."""
    p_factors = prime_factors(p - 1)
    for g in range(2, p):
        if has_order(g, p - 1, p, p_factors):
            return g
    return 1


def matvec_mod(matrix: np.ndarray, blocks: np.ndarray, p: int) -> np.ndarray:
    """
    Compute (blocks @ matrix.T) mod p, i.e. matrix times every row of blocks.

    Rows of both arguments hold residues. int64 is used while n * (p-1)^2 fits in
    a signed word, Python integers otherwise.
    """
    n = matrix.shape[-1]
    if n * (p - 1) ** 2 < 2 ** 63:
        return np.mod(np.dot(blocks, matrix.T), p)
    product = np.dot(blocks.astype(object), matrix.T.astype(object))
    return np.mod(product, p).astype(np.int64)


def as_symbols(symbols, p) -> np.ndarray:
    """Flatten to an int64 vector, rejecting any symbol outside [0, p)."""
    arr = np.asarray(symbols, dtype=np.int64).reshape(-1)
    if arr.size and (arr.min() < 0 or arr.max() >= p):
        raise OutOfAlphabet(int(arr[(arr < 0) | (arr >= p)][0]), p)
    return arr
