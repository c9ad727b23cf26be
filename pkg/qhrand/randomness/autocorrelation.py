# License: MIT

import numpy as np

from qhrand.utils.exceptions import EmptySequence, PeriodTooShort, ValidationError


def autocorrelation(s) -> np.ndarray:
    """
    C(k) = (1/n) sum_j a_j a_{j+k} for k in [0, n), indices taken mod the period n.

    The lag sums come from a circular correlation via the real FFT, rounded back to
    integers and divided once, so C(0) is exactly 1 and every C(k) is an exact
    multiple of 1/n.
    """
    a = np.asarray(s, dtype=np.int64).reshape(-1)
    n = a.shape[0]
    if n == 0:
        raise EmptySequence('Autocorrelation of an empty sequence is undefined!')
    if np.any(np.abs(a) != 1):
        raise ValidationError('Autocorrelation expects a bipolar (+1/-1) sequence!')
    spectrum = np.fft.rfft(a)
    sums = np.rint(np.fft.irfft(spectrum * np.conj(spectrum), n)).astype(np.int64)
    return sums / n


def randomness_measure(c) -> float:
    """R = 1 - (1/(n-1)) sum_{k=1}^{n-1} |C(k)|; 1 for ideal noise, 0 for constant sequences."""
    c = np.asarray(c, dtype=np.float64).reshape(-1)
    n = c.shape[0]
    if n < 2:
        raise PeriodTooShort('Randomness measure needs a period of at least 2, got %d!' % n)
    return float(1.0 - np.sum(np.abs(c[1:])) / (n - 1))
