"""Pure-Python (numpy) evaluation kernel.

Enumerates assignments of k variables over an n-element semigroup in
mixed-radix order (variable 0 most significant) and folds each word
through the multiplication table.  Chunked so memory stays bounded for
large enumeration ranges.  Same contract as the compiled kernel in
``_check_c``.
"""

import numpy as np

CHUNK = 1 << 18


def _values(table, n, codes, digits):
    v = digits[codes[0]]
    for c in codes[1:]:
        v = table[v * n + digits[c]]
    return v


def _digit_arrays(idx, n, k):
    return [(idx // n ** (k - 1 - v)) % n for v in range(k)]


def check_words_equal(table, n, lhs, rhs, k, start, stop):
    """First assignment index in [start, stop) where lhs and rhs differ, or -1."""
    lhs = list(lhs)
    rhs = list(rhs)
    for lo in range(start, stop, CHUNK):
        hi = min(lo + CHUNK, stop)
        idx = np.arange(lo, hi, dtype=np.int64)
        digits = _digit_arrays(idx, n, k)
        bad = np.nonzero(_values(table, n, lhs, digits) !=
                         _values(table, n, rhs, digits))[0]
        if bad.size:
            return lo + int(bad[0])
    return -1


def check_word_constant(table, n, codes, k, target, start, stop):
    """First assignment index in [start, stop) where the word misses target, or -1."""
    codes = list(codes)
    for lo in range(start, stop, CHUNK):
        hi = min(lo + CHUNK, stop)
        idx = np.arange(lo, hi, dtype=np.int64)
        digits = _digit_arrays(idx, n, k)
        bad = np.nonzero(_values(table, n, codes, digits) != target)[0]
        if bad.size:
            return lo + int(bad[0])
    return -1
