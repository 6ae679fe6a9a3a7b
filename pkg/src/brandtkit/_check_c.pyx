# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernel; same contract as ``_check_py``."""

from libc.stdlib cimport free, malloc


def check_words_equal(const long long[::1] table, Py_ssize_t n,
                      const long long[::1] lhs, const long long[::1] rhs,
                      Py_ssize_t k, long long start, long long stop):
    """First assignment index in [start, stop) where lhs and rhs differ, or -1."""
    cdef Py_ssize_t nl = lhs.shape[0]
    cdef Py_ssize_t nr = rhs.shape[0]
    cdef long long *digs = <long long *> malloc(k * sizeof(long long))
    if digs == NULL:
        raise MemoryError()
    cdef long long i = start
    cdef long long rem = start
    cdef long long v, u, result = -1
    cdef Py_ssize_t t, j
    for t in range(k - 1, -1, -1):
        digs[t] = rem % n
        rem //= n
    with nogil:
        while i < stop:
            v = digs[lhs[0]]
            for t in range(1, nl):
                v = table[v * n + digs[lhs[t]]]
            u = digs[rhs[0]]
            for t in range(1, nr):
                u = table[u * n + digs[rhs[t]]]
            if v != u:
                result = i
                break
            j = k - 1
            while j >= 0:
                digs[j] += 1
                if digs[j] == n:
                    digs[j] = 0
                    j -= 1
                else:
                    break
            i += 1
    free(digs)
    return result


def check_word_constant(const long long[::1] table, Py_ssize_t n,
                        const long long[::1] codes, Py_ssize_t k,
                        long long target, long long start, long long stop):
    """First assignment index in [start, stop) where the word misses target, or -1."""
    cdef Py_ssize_t nc = codes.shape[0]
    cdef long long *digs = <long long *> malloc(k * sizeof(long long))
    if digs == NULL:
        raise MemoryError()
    cdef long long i = start
    cdef long long rem = start
    cdef long long v, result = -1
    cdef Py_ssize_t t, j
    for t in range(k - 1, -1, -1):
        digs[t] = rem % n
        rem //= n
    with nogil:
        while i < stop:
            v = digs[codes[0]]
            for t in range(1, nc):
                v = table[v * n + digs[codes[t]]]
            if v != target:
                result = i
                break
            j = k - 1
            while j >= 0:
                digs[j] += 1
                if digs[j] == n:
                    digs[j] = 0
                    j -= 1
                else:
                    break
            i += 1
    free(digs)
    return result
