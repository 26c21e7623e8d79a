# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled kernels for the digit-arithmetic and morphic-generation hot loops.

Mirrors `_kernels_py` exactly; `_backend` selects whichever imports.
"""

from cpython cimport array
import array

INT64_MAX = (1 << 63) - 1


def digit_sum(n, d):
    """Sum of the base-d digits of n."""
    if d < 2:
        raise ValueError(f"radix must be >= 2, got {d}")
    if n < 0:
        raise ValueError(f"expected a nonnegative integer, got {n}")
    if n > INT64_MAX or d > INT64_MAX:
        raise OverflowError("inputs beyond 2**63 - 1 are not supported")
    cdef unsigned long long m = n
    cdef unsigned long long base = d
    cdef unsigned long long s = 0
    while m:
        s += m % base
        m //= base
    return s


def t(n, d):
    """Digit sum of n reduced mod d: the letter at position n of the base-d word."""
    if d < 2:
        raise ValueError(f"radix must be >= 2, got {d}")
    if n < 0:
        raise ValueError(f"expected a nonnegative integer, got {n}")
    if n > INT64_MAX or d > INT64_MAX:
        raise OverflowError("inputs beyond 2**63 - 1 are not supported")
    cdef unsigned long long m = n
    cdef unsigned long long base = d
    cdef unsigned long long s = 0
    while m:
        s += m % base
        m //= base
    return s % base


def prefix_letters(d, length):
    """First `length` letters of the base-d digit-sum word, generated block-wise.

    Block r is the cyclic shift of (0, 1, ..., d-1) starting at the letter
    already written at position r, so generation never computes a digit sum.
    """
    if d < 2:
        raise ValueError(f"radix must be >= 2, got {d}")
    if d > 256:
        raise ValueError(f"letters are stored as bytes: radix {d} exceeds 256")
    if length < 0:
        raise ValueError(f"expected a nonnegative length, got {length}")
    if length == 0:
        return b""
    out = bytearray(length)
    cdef unsigned char[::1] buf = out
    cdef Py_ssize_t n = length
    cdef unsigned int base = d
    cdef Py_ssize_t head = base if base < <unsigned long long> n else n
    cdef Py_ssize_t filled, r, stop, pos
    cdef unsigned int c, v
    for pos in range(head):
        buf[pos] = <unsigned char> pos
    filled = head
    r = 1
    while filled < n:
        c = buf[r]
        stop = filled + base
        if stop > n:
            stop = n
        v = c
        for pos in range(filled, stop):
            buf[pos] = <unsigned char> v
            v += 1
            if v == base:
                v = 0
        filled = stop
        r += 1
    return bytes(out)


def term_range(j, d, start, count):
    """Terms n = start .. start+count-1 of the class-j base-d sequence, as array('q')."""
    if d < 2:
        raise ValueError(f"radix must be >= 2, got {d}")
    if not 0 <= j < d:
        raise ValueError(f"class {j} outside [0, {d - 1}]")
    if start < 0:
        raise ValueError(f"expected a nonnegative start, got {start}")
    if count < 0:
        raise ValueError(f"expected a nonnegative count, got {count}")
    if count and d * (start + count - 1) + d - 1 > INT64_MAX:
        raise OverflowError("terms would exceed 2**63 - 1")
    cdef array.array out = array.array('q')
    array.resize(out, count)
    if count == 0:
        return out
    cdef long long[::1] view = out
    cdef unsigned long long base = d
    cdef long long jj = j
    cdef unsigned long long n = start
    cdef unsigned long long m, s
    cdef long long r
    cdef Py_ssize_t i
    for i in range(count):
        m = n
        s = 0
        while m:
            s += m % base
            m //= base
        r = jj - <long long> (s % base)
        if r < 0:
            r += <long long> base
        view[i] = <long long> (base * n) + r
        n += 1
    return out
