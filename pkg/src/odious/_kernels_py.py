"""Pure-Python kernels, used when the compiled extension is not built.

`_kernels` (Cython) exposes the same four functions with identical semantics;
`_backend` picks whichever imports. Inputs are capped at 2**63 - 1 so the two
implementations agree bit-for-bit.
"""

from array import array

INT64_MAX = (1 << 63) - 1


def digit_sum(n, d):
    """Sum of the base-d digits of n."""
    if d < 2:
        raise ValueError(f"radix must be >= 2, got {d}")
    if n < 0:
        raise ValueError(f"expected a nonnegative integer, got {n}")
    if n > INT64_MAX or d > INT64_MAX:
        raise OverflowError("inputs beyond 2**63 - 1 are not supported")
    s = 0
    while n:
        n, r = divmod(n, d)
        s += r
    return s


def t(n, d):
    """Digit sum of n reduced mod d: the letter at position n of the base-d word."""
    return digit_sum(n, d) % d


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
    buf = bytearray(length)
    head = min(d, length)
    for pos in range(head):
        buf[pos] = pos
    filled = head
    r = 1
    while filled < length:
        c = buf[r]
        stop = min(filled + d, length)
        v = c
        for pos in range(filled, stop):
            buf[pos] = v
            v += 1
            if v == d:
                v = 0
        filled = stop
        r += 1
    return bytes(buf)


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
    out = array("q", bytes(8 * count))
    for i in range(count):
        n = start + i
        s = 0
        m = n
        while m:
            m, r = divmod(m, d)
            s += r
        out[i] = d * n + (j - s) % d
    return out
