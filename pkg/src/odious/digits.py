"""Exact base-d digit arithmetic: residues, digit sums, and digit-sum letters.

All functions are pure. Inputs are capped at 2**63 - 1 so the compiled
kernels can use 64-bit arithmetic; wider values raise OverflowError instead
of wrapping.
"""

from ._backend import kernels

INT64_MAX = (1 << 63) - 1

digit_sum = kernels.digit_sum
t = kernels.t


def residue(x, d):
    """Residue of x modulo d in [0, d-1]; x may be negative.

    Floor-division semantics: x == d * (x // d) + residue(x, d).
    """
    if d < 2:
        raise ValueError(f"radix must be >= 2, got {d}")
    if d > INT64_MAX or x > INT64_MAX or x < -INT64_MAX:
        raise OverflowError("inputs beyond 2**63 - 1 are not supported")
    return x % d


def t_recurrence(n, d):
    """Letter at position n, computed by folding digits most-significant first.

    Cross-validation path for t(): reduces mod d after every digit instead of
    summing all digits first. Both paths agree everywhere.
    """
    if d < 2:
        raise ValueError(f"radix must be >= 2, got {d}")
    if n < 0:
        raise ValueError(f"expected a nonnegative integer, got {n}")
    if n > INT64_MAX or d > INT64_MAX:
        raise OverflowError("inputs beyond 2**63 - 1 are not supported")
    digits = []
    while n:
        n, r = divmod(n, d)
        digits.append(r)
    acc = 0
    for a in reversed(digits):
        acc = (acc + a) % d
    return acc
