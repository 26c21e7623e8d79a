"""Exact summatory closed forms and the polynomial identities built on them.

Every half-integer expression is evaluated through its own parity or
residue case split, so all arithmetic stays in exact integers; results are
plain Python ints and never lose precision.
"""

from enum import Enum

from . import digits
from .sequences import EVIL, ODIOUS, SequenceSpec, evil, odious

INT64_MAX = digits.INT64_MAX


def residue_run_sum(a, r, d):
    """Sum of (a - l) mod d for l = 0 .. r, by the case-split closed form."""
    if d < 2:
        raise ValueError(f"radix must be >= 2, got {d}")
    if not 0 <= a < d:
        raise ValueError(f"a={a} outside [0, {d - 1}]")
    if not 0 <= r < d:
        raise ValueError(f"r={r} outside [0, {d - 1}]")
    if r <= a:
        return a * (r + 1) - r * (r + 1) // 2
    return a * (r + 1 - d) + d * r - r * (r + 1) // 2


def summatory(spec, upto):
    """Exact sum of terms 0 .. upto of the class sequence, by closed form.

    The leading part is d*N*(N+1)/2 plus one full cycle contribution per
    complete block; the tail is a residue run anchored at the letter of the
    final partial block.
    """
    spec = SequenceSpec.coerce(spec)
    if upto < 0:
        raise ValueError(f"expected a nonnegative index, got {upto}")
    if upto > INT64_MAX:
        raise OverflowError("indices beyond 2**63 - 1 are not supported")
    d, j = spec.d, spec.j
    q, rem = divmod(upto, d)
    a = (j - digits.t(q, d)) % d
    return d * upto * (upto + 1) // 2 + q * d * (d - 1) // 2 + residue_run_sum(a, rem, d)


def odious_summatory(upto):
    """Sum of the first upto+1 odious numbers, via the parity case split."""
    n = upto
    if n < 0:
        raise ValueError(f"expected a nonnegative index, got {n}")
    if n % 2:
        return n * n + (3 * n + 1) // 2
    return n * n + 3 * n // 2 + 1 - digits.t(n, 2)


def evil_summatory(upto):
    """Sum of the first upto+1 evil numbers, via the parity case split."""
    n = upto
    if n < 0:
        raise ValueError(f"expected a nonnegative index, got {n}")
    if n % 2:
        return n * n + (3 * n + 1) // 2
    return n * n + 3 * n // 2 + digits.t(n, 2)


class CrossIdentity(Enum):
    """Polynomial identities tying each summatory function to the other sequence.

    B_UPTO_B's right side is b(n)**2 + 2*b(n) - n. The variant ending in
    -n**2 instead of -n is wrong: it first fails at n = 2, where the direct
    sum gives 33 against its 31.
    """

    A_UPTO_B = "a-upto-b"
    B_UPTO_A = "b-upto-a"
    A_UPTO_A = "a-upto-a"
    B_UPTO_B = "b-upto-b"


def cross_identity(kind, n):
    """(lhs, rhs) for the identity at n; callers compare the pair."""
    if n < 0:
        raise ValueError(f"expected a nonnegative index, got {n}")
    if kind is CrossIdentity.A_UPTO_B:
        bound = evil(n)
        return summatory(ODIOUS, bound), bound * bound + bound + n + 1
    if kind is CrossIdentity.B_UPTO_A:
        bound = odious(n)
        return summatory(EVIL, bound), bound * bound + bound + n + 1
    if kind is CrossIdentity.A_UPTO_A:
        bound = odious(n)
        return summatory(ODIOUS, bound), bound * bound + 2 * bound - n
    if kind is CrossIdentity.B_UPTO_B:
        bound = evil(n)
        return summatory(EVIL, bound), bound * bound + 2 * bound - n
    raise ValueError(f"unknown identity kind {kind!r}")


class SequenceClass(Enum):
    ODIOUS = "odious"
    EVIL = "evil"


def bounded_sum(cls, n):
    """Sum of all class members <= n, via the residue-mod-4 case formulas.

    Each case value is an exact multiple of 4 plus an integer tail; a
    non-multiple numerator signals a bug, never a rounding step.
    """
    if n < 0:
        raise ValueError(f"expected a nonnegative bound, got {n}")
    tn = digits.t(n, 2)
    m = n % 4
    if cls is SequenceClass.ODIOUS:
        if m == 0:
            num, tail = n * n - n, n * tn
        elif m == 1:
            num, tail = n * n + n - 2, tn
        elif m == 2:
            num, tail = n * n - n - 2, (n + 1) * tn
        else:
            num, tail = n * n + n, 0
    elif cls is SequenceClass.EVIL:
        if m == 0:
            num, tail = n * n + 3 * n, -n * tn
        elif m == 1:
            num, tail = n * n + n + 2, -tn
        elif m == 2:
            num, tail = n * n + 3 * n + 2, -(n + 1) * tn
        else:
            num, tail = n * n + n, 0
    else:
        raise ValueError(f"unknown sequence class {cls!r}")
    quarter, rem = divmod(num, 4)
    if rem:
        raise ArithmeticError(f"case n % 4 == {m} produced non-multiple of 4: {num}")
    return quarter + tail
