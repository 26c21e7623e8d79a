"""Mod-4 term comparison and the four-case closed forms for the odious summatory function.

The four cases compare neighboring odious numbers by their residues mod 4;
whenever a case's hypothesis pair holds at n, the running sum S(n) equals a
quarter of a product of adjacent terms (with a case-specific offset). The
cases do not cover every n; uncovered indices are reported, not assumed away.
"""

from enum import Enum

from . import digits
from .report import VerificationReport
from .sequences import odious
from .summation import odious_summatory


class Mod4Ordering(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class ShevelevCase(Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    NONE = "NONE"


def cmp_mod4(x, y):
    """Compare x and y by their residues mod 4, taken as natural integers."""
    rx = digits.residue(x, 4)
    ry = digits.residue(y, 4)
    if rx < ry:
        return Mod4Ordering.LESS
    if rx > ry:
        return Mod4Ordering.GREATER
    return Mod4Ordering.EQUAL


def classify(n):
    """Which hypothesis pair holds at n, or NONE.

    With <4 the strict mod-4 order on (a(n-1), a(n+1)) and the second
    comparison on (a(n), a(n+2)):
    I: (<4, <=4); II: (>4, >=4); III: (<4, >4); IV: (>4, <4).
    At most one pair can hold; a tie in the first comparison rules out all four.
    """
    if n < 2:
        raise ValueError(f"classification needs n >= 2, got {n}")
    outer = cmp_mod4(odious(n - 1), odious(n + 1))
    inner = cmp_mod4(odious(n), odious(n + 2))
    if outer is Mod4Ordering.LESS:
        if inner is Mod4Ordering.GREATER:
            return ShevelevCase.III
        return ShevelevCase.I
    if outer is Mod4Ordering.GREATER:
        if inner is Mod4Ordering.LESS:
            return ShevelevCase.IV
        return ShevelevCase.II
    return ShevelevCase.NONE


def rhs(case, n):
    """Right-hand side of the case's sum formula at n, as an exactly divided integer."""
    if n < 2:
        raise ValueError(f"right-hand sides need n >= 2, got {n}")
    an = odious(n)
    an1 = odious(n + 1)
    if case is ShevelevCase.I:
        num = an * an1
    elif case is ShevelevCase.II:
        num = an * an1 + 2  # the +1/2 offset, folded in before the /4
    elif case is ShevelevCase.III:
        num = an * (an1 - 1)
    elif case is ShevelevCase.IV:
        num = (an + 1) * an1
    else:
        raise ValueError(f"no right-hand side for case {case}")
    quarter, rem = divmod(num, 4)
    if rem:
        raise ArithmeticError(f"case {case.value} numerator {num} not divisible by 4 at n={n}")
    return quarter


def verify_range(lo, hi):
    """Check S(n) against the case right-hand side for every covered n in [lo, hi].

    Uncovered indices (case NONE) are counted but not checked; `checked`
    reports the covered total so coverage stays visible.
    """
    if lo < 2:
        raise ValueError(f"range must start at 2 or above, got {lo}")
    if hi < lo:
        raise ValueError(f"empty range [{lo}, {hi}]")
    counts = {case.value: 0 for case in ShevelevCase}
    first_bad = None
    for n in range(lo, hi + 1):
        case = classify(n)
        counts[case.value] += 1
        if case is ShevelevCase.NONE:
            continue
        if first_bad is None and odious_summatory(n) != rhs(case, n):
            first_bad = n
    covered = (hi - lo + 1) - counts[ShevelevCase.NONE.value]
    return VerificationReport(
        identity="odious-summatory-case-split",
        lo=lo,
        hi=hi,
        checked=covered,
        passed=first_bad is None,
        first_counterexample=first_bad,
        counts=counts,
    )
