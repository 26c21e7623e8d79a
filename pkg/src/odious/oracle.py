"""Brute-force reference implementations: simple by design, never optimized.

Deliberately standalone: nothing here imports the closed-form modules, so
agreement between the two paths is real evidence. Each function re-derives
what it needs from repeated division and linear scans.
"""


def _class_pair(spec):
    # duck-typed so SequenceSpec works without importing the sequences module
    j = getattr(spec, "j", None)
    if j is not None:
        return spec.j, spec.d
    j, d = spec
    return j, d


def oracle_t(n, d):
    """Digit sum of n by repeated division, reduced mod d."""
    if d < 2:
        raise ValueError(f"radix must be >= 2, got {d}")
    if n < 0:
        raise ValueError(f"expected a nonnegative integer, got {n}")
    s = 0
    while n:
        n, r = divmod(n, d)
        s += r
    return s % d


def oracle_terms(spec, count):
    """First `count` members of the class, found by scanning every integer."""
    j, d = _class_pair(spec)
    if d < 2 or not 0 <= j < d:
        raise ValueError(f"invalid class ({j}, {d})")
    if count < 0:
        raise ValueError(f"expected a nonnegative count, got {count}")
    out = []
    k = 0
    while len(out) < count:
        if oracle_t(k, d) == j:
            out.append(k)
        k += 1
    return out


def oracle_sum(spec, upto):
    """Exact sum of members 0 .. upto of the class, by accumulation."""
    if upto < 0:
        raise ValueError(f"expected a nonnegative index, got {upto}")
    return sum(oracle_terms(spec, upto + 1))
