"""Sharded identity sweeps behind the CLI verify command.

Each suite runs a fixed list of identities over n = 0 .. n_max. Ranges are
split into contiguous chunks that workers check independently; chunk results
merge in range order, so reports (and rendered output) are identical for any
worker count.
"""

from multiprocessing import Pool

from . import digits
from .characterization import RELATION_IDS, _relation_failures
from .morphic import prefix
from .report import VerificationReport
from .summation import (
    CrossIdentity,
    SequenceClass,
    bounded_sum,
    cross_identity,
)

COMPOSITION_RADICES = tuple(range(2, 9))

IDENTITY_IDS = tuple(kind.value for kind in CrossIdentity) + (
    "bounded-odious",
    "bounded-evil",
)

SUITES = ("relations", "identities", "all")


def _identity_failures(lo, hi):
    """First failing n in [lo, hi] for the four cross identities and two bounded sums."""
    firsts = [None] * 6
    kinds = tuple(CrossIdentity)
    for n in range(lo, hi + 1):
        for idx, kind in enumerate(kinds):
            lhs, rhs = cross_identity(kind, n)
            if lhs != rhs and firsts[idx] is None:
                firsts[idx] = n
        # bounded sums checked through their one-step increments
        if n == 0:
            ok_od = bounded_sum(SequenceClass.ODIOUS, 0) == 0
            ok_ev = bounded_sum(SequenceClass.EVIL, 0) == 0
        else:
            member_odious = digits.t(n, 2) == 1
            delta_od = bounded_sum(SequenceClass.ODIOUS, n) - bounded_sum(
                SequenceClass.ODIOUS, n - 1
            )
            delta_ev = bounded_sum(SequenceClass.EVIL, n) - bounded_sum(
                SequenceClass.EVIL, n - 1
            )
            ok_od = delta_od == (n if member_odious else 0)
            ok_ev = delta_ev == (0 if member_odious else n)
        if not ok_od and firsts[4] is None:
            firsts[4] = n
        if not ok_ev and firsts[5] is None:
            firsts[5] = n
    return firsts


def _composition_failure(lo, hi):
    """First n in [lo, hi] where some (d, i, j) breaks the nesting identity.

    The letters come from the morphic generator while the terms come from the
    closed form, so this crosses two independent paths.
    """
    tables = {d: prefix(d, d * hi + d) for d in COMPOSITION_RADICES}
    for n in range(lo, hi + 1):
        for d in COMPOSITION_RADICES:
            letters = tables[d]
            tn = letters[n]
            for i in range(d):
                inner = d * n + (i - tn) % d
                ti = letters[inner]
                for j in range(d):
                    if (j - i) % d != (j - ti) % d:
                        return n
    return None


def _relations_chunk(bounds):
    return _relation_failures(*bounds)


def _identities_chunk(bounds):
    return _identity_failures(*bounds)


def _composition_chunk(bounds):
    return [_composition_failure(*bounds)]


_FAMILIES = {
    "relations": (RELATION_IDS, _relations_chunk),
    "identities": (IDENTITY_IDS, _identities_chunk),
    "composition": (("composition",), _composition_chunk),
}


def _split(lo, hi, parts):
    total = hi - lo + 1
    parts = max(1, min(parts, total))
    step = -(-total // parts)
    chunks = []
    start = lo
    while start <= hi:
        chunks.append((start, min(start + step - 1, hi)))
        start += step
    return chunks


def _run_family(family, n_max, jobs):
    ids, worker = _FAMILIES[family]
    chunks = _split(0, n_max, jobs)
    if jobs <= 1 or len(chunks) == 1:
        results = [worker(c) for c in chunks]
    else:
        with Pool(processes=len(chunks)) as pool:
            results = pool.map(worker, chunks)
    reports = []
    for idx, identity in enumerate(ids):
        first = None
        for chunk_firsts in results:
            if chunk_firsts[idx] is not None:
                first = chunk_firsts[idx]
                break
        reports.append(
            VerificationReport(
                identity=identity,
                lo=0,
                hi=n_max,
                checked=n_max + 1,
                passed=first is None,
                first_counterexample=first,
            )
        )
    return reports


def run_suite(suite, n_max, jobs=1):
    """Reports for every identity in the suite, in a fixed order."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if n_max < 0:
        raise ValueError(f"expected a nonnegative bound, got {n_max}")
    families = {
        "relations": ("relations",),
        "identities": ("identities",),
        "all": ("relations", "identities", "composition"),
    }[suite]
    reports = []
    for family in families:
        reports.extend(_run_family(family, n_max, jobs))
    return reports
