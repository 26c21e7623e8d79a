"""Functional equations that pin down the odious/evil pair, and constructions from them.

Three routes to the same pair of sequences: checking the eight composition
relations directly, rebuilding the pair greedily from parity constraints or
from the forced +-1 offsets, and an exhaustive search showing that (up to a
swap) nothing else satisfies the partition equations on a finite prefix.
"""

from dataclasses import dataclass

from . import digits
from .report import VerificationReport
from .sequences import evil, odious

RELATION_IDS = ("(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)", "(vii)", "(viii)")

MAX_SEARCH_PREFIX = 24


class ConstructionError(RuntimeError):
    """A forced construction step found its constraints unsatisfiable (bug signal)."""


def _relation_failures(lo, hi):
    """First failing n in [lo, hi] for each of the eight relations, or None."""
    firsts = [None] * 8
    for n in range(lo, hi + 1):
        a = odious(n)
        b = evil(n)
        aa = odious(a)
        ab = odious(b)
        ba = evil(a)
        bb = evil(b)
        tn = digits.t(n, 2)
        checks = (
            aa == 2 * a,
            bb == 2 * b,
            ab == 2 * b + 1,
            ba == 2 * a + 1,
            aa == ba - 1,
            bb == ab - 1,
            a - b == 1 - 2 * tn,
            ab - ba == 4 * tn - 2,
        )
        for idx, ok in enumerate(checks):
            if not ok and firsts[idx] is None:
                firsts[idx] = n
    return firsts


def verify_relations(n_max):
    """Check the eight composition/offset relations for n = 0 .. n_max."""
    if n_max < 0:
        raise ValueError(f"expected a nonnegative bound, got {n_max}")
    firsts = _relation_failures(0, n_max)
    return [
        VerificationReport(
            identity=rid,
            lo=0,
            hi=n_max,
            checked=n_max + 1,
            passed=first is None,
            first_counterexample=first,
        )
        for rid, first in zip(RELATION_IDS, firsts)
    ]


class ConstructionState:
    """Two disjoint increasing prefixes plus the bookkeeping the step rules read.

    `membership` maps each assigned value to the side ("x" or "y") holding it.
    A step extends both prefixes by one index n; the rules need the membership
    of n itself, which is always a previously assigned value.
    """

    __slots__ = ("x", "y", "used", "membership", "_frontier")

    def __init__(self):
        self.x = [1]
        self.y = [0]
        self.used = {0, 1}
        self.membership = {1: "x", 0: "y"}
        self._frontier = 2

    def _next_two_unused(self):
        lo = self._frontier
        while lo in self.used:
            lo += 1
        hi = lo + 1
        while hi in self.used:
            hi += 1
        self._frontier = lo
        return lo, hi

    def _assign(self, to_x, to_y):
        self.x.append(to_x)
        self.y.append(to_y)
        self.used.add(to_x)
        self.used.add(to_y)
        self.membership[to_x] = "x"
        self.membership[to_y] = "y"

    def step_parity(self):
        """Extend by one index; the side owning the index takes the even candidate.

        Realizes the greedy rules "x(x(n)) and y(y(n)) even, x(y(n)) and
        y(x(n)) odd" on the two smallest unused integers.
        """
        n = len(self.x)
        side = self.membership.get(n)
        if side is None:
            raise ConstructionError(f"membership of index {n} is not yet known")
        u, v = self._next_two_unused()
        if (u + v) % 2 == 0:
            raise ConstructionError(f"candidates {u} and {v} do not split by parity")
        even, odd = (u, v) if u % 2 == 0 else (v, u)
        if side == "x":
            self._assign(even, odd)
        else:
            self._assign(odd, even)

    def step_offset(self):
        """Extend by one index; the side owning the index sits one below the other.

        Realizes the forced rules "x(x(n)) = y(x(n)) - 1 and
        y(y(n)) = x(y(n)) - 1": the two smallest unused integers must be
        consecutive, and the owning side takes the smaller.
        """
        n = len(self.x)
        side = self.membership.get(n)
        if side is None:
            raise ConstructionError(f"membership of index {n} is not yet known")
        u, v = self._next_two_unused()
        if v != u + 1:
            raise ConstructionError(f"candidates {u} and {v} are not consecutive")
        if side == "x":
            self._assign(u, v)
        else:
            self._assign(v, u)


def _drive(count, step):
    if count < 0:
        raise ValueError(f"expected a nonnegative length, got {count}")
    if count == 0:
        return (), ()
    state = ConstructionState()
    while len(state.x) < count:
        step(state)
    return tuple(state.x), tuple(state.y)


def construct_parity(count):
    """Prefixes of length `count` built by the parity rules; equals (odious, evil)."""
    return _drive(count, ConstructionState.step_parity)


def construct_offset(count):
    """Prefixes of length `count` built by the offset rules; equals (odious, evil)."""
    return _drive(count, ConstructionState.step_offset)


@dataclass(frozen=True)
class SolutionSet:
    """All consistent prefix pairs found by the search, ordered by x prefix."""

    solutions: tuple


def search_partition_solutions(count):
    """Every pair of disjoint increasing length-`count` sequences that covers
    0 .. 2*count-1 and violates none of the three pinning relations

        x(x(n)) = 2*x(n),  y(y(n)) = 2*y(n),  |x(n) - y(n)| = 1

    checkable inside the prefix. Backtracks over the side of each integer in
    turn; a relation instance is enforced as soon as every index it touches
    lies inside the prefix. The expected outcome is exactly the two
    swap-related (odious, evil) prefixes, but nothing here assumes that.
    """
    if count < 1:
        raise ValueError(f"prefix length must be >= 1, got {count}")
    if count > MAX_SEARCH_PREFIX:
        raise ValueError(
            f"prefix length {count} above the search budget {MAX_SEARCH_PREFIX}"
        )
    total = 2 * count
    x, y = [], []
    pending_x, pending_y = {}, {}
    found = []

    def try_place(seq, other, pending, v):
        # Returns None on a violated instance, else whether a pending slot
        # constraint was registered (the rollback token).
        idx = len(seq)
        want = pending.get(idx)
        if want is not None and want != v:
            return None
        if idx < len(other) and abs(v - other[idx]) != 1:
            return None
        added = False
        if v < count:
            # instance seq(seq(idx)) = 2*seq(idx): index v must hold 2*v
            if v == idx:
                if v != 2 * v:
                    return None
            elif v not in pending:
                pending[v] = 2 * v
                added = True
        seq.append(v)
        return added

    def dfs(v):
        if v == total:
            if len(x) == count:
                found.append((tuple(x), tuple(y)))
            return
        remaining = total - v
        for seq, other, pending in ((x, y, pending_x), (y, x, pending_y)):
            if len(seq) >= count:
                continue
            if count - len(other) > remaining - 1:
                continue
            added = try_place(seq, other, pending, v)
            if added is not None:
                dfs(v + 1)
                seq.pop()
                if added:
                    del pending[v]

    dfs(0)
    return SolutionSet(tuple(sorted(found)))
