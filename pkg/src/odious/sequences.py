"""Closed forms for the base-d digit-class sequences.

The class-(j, d) sequence lists, in increasing order, the integers whose
base-d digit sum is congruent to j mod d. Its n-th term (0-indexed) is
d*n + ((j - t(n, d)) mod d); everything here builds on that identity.
"""

from dataclasses import dataclass

from . import digits
from ._backend import kernels

INT64_MAX = digits.INT64_MAX


@dataclass(frozen=True)
class SequenceSpec:
    """Residue class j of base-d digit sums, identifying one sequence."""

    j: int
    d: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"radix must be >= 2, got {self.d}")
        if not 0 <= self.j < self.d:
            raise ValueError(f"class {self.j} outside [0, {self.d - 1}]")

    @classmethod
    def coerce(cls, spec):
        """Accept a SequenceSpec or a (j, d) pair."""
        if isinstance(spec, cls):
            return spec
        j, d = spec
        return cls(j, d)


ODIOUS = SequenceSpec(1, 2)
EVIL = SequenceSpec(0, 2)


def term(spec, n):
    """n-th smallest integer k with t(k, d) = j, by closed form."""
    spec = SequenceSpec.coerce(spec)
    value = spec.d * n + (spec.j - digits.t(n, spec.d)) % spec.d
    if value > INT64_MAX:
        raise OverflowError(f"term {n} of class ({spec.j}, {spec.d}) exceeds 2**63 - 1")
    return value


def odious(n):
    """n-th integer with odd binary digit sum."""
    return term(ODIOUS, n)


def evil(n):
    """n-th integer with even binary digit sum."""
    return term(EVIL, n)


def is_member(k, spec):
    """Whether k belongs to the class sequence, i.e. t(k, d) = j."""
    spec = SequenceSpec.coerce(spec)
    return digits.t(k, spec.d) == spec.j


def rank(k, spec):
    """Index of the member k, which is always k // d.

    Raises ValueError naming k's actual class when k is not a member.
    """
    spec = SequenceSpec.coerce(spec)
    actual = digits.t(k, spec.d)
    if actual != spec.j:
        raise ValueError(f"{k} is in class {actual} (mod {spec.d}), not {spec.j}")
    return k // spec.d


def compose(outer_j, inner_i, d, n):
    """Closed form for the nested term: d * inner_term + ((j - i) mod d).

    Equals term((j, d), term((i, d), n)) because every inner term lies in
    class i by construction.
    """
    outer = SequenceSpec(outer_j, d)
    inner_value = term(SequenceSpec(inner_i, d), n)
    value = d * inner_value + (outer.j - inner_i) % d
    if value > INT64_MAX:
        raise OverflowError(
            f"composition of classes ({outer_j}, {inner_i}) at {n} exceeds 2**63 - 1"
        )
    return value


def term_range(spec, count, start=0):
    """Terms start .. start+count-1 as an array('q'); bulk path for rendering and sweeps."""
    spec = SequenceSpec.coerce(spec)
    return kernels.term_range(spec.j, spec.d, start, count)
