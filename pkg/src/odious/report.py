"""Pass/fail reports for range verifications."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one identity over an index range.

    `checked` counts the instances actually compared (coverage may exclude
    indices the identity does not speak about); `counts` is an optional
    per-category breakdown.
    """

    identity: str
    lo: int
    hi: int
    checked: int
    passed: bool
    first_counterexample: int | None = None
    counts: dict[str, int] = field(default_factory=dict)

    def merge(self, other):
        """Combine with a report for another range of the same identity.

        Associative and order-independent: the merged first counterexample is
        the minimal one.
        """
        if other.identity != self.identity:
            raise ValueError(f"cannot merge {self.identity!r} with {other.identity!r}")
        firsts = [
            f
            for f in (self.first_counterexample, other.first_counterexample)
            if f is not None
        ]
        counts = dict(self.counts)
        for key, val in other.counts.items():
            counts[key] = counts.get(key, 0) + val
        return VerificationReport(
            identity=self.identity,
            lo=min(self.lo, other.lo),
            hi=max(self.hi, other.hi),
            checked=self.checked + other.checked,
            passed=self.passed and other.passed,
            first_counterexample=min(firsts) if firsts else None,
            counts=counts,
        )
