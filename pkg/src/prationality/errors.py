"""Exception types shared across the engine.

Plain ValueError covers malformed domain input; the classes here exist where
callers need to branch on the failure mode.
"""


class SplittingUndetermined(Exception):
    """p may divide the index [O_K : Z[alpha]] and no basis certificate was
    supplied; prime splitting is refused rather than guessed."""


class PrecisionExhausted(Exception):
    """A p-adic valuation stayed undecided up to the precision cap."""


class InvariantViolation(Exception):
    """An internal consistency check failed (CLI exit code 2)."""
