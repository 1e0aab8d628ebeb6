"""Exception hierarchy shared across the library and the session service."""

from __future__ import annotations


class FcaxError(Exception):
    """Base class for all library errors."""


class InputError(FcaxError):
    """Malformed or out-of-contract input (unknown names, bad shapes)."""


class UniverseMismatchError(InputError):
    """Two values built over different attribute universes were combined."""


class ParseError(InputError):
    """A file could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class RejectedAnswerError(FcaxError):
    """An expert answer does not refute / match the pending question.

    ``reason`` is a stable code: ``overlap``, ``premise-not-covered``,
    ``conclusion-not-contradicted``, ``not-full-description``,
    ``conflicts-with-confirmed``, ``no-pending-question`` or ``stale``.
    """

    def __init__(self, reason: str, detail: str):
        super().__init__(f"{reason}: {detail}")
        self.reason = reason
        self.detail = detail


class ConsistencyError(FcaxError):
    """The expert violated its contract: stored counterexamples clash with
    confirmed knowledge. Carries a diagnostic of the offending description."""


class ExplorationAborted(FcaxError):
    """The interaction cap was hit before the exploration converged."""

    def __init__(self, interactions: int, cap: int):
        super().__init__(
            f"exploration aborted after {interactions} expert interactions (cap {cap})"
        )
        self.interactions = interactions
        self.cap = cap
