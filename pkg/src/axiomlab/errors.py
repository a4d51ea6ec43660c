"""Exception types carrying machine-readable codes for CLI error reporting."""

from __future__ import annotations


class AxiomlabError(Exception):
    """Base for all domain errors; ``code`` is stable and machine-readable."""

    code = "error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

    def to_dict(self) -> dict:
        return {"code": self.code, "message": str(self), **self.details}


class UnknownIdError(AxiomlabError):
    """An id does not belong to the referenced space.

    ``kind`` is one of "profile", "outcome", "rule" and specializes the code.
    """

    def __init__(self, kind: str, value, message: str | None = None):
        self.code = f"unknown-{kind}"
        super().__init__(message or f"unknown {kind} id: {value!r}", value=repr(value))


class DomainMismatchError(AxiomlabError):
    code = "domain-mismatch"


class CapExceededError(AxiomlabError):
    """An enumeration would produce more objects than the configured cap.

    Carries the exact object count; never silently truncates.
    """

    code = "cap-exceeded"

    def __init__(self, count: int, cap: int, what: str = "objects"):
        self.count = count
        self.cap = cap
        label = f"{count}" if count <= 10**18 else f"{count} (astronomical)"
        super().__init__(
            f"enumeration of {label} {what} exceeds cap {cap}",
            count=str(count),
            cap=str(cap),
        )


class InvalidDecisionError(AxiomlabError):
    code = "invalid-decision"


class InvalidParameterError(AxiomlabError):
    code = "invalid-parameter"


class NotForcingError(AxiomlabError):
    code = "not-forcing"


class ImpliedRuleUnavailableError(AxiomlabError):
    """The forced table exists but is not a member of the rule universe."""

    code = "implied-rule-outside-universe"


class InconsistentStatementError(AxiomlabError):
    code = "inconsistent-statement"


class UnclassifiedAxiomError(AxiomlabError):
    code = "unclassified-axiom"


class NondeterministicAxiomError(AxiomlabError):
    code = "nondeterministic-axiom"


class WitnessVerificationError(AxiomlabError):
    code = "witness-verification-failure"

    def __init__(self, message: str, transcript=()):
        super().__init__(message)
        self.transcript = tuple(transcript)


class FormatError(AxiomlabError):
    code = "bad-file"
