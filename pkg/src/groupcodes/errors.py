"""Exception types shared across the package."""


class GroupCodesError(Exception):
    """Base class for all package-specific errors."""


class CapError(GroupCodesError):
    """A desk-scale enumeration or size cap was exceeded."""


class VerificationFailure(GroupCodesError):
    """A certifier claim or replay check did not hold.

    Carries enough context for the CLI to print a structured failure
    report: the witness kind, the name of the failing claim, the claims
    already verified, and an optional culprit description.
    """

    def __init__(self, kind, claim, message, claims=None, internal=False):
        self.kind = kind
        self.claim = claim
        self.claims = list(claims or [])
        self.internal = internal
        prefix = "internal invariant violation" if internal else "verification failed"
        super().__init__(f"{prefix}: [{kind}] claim '{claim}': {message}")

    def report(self):
        claims = self.claims + [{"holds": False, "name": self.claim}]
        return {
            "claims": claims,
            "error": str(self),
            "kind": self.kind,
            "ok": False,
        }
