"""Exception types shared across the library.

Every failure mode of the public API maps to one of these classes; the CLI
translates a subset of them to stable exit codes (see ``motivic.cli``).
"""


class MotivicError(Exception):
    """Base class for all library errors."""


class RegistryError(MotivicError):
    """Malformed registry declaration (duplicate name, unknown space, ...)."""


class SpaceMismatch(MotivicError):
    """Operands live over different base spaces."""


class OdotUndecidable(MotivicError):
    """Convolution product left the decidable fragment.

    Raised when both factors of a term-level product carry opaque monodromy
    of order >= 2; the product of two such classes is a Fermat-curve quotient
    that our generator set cannot express, so we fail loudly instead of
    guessing.
    """


class DotUndefined(MotivicError):
    """Fibre product requested with monodromy on both sides."""


class UnregisteredProduct(MotivicError):
    """External product requested but the product space was never declared."""


class MissingTransport(MotivicError):
    """A morphism table has no entry for a symbol or bundle generator."""


class NoUnderlyingClass(MotivicError):
    """Monodromy-forgetting hit a symbol without a declared underlying class."""


class ValidationFailed(MotivicError):
    """Input data failed validation; carries the diagnostic list."""

    def __init__(self, diagnostics):
        super().__init__("; ".join(diagnostics))
        self.diagnostics = list(diagnostics)


class MissingRestriction(MotivicError):
    """No restriction table entry for a stratum, critical value or point."""


class UnsupportedShape(MotivicError):
    """Arc-space oracle asked for a function outside the monomial fragment."""


class UnknownDatum(MotivicError):
    """Square-root datum was never registered."""


class ZeroWeight(MotivicError):
    """Torus weight list contains a zero entry."""


class OrientationMissing(MotivicError):
    """Atlas has no orientation but an oriented operation was requested."""


class DescentFailure(MotivicError):
    """Gluing failed on an overlap; carries both normal forms side by side."""

    def __init__(self, overlap, left, right, detail=""):
        msg = f"descent failure on overlap {overlap}: {left!r} != {right!r}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.overlap = overlap
        self.left = left
        self.right = right
        self.detail = detail


class MissingScissorTable(MotivicError):
    """Pushforward to the point requested without the needed scissor entry."""
