"""Exception hierarchy shared by all homlie modules."""

from __future__ import annotations


class HomLieError(Exception):
    """Base class for every error raised by homlie."""


class DimensionError(HomLieError, ValueError):
    """Shapes or ambient dimensions do not match."""


class AxiomError(HomLieError):
    """An input object violates the axioms it is required to satisfy.

    ``report`` carries the :class:`~homlie.algebra.ValidationReport` with
    the offending indices when one is available.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class NotIdealError(HomLieError):
    """A subspace was required to be a Hom-ideal but is not."""


class NotPerfectError(HomLieError):
    """The algebra is required to satisfy L = [L, L]."""


class ExtensionError(HomLieError):
    """A morphism cannot be turned into the requested extension."""


class LiftError(HomLieError):
    """A lift or factorisation is not well defined.

    ``witness`` holds the vector on which well-definedness fails.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
