# exceptions.py
"""Exception hierarchy for the symmetry app.

Bad arguments also derive from ``ValueError`` so plain callers can catch
them the usual way; resource exhaustion does not.
"""


class SymmetryError(Exception):
    """Root of every error raised by the symmetry app."""


class SizeMismatchError(SymmetryError, ValueError):
    pass


class InvalidPermutationError(SymmetryError, ValueError):
    pass


class DomainMismatchError(SymmetryError, ValueError):
    """A vertex permutation was applied to a group or graph it does not act on."""


class InvalidSpecError(SymmetryError, ValueError):
    pass


class NullGraphError(InvalidSpecError):
    pass


class LabelNotFoundError(SymmetryError, ValueError):
    pass


class InvalidGraphError(SymmetryError, ValueError):
    pass


class GraphFormatError(SymmetryError, ValueError):
    pass


class DisconnectedGraphError(SymmetryError, ValueError):
    pass


class NotAnAutomorphismError(SymmetryError, ValueError):
    pass


class NotAnInvolutionError(SymmetryError, ValueError):
    pass


class MixedPartActionError(SymmetryError, ValueError):
    """An automorphism sent one part of a bipartition into both parts."""


class SizeCapExceededError(SymmetryError, ValueError):
    pass


class BudgetExceededError(SymmetryError):
    """The automorphism search visited more nodes than its budget allows."""

    def __init__(self, message, node_count=None):
        super().__init__(message)
        self.node_count = node_count
