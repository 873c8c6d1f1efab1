"""Exception hierarchy shared by all modules.

Every exception carries an ``exit_code`` so the command line front end can
map failures onto its documented status codes without a lookup table.
"""


class ConvexCutError(Exception):
    exit_code = 1


class GraphError(ConvexCutError, ValueError):
    """Input does not describe a valid graph (self-loop, disconnected, ...)."""


class NotBipartiteError(GraphError):
    def __init__(self, message, odd_cycle=None):
        super().__init__(message)
        self.odd_cycle = odd_cycle


class EmbeddingError(GraphError):
    """Rotation system is inconsistent, non-planar or has a bridge."""


class FileFormatError(ConvexCutError):
    exit_code = 2

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class VerificationError(ConvexCutError):
    """An emitted cut failed the independent convexity re-check."""

    exit_code = 3

    def __init__(self, message, cut=None):
        super().__init__(message)
        self.cut = cut


class ResourceLimitError(ConvexCutError):
    exit_code = 4


class AlternatingPathError(ConvexCutError):
    """The alternating path rules produced an inconsistent structure."""
