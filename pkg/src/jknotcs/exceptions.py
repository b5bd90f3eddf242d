"""Exception hierarchy shared by the library and the command line."""


class JKnotError(Exception):
    """Base class for every error raised by :mod:`jknotcs`."""


class DomainError(JKnotError, ValueError):
    """Inputs outside the mathematical domain (e.g. a non-hyperbolic orbifold)."""


class NumericalError(JKnotError, RuntimeError):
    """A numerical procedure failed to converge or lost its branch."""
