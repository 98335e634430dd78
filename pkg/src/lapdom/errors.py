"""Exception hierarchy shared by every lapdom module."""


class LapdomError(Exception):
    """Base class for all errors raised by lapdom."""


class TreeError(LapdomError, ValueError):
    """Input does not describe a valid tree."""


class NotATree(TreeError):
    """Edge set has a cycle, a self-loop, a duplicate, or is disconnected."""


class EdgeListSyntaxError(TreeError):
    """A line of an edge-list document could not be parsed."""


class IdOutOfRange(TreeError):
    """A vertex id lies outside 0..n-1."""


class InvalidPath(LapdomError, ValueError):
    """The given four vertices are not a clean path of length three."""


class BadParameter(LapdomError, ValueError):
    """A generator or algorithm parameter is outside its documented range."""


class EmptyInterval(LapdomError, ValueError):
    """An open interval (a, a) was requested."""


class PreconditionError(LapdomError, ValueError):
    """An algorithm was applied to a tree outside the class it handles."""


class TooSmall(PreconditionError):
    pass


class TooLarge(PreconditionError):
    pass


class NotInScriptT(PreconditionError):
    """The tree has two adjacent vertices of degree two."""

    def __init__(self, message, vertices=()):
        super().__init__(message)
        self.vertices = tuple(vertices)


class NotInScriptTk(PreconditionError):
    """Some deep vertex has degree below the requested k."""

    def __init__(self, message, vertices=()):
        super().__init__(message)
        self.vertices = tuple(vertices)


class NoConvergence(LapdomError, RuntimeError):
    """The Jacobi eigensolver hit its sweep limit."""
