"""Exception hierarchy shared by every ringlab module."""


class RinglabError(ValueError):
    pass


class DegreeError(RinglabError):
    """Permutations or rows of different degrees were combined."""


class PointError(RinglabError):
    pass


class CycleError(RinglabError):
    pass


class NotationSyntaxError(RinglabError):
    pass


class RowError(RinglabError):
    pass


class FormatError(RinglabError):
    """A method or composition file violates its schema.

    ``path`` names the offending field, e.g. ``transitions[3]``.
    """

    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class StageError(RinglabError):
    pass


class ResourceError(RinglabError):
    pass


class CompositionError(RinglabError):
    pass


class ClosureError(CompositionError):
    """A lead sequence does not come back to rounds."""

    def __init__(self, message: str, residual=None):
        self.residual = residual
        super().__init__(message)


class MembershipError(RinglabError):
    pass


class GenerationError(RinglabError):
    pass


class WordError(RinglabError):
    pass


class LabelError(RinglabError):
    pass


class SchemeError(RinglabError):
    pass
