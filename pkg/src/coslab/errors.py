"""Exception hierarchy for coslab."""


class CoslabError(Exception):
    """Base class for all library errors."""


class IdenticallyZero(CoslabError, ValueError):
    """Raised when an operation needs a polynomial that is not the zero polynomial."""


class InvalidP(CoslabError, ValueError):
    pass


class InconsistentPartition(CoslabError, ValueError):
    pass


class ToleranceUnachievable(CoslabError, ValueError):
    pass


class RangeTooShort(CoslabError, ValueError):
    pass


class NoUnityRoots(CoslabError, ValueError):
    pass


class DecompositionFailed(CoslabError, ValueError):
    """Cyclotomic roots were found but the sequence is not a sum of their powers."""


class EpsilonSearchFailed(CoslabError, RuntimeError):
    pass


class NoStructureFound(CoslabError, RuntimeError):
    pass


class BoxTooSmall(CoslabError, ValueError):
    pass


class PersistError(CoslabError, OSError):
    """I/O failure while reading or writing a run file; carries path and line context."""

    def __init__(self, message, path=None, line=None):
        where = ""
        if path is not None:
            where = f"{path}"
            if line is not None:
                where += f":{line}"
            where += ": "
        super().__init__(where + message)
        self.path = path
        self.line = line
