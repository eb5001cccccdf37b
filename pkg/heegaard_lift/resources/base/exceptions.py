from enum import IntEnum


class ExitStatus(IntEnum):
    OK = 0
    NEGATIVE = 1
    INPUT_ERROR = 2
    INCONCLUSIVE = 3


class HeegaardLiftError(Exception):
    """Base error; carries the exit status the CLI reports."""

    status_code: ExitStatus = ExitStatus.INPUT_ERROR

    def __init__(self, detail: str, status_code: ExitStatus | None = None):
        super().__init__(detail)
        self.detail = detail
        if status_code is not None:
            self.status_code = status_code


class BasisError(HeegaardLiftError):
    pass


class WordParseError(HeegaardLiftError):
    def __init__(self, detail: str, position: int | None = None):
        if position is not None:
            detail = f'{detail} (at position {position})'
        super().__init__(detail)
        self.position = position


class DiagramError(HeegaardLiftError):
    pass


class WhiteheadMoveError(HeegaardLiftError):
    pass


class CoverError(HeegaardLiftError):
    pass


class PretzelParamsError(HeegaardLiftError):
    pass


class PreconditionError(HeegaardLiftError):
    pass


class StageError(HeegaardLiftError):
    """A pipeline stage failed; ``stage`` names it."""

    def __init__(self, stage: str, cause: Exception):
        detail = getattr(cause, 'detail', None) or str(cause)
        super().__init__(f'stage {stage!r} failed: {detail}')
        self.stage = stage
        self.cause = cause
        if isinstance(cause, HeegaardLiftError):
            self.status_code = cause.status_code
