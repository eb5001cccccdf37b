from enum import Enum, IntEnum


class PretzelCase(IntEnum):
    """Sign pattern of (p, 3, q) after normalization."""

    POSITIVE = 1
    MIXED = 2
    NEGATIVE = 3


class OverallStatus(str, Enum):
    PASS = 'Pass'
    FAIL = 'Fail'
    INCONCLUSIVE = 'Inconclusive'


class PipelineStage(str, Enum):
    WORDS = 'words'
    HOMOLOGY = 'homology'
    COVER = 'cover'
    WEAK_REDUCIBILITY = 'weak_reducibility'
    HANDLEBODY_SIDE = 'handlebody_side'
    FILLING_DIAGRAM = 'filling_diagram'
    DIAGRAM_LIFT = 'diagram_lift'
    STABILIZATION = 'stabilization'
    DUAL_SIDE = 'dual_side'
