from enum import Enum


class ReductionMode(str, Enum):
    FREE = 'free'
    CYCLIC = 'cyclic'


class WordOp(str, Enum):
    CONCAT = 'concat'
    INVERT = 'invert'
    CONJUGATE = 'conjugate'
    POWER = 'power'
