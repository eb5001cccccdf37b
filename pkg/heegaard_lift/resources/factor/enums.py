from enum import Enum


class BindingStatus(str, Enum):
    DOES_NOT_BIND = 'DoesNotBind'
    BINDS = 'Binds'
    UNKNOWN = 'Unknown'


class BindingCriterion(str, Enum):
    SUPPORT_DEFICIENCY = 'support_deficiency'
    DISKBUSTING_ON_SUPPORT = 'diskbusting_on_support'
    SEPARABLE_ON_SUPPORT = 'separable_on_support'
    DISJOINT_PARTS = 'disjoint_parts'
    SEARCH_EXHAUSTED = 'search_exhausted'
    SUPPORT_OMITS = 'support_omits'
    DISCONNECTED = 'disconnected'
    BRIDGE = 'bridge'
    VALENCE_ONE = 'valence_one'


class MhaStatus(str, Enum):
    PASS = 'Pass'
    FAIL = 'Fail'
    INCONCLUSIVE = 'Inconclusive'
