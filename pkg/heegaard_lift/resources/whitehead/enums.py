from enum import Enum


class Verdict(str, Enum):
    SEPARABLE = 'SEPARABLE'
    DISKBUSTING = 'DISKBUSTING'


class FastPath(str, Enum):
    DISCONNECTED = 'disconnected'
    VALENCE_ONE = 'valence_one'
    BRIDGE = 'bridge'
