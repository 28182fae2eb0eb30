from twyang.enums.base import (
    Case,
    ComatrixMethod,
    DrinfeldMethod,
    FamilyKind,
    HwMethod,
    MinorMethod,
    PatternMode,
    Suite,
)

__all__ = [
    'Case',
    'ComatrixMethod',
    'DrinfeldMethod',
    'FamilyKind',
    'HwMethod',
    'MinorMethod',
    'PatternMode',
    'Suite',
]
