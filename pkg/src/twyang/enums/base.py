from enum import StrEnum


class Case(StrEnum):
    ORTHOGONAL = 'o'
    SYMPLECTIC = 'sp'


class MinorMethod(StrEnum):
    AUTO = 'auto'
    CHAIN = 'chain'
    FORMULA = 'formula'


class ComatrixMethod(StrEnum):
    AUTO = 'auto'
    AUXILIARY = 'auxiliary'
    MINOR = 'minor'


class HwMethod(StrEnum):
    SYMBOLIC = 'symbolic'
    INTERPOLATE = 'interpolate'


class DrinfeldMethod(StrEnum):
    DIAGRAM = 'diagram'
    CLOSED_FORM = 'closed-form'
    ORACLE = 'oracle'
    ALL = 'all'


class PatternMode(StrEnum):
    COUNT = 'count'
    ENUMERATE = 'enumerate'
    LAMBDA0 = 'lambda0'


class Suite(StrEnum):
    QUATERNARY = 'quaternary'
    SYMMETRY = 'symmetry'
    SYLVESTER = 'sylvester'
    MINORS = 'minors'
    SKEW = 'skew'
    IRREDUCIBLE = 'irreducible'
    OMEGA = 'omega'
    STRUCTURAL = 'structural'
    DUAL = 'dual'


class FamilyKind(StrEnum):
    EVALUATION = 'evaluation'
    SHARP = 'sharp'
    DUAL = 'dual'
    VARPI = 'varpi'
    SUB = 'sub'
    CORHO = 'corho'
