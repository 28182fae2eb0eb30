from twyang.exceptions.common import (
    EmptySkewSpace,
    InconsistentSamples,
    InfiniteIntersection,
    InvalidIndex,
    NoHighestVector,
    NonLinearFactor,
    NotEigenvector,
    NotOneDimensional,
    PoleError,
    RelationCheckFailed,
    ShapeMismatch,
    SizeLimitExceeded,
    SubspaceNotInvariant,
    UnpairableRoots,
)

__all__ = [
    'EmptySkewSpace',
    'InconsistentSamples',
    'InfiniteIntersection',
    'InvalidIndex',
    'NoHighestVector',
    'NonLinearFactor',
    'NotEigenvector',
    'NotOneDimensional',
    'PoleError',
    'RelationCheckFailed',
    'ShapeMismatch',
    'SizeLimitExceeded',
    'SubspaceNotInvariant',
    'UnpairableRoots',
]
