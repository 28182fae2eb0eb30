from twyang.schemas.base import (
    BaseReportSchema,
    CheckResult,
    DiagramSchema,
    DrinfeldSchema,
    PatternSchema,
    PolySchema,
    RatFuncSchema,
    RowSchema,
    RunReport,
    dump_all,
)

__all__ = [
    'BaseReportSchema',
    'CheckResult',
    'DiagramSchema',
    'DrinfeldSchema',
    'PatternSchema',
    'PolySchema',
    'RatFuncSchema',
    'RowSchema',
    'RunReport',
    'dump_all',
]
