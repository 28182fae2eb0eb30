from twyang.cli.commands import (
    CommandOutput,
    cmd_diagram,
    cmd_drinfeld,
    cmd_error,
    cmd_patterns,
    cmd_verify,
)
from twyang.cli.suites import SUITES, SuiteParams, run_suite

__all__ = [
    'SUITES',
    'CommandOutput',
    'SuiteParams',
    'cmd_diagram',
    'cmd_drinfeld',
    'cmd_error',
    'cmd_patterns',
    'cmd_verify',
    'run_suite',
]
