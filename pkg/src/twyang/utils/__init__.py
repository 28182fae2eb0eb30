from twyang.utils.validation import (
    as_highest_weight,
    check_highest_weight,
    check_symplectic_weight,
    from_partition,
    parse_weight,
)

__all__ = [
    'as_highest_weight',
    'check_highest_weight',
    'check_symplectic_weight',
    'from_partition',
    'parse_weight',
]
