import os
from dataclasses import dataclass

SIZE_LIMIT_ENV = 'TY_SIZE_LIMIT'
DEFAULT_SIZE_LIMIT = 10**6


def env_size_limit() -> int:
    raw = os.environ.get(SIZE_LIMIT_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_SIZE_LIMIT
    try:
        value = int(raw)
    except ValueError:
        msg = f'{SIZE_LIMIT_ENV} must be an integer, got {raw!r}.'
        raise ValueError(msg) from None
    if value < 1:
        msg = f'{SIZE_LIMIT_ENV} must be positive.'
        raise ValueError(msg)
    return value


@dataclass(slots=True)
class RepConfig:
    size_limit: int | None = None
    verify_brackets: bool | None = None
