from dataclasses import dataclass

from twyang.enums.base import HwMethod


@dataclass(slots=True)
class SkewConfig:
    hw_method: HwMethod | None = None
    verify_samples: int | None = None
    irreducibility_batch: int | None = None
