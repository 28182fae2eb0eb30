from dataclasses import dataclass

from twyang.enums.base import ComatrixMethod, MinorMethod


@dataclass(slots=True)
class FamilyConfig:
    minor_method: MinorMethod | None = None
    comatrix_method: ComatrixMethod | None = None
    cache_entries: bool | None = None
