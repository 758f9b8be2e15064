"""Run configuration shared by the evaluation protocol and the CLI.

Every knob has a documented default and the effective values are echoed
into report.json, so a report is self-describing and two reports can be
checked for comparable settings.
"""

from dataclasses import dataclass, replace

from .fresa import DEFAULT_B_FACTOR, DEFAULT_DELTA, DivergenceMode, SmoothingConfig
from .segment import DEFAULT_WINDOW

DEFAULT_RATIO = 0.35
DEFAULT_OUT_DIR = "report"


@dataclass(frozen=True)
class RunConfig:
    ratio: float = DEFAULT_RATIO
    mode: DivergenceMode = DivergenceMode.JENSEN_SHANNON
    delta: float = DEFAULT_DELTA
    b_factor: float = DEFAULT_B_FACTOR
    su4_include_unigrams: bool = False
    stemming: bool = False
    window_w: int = DEFAULT_WINDOW
    out_dir: str = DEFAULT_OUT_DIR
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.ratio <= 1.0:
            raise ValueError(f"ratio must be in (0, 1], got {self.ratio}")
        if not self.delta > 0:
            raise ValueError(f"delta must be positive, got {self.delta}")
        if not self.b_factor >= 1:
            raise ValueError(f"b_factor must be >= 1, got {self.b_factor}")
        if self.window_w < 1:
            raise ValueError(f"window_w must be >= 1, got {self.window_w}")

    def smoothing(self) -> SmoothingConfig:
        return SmoothingConfig(delta=self.delta, b_factor=self.b_factor)

    def to_dict(self) -> dict:
        return {
            "ratio": self.ratio,
            "mode": self.mode.value,
            "delta": self.delta,
            "b_factor": self.b_factor,
            "su4_include_unigrams": self.su4_include_unigrams,
            "stemming": self.stemming,
            "window_w": self.window_w,
            "out_dir": self.out_dir,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "RunConfig":
        known = {f: raw[f] for f in cls.__dataclass_fields__ if f in raw}
        unknown = set(raw) - set(known)
        if unknown:
            raise ValueError(f"unknown config fields: {sorted(unknown)}")
        if "mode" in known:
            known["mode"] = DivergenceMode(known["mode"])
        return cls(**known)

    def with_overrides(self, **fields) -> "RunConfig":
        return replace(self, **fields)
