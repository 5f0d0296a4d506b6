from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import BadParams


@dataclass(frozen=True)
class ModelParams:
    """Coefficients of the cubic potential ``a*x**3 - b*x`` and the family parameter ``g``."""

    a: float = 2.0 / 3.0
    b: float = 1.0
    g: float = 1.0

    def __post_init__(self):
        if not self.a > 0:
            raise BadParams(f"a must be positive, got {self.a}")

    def with_g(self, g: float) -> "ModelParams":
        return replace(self, g=float(g))

    def require_positive_g(self) -> None:
        if not self.g > 0:
            raise BadParams(f"g must be positive here, got {self.g}")
