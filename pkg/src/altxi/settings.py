"""Configuration and result containers threaded through every evaluator."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

METHODS = (
    "series",
    "difference",
    "continued_fraction",
    "quadrature",
    "quartet",
    "reflection",
)


@dataclass(frozen=True)
class EvalSettings:
    rel_tol: float = 1e-14
    max_terms: int = 10_000
    quad_points: int = 2000

    def __post_init__(self):
        if not (0.0 < self.rel_tol <= 1e-3):
            raise ValueError(f"rel_tol must lie in (0, 1e-3], got {self.rel_tol!r}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms!r}")
        if self.quad_points < 1:
            raise ValueError(f"quad_points must be >= 1, got {self.quad_points!r}")

    def with_(self, **changes) -> "EvalSettings":
        return replace(self, **changes)


DEFAULT_SETTINGS = EvalSettings()


@dataclass(frozen=True)
class EvalResult:
    """Value plus bookkeeping returned by every evaluator.

    ``est_error`` is an absolute error estimate for ``value``.
    """

    value: complex
    est_error: float
    terms_used: int
    method: str

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")
        if not self.est_error >= 0.0:
            raise ValueError("est_error must be non-negative")
        v = complex(self.value)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ArithmeticError(f"non-finite value {v!r}")
        object.__setattr__(self, "value", v)

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag(self) -> float:
        return self.value.imag

    def __complex__(self) -> complex:
        return self.value
