"""
QThermo-Py Gibbs 数据模型
"""

import math
from enum import Enum
from typing import Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..core.limits import FISHER_MAX_ABS_BETA, POISSON_MAX_ABS_BETA


class GibbsParams(BaseModel):
    """(n, β)：结构族指数与逆温度"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: Literal[1, 2] = Field(..., description="结构族指数")
    beta: float = Field(
        ...,
        description="逆温度（无量纲）",
        ge=-POISSON_MAX_ABS_BETA,
        le=POISSON_MAX_ABS_BETA,
        allow_inf_nan=False,
    )

    @classmethod
    def of(cls, n: int, beta: float) -> "GibbsParams":
        return cls(n=n, beta=beta)

    def flipped(self) -> "GibbsParams":
        return GibbsParams(n=self.n, beta=-self.beta)


class ThermoQuantity(str, Enum):
    """β 的函数曲线"""

    MEAN = "mean"
    VARIANCE = "variance"
    RELATIVE_ENTROPY = "relative_entropy"
    FISHER = "fisher"
    JEFFREYS = "jeffreys"


class ThermoCurve(BaseModel):
    """某个量在 β 网格上的取值"""

    model_config = ConfigDict(frozen=True)

    quantity: ThermoQuantity = Field(..., description="物理量")
    n: Literal[1, 2] = Field(..., description="结构族指数")
    beta_grid: Tuple[float, ...] = Field(..., description="严格递增的 β 网格", min_length=1)
    values: Tuple[float, ...] = Field(..., description="对应取值")

    @field_validator("beta_grid")
    @classmethod
    def _check_grid(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        if any(b >= a for a, b in zip(value[1:], value[:-1])):
            raise ValueError("beta grid must be strictly increasing")
        return value

    @model_validator(mode="after")
    def _check_values(self) -> "ThermoCurve":
        if len(self.values) != len(self.beta_grid):
            raise ValueError(f"{len(self.values)} values for a grid of {len(self.beta_grid)} points")
        if not all(math.isfinite(v) for v in self.values):
            raise ValueError("curve values must be finite")
        return self

    def argmax(self) -> float:
        """取最大值处的 β"""
        index = max(range(len(self.values)), key=self.values.__getitem__)
        return self.beta_grid[index]

    def argmin(self) -> float:
        index = min(range(len(self.values)), key=self.values.__getitem__)
        return self.beta_grid[index]

    def maximum(self) -> float:
        return max(self.values)

    def minimum(self) -> float:
        return min(self.values)
