"""
QThermo-Py 先验数据模型
"""

from typing import List, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..state_space import COORDINATE_NAMES, BlochPoint

SAMPLE_RADIUS_ATOL = 1e-12


class StructureFamily(BaseModel):
    """结构族：n=1 为复情形（3 维球），n=2 为四元数情形（5 维球）"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: Literal[1, 2] = Field(..., description="结构族指数")

    @classmethod
    def of(cls, n: int) -> "StructureFamily":
        return cls(n=n)

    @property
    def d(self) -> int:
        return 2 * self.n + 1

    @property
    def coordinate_names(self) -> tuple:
        return COORDINATE_NAMES[self.d]


class SampleBatch(BaseModel):
    """先验样本批次，由 (family, count, seed) 唯一确定"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    family: StructureFamily = Field(..., description="结构族")
    coords: np.ndarray = Field(..., description="count × d 坐标数组")
    seed: int = Field(..., description="PCG64 种子", ge=0, lt=2**64)

    @field_validator("coords", mode="before")
    @classmethod
    def _as_array(cls, value) -> np.ndarray:
        array = np.array(value, dtype=float)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def _check_points(self) -> "SampleBatch":
        if self.coords.ndim != 2 or self.coords.shape[1] != self.family.d or self.coords.shape[0] < 1:
            raise ValueError(f"expected a (count, {self.family.d}) array, got {self.coords.shape}")
        if float(self.radii().max()) > 1.0 + SAMPLE_RADIUS_ATOL:
            raise ValueError("sample batch contains a point outside the unit ball")
        return self

    @property
    def count(self) -> int:
        return self.coords.shape[0]

    @property
    def points(self) -> List[BlochPoint]:
        return [BlochPoint(coords=tuple(row)) for row in self.coords.tolist()]

    def radii(self) -> np.ndarray:
        return np.linalg.norm(self.coords, axis=1)

    def coordinate(self, name: str) -> np.ndarray:
        return self.coords[:, self.family.coordinate_names.index(name)]


class NormalizationReport(BaseModel):
    """先验总质量（径向约化）"""

    n: int = Field(..., description="结构族指数")
    mass: float = Field(..., description="归一化先验的总质量，应为 1")
    err_est: float = Field(..., description="积分误差估计")
    unnormalized_mass: float = Field(..., description="未归一化密度 1/√(1-r²) 的总质量")


class MarginalReport(BaseModel):
    """沿最后一个坐标积分后的边缘密度检查"""

    n: int = Field(..., description="结构族指数")
    expected: float = Field(..., description="期望常数 1/Vol(B^{d-1})")
    sub_points: List[List[float]] = Field(..., description="(d-1) 维求值点")
    values: List[float] = Field(..., description="各点的边缘密度")
    max_deviation: float = Field(..., description="与期望常数的最大偏差")
