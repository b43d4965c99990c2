"""
QThermo-Py QFI 数据模型
"""

from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..state_space import BlochPoint

SYMMETRY_ATOL = 1e-10


class QFIMatrix(BaseModel):
    """量子 Fisher 信息矩阵（实对称，d=3 或 d=5）"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    entries: np.ndarray = Field(..., description="实对称矩阵")
    at: BlochPoint = Field(..., description="求值点")

    @field_validator("entries", mode="before")
    @classmethod
    def _as_real(cls, value) -> np.ndarray:
        array = np.array(value, dtype=float)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def _check_shape(self) -> "QFIMatrix":
        d = self.at.dim
        if self.entries.shape != (d, d):
            raise ValueError(f"QFI matrix at a {d}-dimensional point must be {d}x{d}, got {self.entries.shape}")
        asymmetry = float(np.max(np.abs(self.entries - self.entries.T)))
        if asymmetry > SYMMETRY_ATOL:
            raise ValueError(f"QFI matrix is not symmetric (max deviation {asymmetry:.3e})")
        return self

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def determinant(self) -> float:
        return float(np.linalg.det(self.entries))


class QFIComparison(BaseModel):
    """某一点上闭式与数值 QFI 的对照"""

    model_config = ConfigDict(frozen=True)

    point: BlochPoint = Field(..., description="求值点")
    closed_form: QFIMatrix = Field(..., description="闭式 QFI")
    numeric: QFIMatrix = Field(..., description="SLD 数值 QFI")
    max_deviation: float = Field(..., description="逐元素最大偏差")
    det_closed_form: float = Field(..., description="闭式行列式 1/(1-r²)")
    det_numeric: float = Field(..., description="数值 QFI 的行列式")
    density_determinant: float = Field(..., description="密度矩阵行列式")
    inverse_product: float = Field(
        ...,
        description="d=3 时 det(QFI)·det(ρ)，应为 1/4；d=5 时 det(QFI)·√det(ρ)，应为 1/16",
    )

    @property
    def expected_inverse_product(self) -> float:
        return 0.25 if self.point.dim == 3 else 1.0 / 16.0

    def matrix_rows(self) -> List[List[float]]:
        return [list(map(float, row)) for row in self.numeric.entries]
