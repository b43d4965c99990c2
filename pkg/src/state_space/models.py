"""
QThermo-Py 状态空间数据模型

- BlochPoint: 3 维（复）或 5 维（四元数）单位球内的点
- HermitianMatrix: 2×2 / 4×4 稠密复 Hermitian 矩阵
"""

import math
from typing import Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

# 内点判定与 SLD / 先验密度的奇异边界保持的距离
BOUNDARY_EPSILON = 1e-9
HERMITIAN_ATOL = 1e-12

COORDINATE_NAMES = {
    3: ("x", "y", "z"),
    5: ("u", "v", "x", "y", "z"),
}


class BlochPoint(BaseModel):
    """Bloch 向量；d=3 时顺序为 (x, y, z)，d=5 时为 (u, v, x, y, z)"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    coords: Tuple[float, ...] = Field(..., description="坐标")

    @field_validator("coords")
    @classmethod
    def _check_coords(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        if len(value) not in COORDINATE_NAMES:
            raise ValueError(f"Bloch vector must have 3 or 5 coordinates, got {len(value)}")
        if not all(math.isfinite(c) for c in value):
            raise ValueError("Bloch vector coordinates must be finite")
        return tuple(float(c) for c in value)

    @classmethod
    def of(cls, coords: Sequence[float]) -> "BlochPoint":
        return cls(coords=tuple(coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def n(self) -> int:
        """结构族指数：1 为复情形，2 为四元数情形"""
        return (self.dim - 1) // 2

    @property
    def radius(self) -> float:
        return math.hypot(*self.coords)

    def is_interior(self, epsilon: float = BOUNDARY_EPSILON) -> bool:
        return self.radius < 1.0 - epsilon

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coords, dtype=float)

    def named(self) -> dict:
        return dict(zip(COORDINATE_NAMES[self.dim], self.coords))


class HermitianMatrix(BaseModel):
    """稠密复 Hermitian 矩阵（2×2 或 4×4）"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    entries: np.ndarray = Field(..., description="行优先复矩阵")

    @field_validator("entries", mode="before")
    @classmethod
    def _as_complex(cls, value) -> np.ndarray:
        array = np.array(value, dtype=complex)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def _check_hermitian(self) -> "HermitianMatrix":
        shape = self.entries.shape
        if shape not in ((2, 2), (4, 4)):
            raise ValueError(f"Hermitian carrier must be 2x2 or 4x4, got {shape}")
        deviation = float(np.max(np.abs(self.entries - self.entries.conj().T)))
        if deviation > HERMITIAN_ATOL:
            raise ValueError(f"matrix is not Hermitian (max deviation {deviation:.3e})")
        return self

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def eigenvalues(self) -> np.ndarray:
        """升序实本征值"""
        return np.linalg.eigvalsh(self.entries)

    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    def determinant(self) -> float:
        return float(np.linalg.det(self.entries).real)

    def __add__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        return HermitianMatrix(entries=self.entries + other.entries)

    def __sub__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        return HermitianMatrix(entries=self.entries - other.entries)
