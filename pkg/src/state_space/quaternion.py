"""
QThermo-Py 四元数

四元数算术以及四元数到 2×2 复矩阵的嵌入 Φ：

    Φ(w + x·i + y·j + z·k) = [[w + x·i, y + z·i], [-y + z·i, w - x·i]]

Φ 是实代数同态：Φ(pq) = Φ(p)Φ(q)，Φ(1) = I。这里的 i 在左边是四元数单位，
在右边是复数单位。
"""

import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class Quaternion(BaseModel):
    """四元数 w + x·i + y·j + z·k"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    w: float = Field(0.0, description="实部")
    x: float = Field(0.0, description="i 分量")
    y: float = Field(0.0, description="j 分量")
    z: float = Field(0.0, description="k 分量")

    def components(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    def conjugate(self) -> "Quaternion":
        return Quaternion(w=self.w, x=-self.x, y=-self.y, z=-self.z)

    def norm(self) -> float:
        return math.sqrt(self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z)

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        if isinstance(other, (int, float)):
            return Quaternion(w=self.w * other, x=self.x * other, y=self.y * other, z=self.z * other)
        return NotImplemented

    def __rmul__(self, other: float) -> "Quaternion":
        if isinstance(other, (int, float)):
            return self * other
        return NotImplemented

    def __add__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(w=self.w + other.w, x=self.x + other.x, y=self.y + other.y, z=self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(w=self.w - other.w, x=self.x - other.x, y=self.y - other.y, z=self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(w=-self.w, x=-self.x, y=-self.y, z=-self.z)


ONE = Quaternion(w=1.0)
UNIT_I = Quaternion(x=1.0)
UNIT_J = Quaternion(y=1.0)
UNIT_K = Quaternion(z=1.0)


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton 积：i² = j² = k² = -1，ij = -ji = k，jk = -kj = i，ki = -ik = j"""
    return Quaternion(
        w=p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        x=p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        y=p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        z=p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    )


def quat_to_complex(q: Quaternion) -> np.ndarray:
    """
    嵌入 Φ：四元数 → 2×2 复矩阵（一般不是 Hermitian）

    写成 q = α + β·j，α = w + x·i，β = y + z·i 时，Φ(q) = [[α, β], [-conj(β), conj(α)]]。
    """
    alpha = complex(q.w, q.x)
    beta = complex(q.y, q.z)
    return np.array(
        [[alpha, beta], [-beta.conjugate(), alpha.conjugate()]],
        dtype=complex,
    )
