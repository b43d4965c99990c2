"""
QThermo-Py 积分规格

QuadratureSpec 描述所有定积分的容差与细分策略。
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

DEFAULT_ABS_TOL = 1e-12
DEFAULT_REL_TOL = 1e-10
DEFAULT_MAX_SUBDIVISIONS = 200
DEFAULT_BASE_RULE_ORDER = 20


class QuadratureSpec(BaseModel):
    """容差 / 细分策略"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    abs_tol: float = Field(DEFAULT_ABS_TOL, description="绝对容差", gt=0.0)
    rel_tol: float = Field(DEFAULT_REL_TOL, description="相对容差", gt=0.0)
    max_subdivisions: int = Field(DEFAULT_MAX_SUBDIVISIONS, description="最大二分次数", ge=1)
    base_rule_order: int = Field(DEFAULT_BASE_RULE_ORDER, description="Gauss-Legendre 面板阶数", ge=10, le=100)

    def tolerance_for(self, value: float) -> float:
        """给定积分值时允许的误差"""
        return max(self.abs_tol, self.rel_tol * abs(value))


def resolve_spec(spec: Optional[QuadratureSpec]) -> QuadratureSpec:
    """未显式给出规格时使用设置中的默认规格"""
    if spec is not None:
        return spec
    from ..core.settings import get_settings

    return get_settings().quadrature_spec()
