"""
QThermo-Py 运行配置

RunConfig 汇总一次命令行调用所需的全部输入；可以来自 --config 文件，
显式给出的命令行参数覆盖文件中的值。
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..core.settings import get_settings
from ..gibbs import ThermoQuantity
from ..quadrature import QuadratureSpec

Command = Literal["qfi", "prior", "gibbs", "figures"]
OutputFormat = Literal["csv", "json"]


class BetaGridSpec(BaseModel):
    """β 网格 [min, max]，步长 step"""

    model_config = ConfigDict(extra="forbid")

    min: float = Field(-10.0, description="网格起点", allow_inf_nan=False)
    max: float = Field(10.0, description="网格终点", allow_inf_nan=False)
    step: float = Field(0.1, description="步长，> 0", allow_inf_nan=False)


def _default_spec() -> QuadratureSpec:
    return get_settings().quadrature_spec()


class RunConfig(BaseModel):
    """一次命令调用的配置"""

    model_config = ConfigDict(extra="forbid")

    command: Command = Field(..., description="子命令")
    action: Optional[str] = Field(None, description="prior / gibbs 的子操作")
    n: Literal[1, 2] = Field(1, description="结构族指数")
    point: Optional[List[float]] = Field(None, description="Bloch 向量坐标")
    z: Optional[float] = Field(None, description="z 坐标", allow_inf_nan=False)
    beta: Optional[float] = Field(None, description="逆温度", allow_inf_nan=False)
    grid: BetaGridSpec = Field(default_factory=BetaGridSpec, description="扫描用 β 网格")
    quantity: Optional[ThermoQuantity] = Field(None, description="扫描的物理量")
    count: int = Field(1000, description="样本数", ge=1)
    seed: Optional[int] = Field(None, description="采样种子", ge=0, lt=2**64)
    tolerances: QuadratureSpec = Field(default_factory=_default_spec, description="积分规格")
    output_path: Optional[str] = Field(None, description="输出文件（figures 为目录）；为空时写到标准输出")
    format: OutputFormat = Field("csv", description="输出格式")
    svg: bool = Field(False, description="figures 是否同时渲染 SVG")

    @property
    def resolved_seed(self) -> int:
        return self.seed if self.seed is not None else get_settings().default_seed
