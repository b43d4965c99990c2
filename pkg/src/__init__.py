"""
QThermo-Py

两能级复 / 四元数量子系统的贝叶斯热统计数值库：

- 量子 Fisher 信息（闭式与 SLD 数值计算）
- 3 维 / 5 维单位球上的归一化 Jeffreys 先验与结构函数
- Bessel 积分归一化的 Gibbs 分布及 β 上的 Fisher 信息 / Jeffreys 先验
- 六组图表数据的命令行复现
"""

# 版本信息
__version__ = "0.1.0"

from .core import QThermoError, get_settings
from .state_space import BlochPoint, HermitianMatrix, Quaternion
from .qfi import qfi_closed_form, qfi_numeric
from .quadrature import QuadratureSpec, integrate, integrate_gegenbauer
from .special import bessel_i_reduced
from .priors import StructureFamily, prior_pdf, sample_prior, structure_function
from .gibbs import GibbsParams, ThermoQuantity, gibbs_pdf, sweep
from .utils.logger import get_logger

__all__ = [
    "__version__",
    "QThermoError",
    "get_settings",
    "BlochPoint",
    "HermitianMatrix",
    "Quaternion",
    "qfi_closed_form",
    "qfi_numeric",
    "QuadratureSpec",
    "integrate",
    "integrate_gegenbauer",
    "bessel_i_reduced",
    "StructureFamily",
    "prior_pdf",
    "sample_prior",
    "structure_function",
    "GibbsParams",
    "ThermoQuantity",
    "gibbs_pdf",
    "sweep",
    "get_logger",
]
