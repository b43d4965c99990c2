"""
QThermo-Py 异常定义

定义数值库各模块共用的异常类，分为三类：
- 定义域错误（CLI 退出码 2）
- 数值错误（CLI 退出码 3）
- 输出 I/O 错误（CLI 退出码 4）
"""

from typing import Optional, Any, Dict


class QThermoError(Exception):
    """QThermo 基础异常类"""

    exit_code: int = 1

    def __init__(self, message: str, error_code: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.details = details or {}

    def __str__(self) -> str:
        if self.error_code:
            return f"[{self.error_code}] {self.message}"
        return self.message


# ==================== 定义域错误 ====================

class QThermoDomainError(QThermoError):
    """输入超出定义域"""

    exit_code = 2


class RadiusExceededError(QThermoDomainError):
    """Bloch 向量半径大于 1"""

    def __init__(self, message: str, radius: Optional[float] = None, **kwargs):
        super().__init__(message, error_code="RADIUS_EXCEEDED", **kwargs)
        self.radius = radius


class BoundaryPointError(QThermoDomainError):
    """点位于（或过于接近）单位球边界"""

    def __init__(self, message: str, radius: Optional[float] = None, **kwargs):
        super().__init__(message, error_code="BOUNDARY_POINT", **kwargs)
        self.radius = radius


class DomainExceededError(QThermoDomainError):
    """参数超出函数的有效区间"""

    def __init__(self, message: str, argument: Optional[str] = None, value: Any = None, **kwargs):
        super().__init__(message, error_code="DOMAIN_EXCEEDED", **kwargs)
        self.argument = argument
        self.value = value


class ConfigurationError(QThermoDomainError):
    """运行配置不一致"""

    def __init__(self, message: str, config_key: Optional[str] = None, **kwargs):
        super().__init__(message, error_code="CONFIG_ERROR", **kwargs)
        self.config_key = config_key


# ==================== 数值错误 ====================

class QThermoNumericalError(QThermoError):
    """数值计算失败"""

    exit_code = 3


class SingularStateError(QThermoNumericalError):
    """SLD 方程在密度矩阵本征基下出现奇异分母"""

    def __init__(self, message: str, min_pair_sum: Optional[float] = None, **kwargs):
        super().__init__(message, error_code="SINGULAR_STATE", **kwargs)
        self.min_pair_sum = min_pair_sum


class ToleranceNotReachedError(QThermoNumericalError):
    """自适应积分用尽细分次数仍未达到容差"""

    def __init__(
        self,
        message: str,
        value: Optional[float] = None,
        err_est: Optional[float] = None,
        subdivisions: Optional[int] = None,
        **kwargs,
    ):
        super().__init__(message, error_code="TOLERANCE_NOT_REACHED", **kwargs)
        self.value = value
        self.err_est = err_est
        self.subdivisions = subdivisions


class BesselOverflowError(QThermoNumericalError):
    """exp(|β|) 溢出双精度范围"""

    def __init__(self, message: str, beta: Optional[float] = None, **kwargs):
        super().__init__(message, error_code="OVERFLOW", **kwargs)
        self.beta = beta


class ConsistencyError(QThermoNumericalError):
    """命令附带的内部一致性断言失败"""

    def __init__(self, message: str, check_name: Optional[str] = None, **kwargs):
        super().__init__(message, error_code="CONSISTENCY_ERROR", **kwargs)
        self.check_name = check_name


# ==================== I/O 错误 ====================

class EmissionError(QThermoError):
    """结果写出失败"""

    exit_code = 4

    def __init__(self, message: str, path: Optional[str] = None, **kwargs):
        super().__init__(message, error_code="IO_ERROR", **kwargs)
        self.path = path
