"""
QThermo-Py 运行配置验证器模块

RunConfig 的字段类型由 pydantic 保证；这里检查与所选命令相关的一致性
（点的维数、网格、|β| 范围等），并一次性收集全部问题。
"""

from typing import Any, List, Tuple

from ..core.limits import FISHER_MAX_ABS_BETA, POISSON_MAX_ABS_BETA
from .logger import get_logger

logger = get_logger(__name__)

PRIOR_ACTIONS = ("pdf", "structure", "normcheck", "marginalcheck", "sample")
GIBBS_ACTIONS = ("pdf", "mean", "var", "entropy", "fisher", "jeffreys", "sweep")
FISHER_ACTIONS = ("fisher", "jeffreys")
FISHER_QUANTITIES = ("fisher", "jeffreys")


class ConfigIssue:
    """一条配置问题"""

    def __init__(self, message: str, field_path: str = ""):
        self.message = message
        self.field_path = field_path

    def __str__(self) -> str:
        if self.field_path:
            return f"[{self.field_path}] {self.message}"
        return self.message

    def __repr__(self) -> str:
        return f"ConfigIssue({self.field_path!r}, {self.message!r})"


class RunConfigValidator:
    """按命令检查 RunConfig 的一致性"""

    def __init__(self):
        self.errors: List[ConfigIssue] = []

    def validate(self, config: Any) -> Tuple[bool, List[ConfigIssue]]:
        """
        Args:
            config: RunConfig

        Returns:
            (是否通过, 问题列表)
        """
        self.errors.clear()
        handler = getattr(self, f"_validate_{config.command}", None)
        if handler is not None:
            handler(config)
        if self.errors:
            logger.debug("运行配置未通过验证", command=config.command, issues=len(self.errors))
        return len(self.errors) == 0, self.errors.copy()

    def _error(self, message: str, field_path: str) -> None:
        self.errors.append(ConfigIssue(message, field_path))

    def _require_point(self, config: Any) -> None:
        expected = 2 * config.n + 1
        if config.point is None:
            self._error(f"a {expected}-component point is required", "point")
        elif len(config.point) != expected:
            self._error(f"n={config.n} needs {expected} coordinates, got {len(config.point)}", "point")

    def _require_z(self, config: Any) -> None:
        if config.z is None:
            self._error("z is required", "z")
        elif abs(config.z) > 1.0:
            self._error(f"z must satisfy |z| <= 1, got {config.z}", "z")

    def _require_beta(self, config: Any, limit: float) -> None:
        if config.beta is None:
            self._error("beta is required", "beta")
        elif abs(config.beta) > limit:
            self._error(f"|beta| must not exceed {limit}, got {config.beta}", "beta")

    def _validate_qfi(self, config: Any) -> None:
        self._require_point(config)

    def _validate_prior(self, config: Any) -> None:
        if config.action not in PRIOR_ACTIONS:
            self._error(f"prior action must be one of {', '.join(PRIOR_ACTIONS)}", "action")
            return
        if config.action == "pdf":
            self._require_point(config)
        elif config.action == "structure":
            self._require_z(config)
        elif config.action == "sample" and config.count < 1:
            self._error("count must be >= 1", "count")

    def _validate_gibbs(self, config: Any) -> None:
        if config.action not in GIBBS_ACTIONS:
            self._error(f"gibbs action must be one of {', '.join(GIBBS_ACTIONS)}", "action")
            return
        if config.action == "sweep":
            self._validate_grid(config)
            return
        limit = FISHER_MAX_ABS_BETA if config.action in FISHER_ACTIONS else POISSON_MAX_ABS_BETA
        self._require_beta(config, limit)
        if config.action == "pdf":
            self._require_z(config)

    def _validate_grid(self, config: Any) -> None:
        if config.quantity is None:
            self._error("sweep needs a quantity", "quantity")
        grid = config.grid
        if grid.step <= 0.0:
            self._error("grid step must be > 0", "grid.step")
        if grid.max <= grid.min:
            self._error("grid max must exceed grid min", "grid")
        if max(abs(grid.min), abs(grid.max)) > FISHER_MAX_ABS_BETA:
            self._error(f"sweep grids are limited to |beta| <= {FISHER_MAX_ABS_BETA}", "grid")

    def _validate_figures(self, config: Any) -> None:
        if not config.output_path:
            self._error("figures needs an output directory", "output_path")


def validate_run_config(config: Any) -> Tuple[bool, List[ConfigIssue]]:
    """验证运行配置的便捷函数"""
    return RunConfigValidator().validate(config)
