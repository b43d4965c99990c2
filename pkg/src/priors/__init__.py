"""
QThermo-Py Priors 模块

3 维 / 5 维单位球上的归一化先验、沿坐标的边缘、单变量结构函数与蒙特卡洛
采样。
"""

from .models import MarginalReport, NormalizationReport, SampleBatch, StructureFamily
from .density import (
    ball_volume,
    prior_constant,
    prior_pdf,
    sphere_surface,
    structure_cdf,
    structure_constant,
    structure_function,
)
from .checks import (
    DEFAULT_MARGINAL_POINTS,
    marginal_check,
    marginal_density,
    normalization_report,
    prior_normalization_check,
)
from .sampling import make_generator, sample_prior, samples_table, write_samples_csv

__all__ = [
    "MarginalReport",
    "NormalizationReport",
    "SampleBatch",
    "StructureFamily",
    "ball_volume",
    "prior_constant",
    "prior_pdf",
    "sphere_surface",
    "structure_cdf",
    "structure_constant",
    "structure_function",
    "DEFAULT_MARGINAL_POINTS",
    "marginal_check",
    "marginal_density",
    "normalization_report",
    "prior_normalization_check",
    "make_generator",
    "sample_prior",
    "samples_table",
    "write_samples_csv",
]
