"""
QThermo-Py 子命令实现

每个命令把 RunConfig 变成一张 Table 写出；附带的内部一致性断言在写出之后
检查，失败时抛出 ConsistencyError（退出码 3）。
"""

from typing import Callable, Dict, List, Tuple

import numpy as np

from ..core.exceptions import ConsistencyError
from ..gibbs import (
    GibbsParams,
    ThermoQuantity,
    evaluate,
    gibbs_pdf,
    sweep,
    uniform_grid,
)
from ..priors import (
    StructureFamily,
    marginal_check,
    normalization_report,
    prior_pdf,
    sample_prior,
    samples_table,
    structure_function,
)
from ..qfi import compare_qfi
from ..state_space import BlochPoint
from ..utils.logger import get_logger
from ..utils.tables import Table, emit_table
from .config import RunConfig
from .figures import write_figures

logger = get_logger(__name__)

QFI_DEVIATION_TOL = 1e-8
QFI_DET_REL_TOL = 1e-8
NORMALIZATION_TOL = 1e-10
MARGINAL_TOL = 1e-8

GIBBS_QUANTITY_ACTIONS = {
    "mean": ThermoQuantity.MEAN,
    "var": ThermoQuantity.VARIANCE,
    "entropy": ThermoQuantity.RELATIVE_ENTROPY,
    "fisher": ThermoQuantity.FISHER,
    "jeffreys": ThermoQuantity.JEFFREYS,
}


def _emit(config: RunConfig, table: Table) -> None:
    emit_table(table, config.format, config.output_path)


def _check(failures: List[str]) -> None:
    if failures:
        raise ConsistencyError("internal check failed: " + "; ".join(failures), check_name=failures[0])


# ==================== qfi ====================

def cmd_qfi(config: RunConfig) -> int:
    """闭式与数值 QFI、最大偏差以及行列式"""
    comparison = compare_qfi(BlochPoint(coords=tuple(config.point)))
    d = comparison.point.dim

    rows: List[list] = []
    for label, matrix in (("closed_form", comparison.closed_form), ("numeric", comparison.numeric)):
        for i in range(d):
            for j in range(d):
                rows.append([f"{label}[{i}][{j}]", float(matrix.entries[i, j])])
    rows += [
        ["max_deviation", comparison.max_deviation],
        ["det_closed_form", comparison.det_closed_form],
        ["det_numeric", comparison.det_numeric],
        ["density_determinant", comparison.density_determinant],
        ["inverse_product", comparison.inverse_product],
    ]
    _emit(config, Table(columns=["quantity", "value"], rows=rows))

    failures = []
    # QFI 元素按 1/(1-r²) 增长，偏差阈值随最大元素缩放
    scale = max(1.0, float(np.max(np.abs(comparison.closed_form.entries))))
    if not comparison.max_deviation < QFI_DEVIATION_TOL * scale:
        failures.append(f"qfi_deviation={comparison.max_deviation:.3e}")
    if not abs(comparison.det_numeric / comparison.det_closed_form - 1.0) < QFI_DET_REL_TOL:
        failures.append("qfi_determinant")
    if not abs(comparison.inverse_product / comparison.expected_inverse_product - 1.0) < QFI_DET_REL_TOL:
        failures.append("inverse_proportionality")
    _check(failures)
    return 0


# ==================== prior ====================

PriorResult = Tuple[Table, List[str]]


def _prior_pdf(config: RunConfig, fam: StructureFamily) -> PriorResult:
    p = BlochPoint(coords=tuple(config.point))
    return Table(columns=["n", "radius", "pdf"], rows=[[fam.n, p.radius, prior_pdf(fam, p)]]), []


def _prior_structure(config: RunConfig, fam: StructureFamily) -> PriorResult:
    return Table(columns=["n", "z", "value"], rows=[[fam.n, config.z, structure_function(fam, config.z)]]), []


def _prior_normcheck(config: RunConfig, fam: StructureFamily) -> PriorResult:
    report = normalization_report(fam, config.tolerances)
    table = Table(
        columns=["n", "mass", "err_est", "unnormalized_mass"],
        rows=[[fam.n, report.mass, report.err_est, report.unnormalized_mass]],
    )
    failures = [] if abs(report.mass - 1.0) <= NORMALIZATION_TOL else [f"prior_mass={report.mass!r}"]
    return table, failures


def _prior_marginalcheck(config: RunConfig, fam: StructureFamily) -> PriorResult:
    report = marginal_check(fam, config.tolerances)
    rows = [
        [i, " ".join(repr(c) for c in s), report.expected, v, abs(v - report.expected)]
        for i, (s, v) in enumerate(zip(report.sub_points, report.values))
    ]
    table = Table(columns=["index", "sub_point", "expected", "value", "deviation"], rows=rows)
    failures = [] if report.max_deviation < MARGINAL_TOL else [f"marginal_deviation={report.max_deviation:.3e}"]
    return table, failures


def _prior_sample(config: RunConfig, fam: StructureFamily) -> PriorResult:
    return samples_table(sample_prior(fam, config.count, config.resolved_seed)), []


PRIOR_ACTIONS: Dict[str, Callable[[RunConfig, StructureFamily], PriorResult]] = {
    "pdf": _prior_pdf,
    "structure": _prior_structure,
    "normcheck": _prior_normcheck,
    "marginalcheck": _prior_marginalcheck,
    "sample": _prior_sample,
}


def cmd_prior(config: RunConfig) -> int:
    table, failures = PRIOR_ACTIONS[config.action](config, StructureFamily(n=config.n))
    _emit(config, table)
    _check(failures)
    return 0


# ==================== gibbs ====================

def cmd_gibbs(config: RunConfig) -> int:
    spec = config.tolerances
    if config.action == "sweep":
        grid = uniform_grid(config.grid.min, config.grid.max, config.grid.step)
        curve = sweep(config.quantity, config.n, grid, spec)
        rows = [[b, v] for b, v in zip(curve.beta_grid, curve.values)]
        _emit(config, Table(columns=["beta", curve.quantity.value], rows=rows))
        return 0

    gp = GibbsParams(n=config.n, beta=config.beta)
    if config.action == "pdf":
        table = Table(columns=["n", "beta", "z", "pdf"], rows=[[gp.n, gp.beta, config.z, gibbs_pdf(gp, config.z, spec)]])
    else:
        quantity = GIBBS_QUANTITY_ACTIONS[config.action]
        table = Table(columns=["n", "beta", quantity.value], rows=[[gp.n, gp.beta, evaluate(quantity, gp, spec)]])
    _emit(config, table)
    return 0


# ==================== figures ====================

def cmd_figures(config: RunConfig) -> int:
    manifest = write_figures(config.output_path, config.tolerances, svg=config.svg)
    failed = [a.name for a in manifest.assertions if not a.passed]
    _check(failed)
    return 0


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "qfi": cmd_qfi,
    "prior": cmd_prior,
    "gibbs": cmd_gibbs,
    "figures": cmd_figures,
}
