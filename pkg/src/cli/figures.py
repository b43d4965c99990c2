"""
QThermo-Py 图表数据

写出六组曲线数据及一份清单：
- fig1 / fig2：β = -1 与 β = 5 时两族的 Gibbs 密度，z ∈ [-1, 1] 步长 0.005
- fig3 ~ fig6：均值、方差、相对熵、Jeffreys 先验，β ∈ [-10, 10] 步长 0.1
- manifest.json：积分容差、文件列表、定性断言的结果以及只报告不断言的比较

同样的配置重复运行时输出逐字节相同。
"""

from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field

from ..gibbs import (
    GibbsParams,
    ThermoCurve,
    ThermoQuantity,
    gibbs_pdf,
    relative_entropy_closed_form_at_zero,
    sweep,
    total_variation,
    uniform_grid,
)
from ..core.exceptions import EmissionError
from ..quadrature import QuadratureSpec, resolve_spec
from ..utils.json_utils import safe_json_dumps
from ..utils.logger import get_logger
from ..utils.tables import Table, table_to_csv, write_text

logger = get_logger(__name__)

FAMILIES = (1, 2)
Z_STEP = 0.005
BETA_MIN, BETA_MAX, BETA_STEP = -10.0, 10.0, 0.1
SYMMETRY_TOL = 1e-9
ENTROPY_CLOSED_FORM_TOL = 1e-5
JEFFREYS_PEAK_TOL = 1e-7

DENSITY_FIGURES = {"fig1": -1.0, "fig2": 5.0}
CURVE_FIGURES = {
    "fig3": ThermoQuantity.MEAN,
    "fig4": ThermoQuantity.VARIANCE,
    "fig5": ThermoQuantity.RELATIVE_ENTROPY,
    "fig6": ThermoQuantity.JEFFREYS,
}
TITLES = {
    "fig1": "Gibbs densities, beta = -1",
    "fig2": "Gibbs densities, beta = 5",
    "fig3": "Expected value of z",
    "fig4": "Variance of z",
    "fig5": "Relative entropy to the uniform density",
    "fig6": "Unnormalized Jeffreys prior over beta",
}


class AssertionOutcome(BaseModel):
    name: str = Field(..., description="断言名")
    passed: bool = Field(..., description="是否通过")
    detail: str = Field("", description="实际数值")


class FigureManifest(BaseModel):
    """图表清单（不含时间戳）"""

    tolerances: QuadratureSpec = Field(..., description="积分规格")
    determinism: str = Field(
        "all figure data are deterministic functions of the tolerances; no random seed is involved",
        description="确定性说明",
    )
    files: List[str] = Field(default_factory=list, description="写出的文件")
    assertions: List[AssertionOutcome] = Field(default_factory=list, description="定性断言")
    reported: Dict[str, Union[bool, float]] = Field(default_factory=dict, description="只报告的比较量")

    @property
    def all_passed(self) -> bool:
        return all(a.passed for a in self.assertions)


def _outcome(name: str, passed: bool, detail: str = "") -> AssertionOutcome:
    return AssertionOutcome(name=name, passed=bool(passed), detail=detail)


def density_table(beta: float, spec: Optional[QuadratureSpec] = None) -> Table:
    z = uniform_grid(-1.0, 1.0, Z_STEP)
    columns = [gibbs_pdf(GibbsParams(n=n, beta=beta), z, spec) for n in FAMILIES]
    rows = [[float(zz), *(float(c[k]) for c in columns)] for k, zz in enumerate(z)]
    return Table(columns=["z", "p_n1", "p_n2"], rows=rows)


def curve_table(curves: Sequence[ThermoCurve]) -> Table:
    rows = [[b, *(c.values[k] for c in curves)] for k, b in enumerate(curves[0].beta_grid)]
    return Table(columns=["beta", "value_n1", "value_n2"], rows=rows)


def _is_odd(values: Sequence[float]) -> bool:
    v = np.asarray(values)
    return bool(np.max(np.abs(v + v[::-1])) < SYMMETRY_TOL)


def _is_even(values: Sequence[float]) -> bool:
    v = np.asarray(values)
    return bool(np.max(np.abs(v - v[::-1])) < SYMMETRY_TOL)


def _density_assertions(tables: Dict[str, Table]) -> List[AssertionOutcome]:
    peaks = {name: (max(t.column("p_n1")), max(t.column("p_n2"))) for name, t in tables.items()}
    p1, p2 = peaks["fig1"]
    q1, q2 = peaks["fig2"]
    return [
        _outcome("fig1_quaternionic_peak_higher", p2 > p1, f"peak_n1={p1!r} peak_n2={p2!r}"),
        _outcome("fig2_complex_peak_higher", q1 > q2, f"peak_n1={q1!r} peak_n2={q2!r}"),
    ]


def _curve_assertions(curves: Dict[str, Tuple[ThermoCurve, ThermoCurve]]) -> List[AssertionOutcome]:
    mean1, mean2 = curves["fig3"]
    var1, var2 = curves["fig4"]
    ent1, ent2 = curves["fig5"]
    jef1, jef2 = curves["fig6"]
    d1, d2 = (relative_entropy_closed_form_at_zero(n) for n in FAMILIES)
    flat = all(abs(b) <= abs(a) + 1e-15 for a, b in zip(mean1.values, mean2.values))

    return [
        _outcome("fig3_mean_odd", _is_odd(mean1.values) and _is_odd(mean2.values)),
        _outcome(
            "fig3_mean_strictly_decreasing",
            all(np.all(np.diff(c.values) < 0.0) for c in (mean1, mean2)),
        ),
        _outcome("fig3_quaternionic_flatter", flat),
        _outcome("fig4_variance_even", _is_even(var1.values) and _is_even(var2.values)),
        _outcome(
            "fig4_quaternionic_max_lower",
            var2.maximum() < var1.maximum(),
            f"max_n1={var1.maximum()!r} max_n2={var2.maximum()!r}",
        ),
        _outcome("fig5_entropy_even", _is_even(ent1.values) and _is_even(ent2.values)),
        _outcome(
            "fig5_minimum_at_zero",
            ent1.argmin() == 0.0 and ent2.argmin() == 0.0,
        ),
        _outcome(
            "fig5_quaternionic_minimum_greater",
            ent2.minimum() > ent1.minimum(),
            f"min_n1={ent1.minimum()!r} min_n2={ent2.minimum()!r}",
        ),
        _outcome(
            "fig5_closed_form_at_zero",
            abs(ent1.minimum() - d1) < ENTROPY_CLOSED_FORM_TOL and abs(ent2.minimum() - d2) < ENTROPY_CLOSED_FORM_TOL,
            f"closed_n1={d1!r} closed_n2={d2!r}",
        ),
        _outcome("fig6_jeffreys_even", _is_even(jef1.values) and _is_even(jef2.values)),
        _outcome(
            "fig6_peak_values",
            abs(jef1.maximum() - 0.5) < JEFFREYS_PEAK_TOL and abs(jef2.maximum() - (1.0 / 6.0) ** 0.5) < JEFFREYS_PEAK_TOL,
            f"peak_n1={jef1.maximum()!r} peak_n2={jef2.maximum()!r}",
        ),
        _outcome("fig6_quaternionic_peak_lower", jef2.maximum() < jef1.maximum()),
        _outcome("fig6_peak_at_zero", jef1.argmax() == 0.0 and jef2.argmax() == 0.0),
    ]


def build_figures(spec: Optional[QuadratureSpec] = None) -> Tuple[Dict[str, Table], List[AssertionOutcome], Dict[str, Union[bool, float]]]:
    """
    计算六组图表数据

    Returns:
        (表格, 断言结果, 只报告的比较量)
    """
    tables: Dict[str, Table] = {name: density_table(beta, spec) for name, beta in DENSITY_FIGURES.items()}
    assertions = _density_assertions(tables)

    grid = uniform_grid(BETA_MIN, BETA_MAX, BETA_STEP)
    curves: Dict[str, Tuple[ThermoCurve, ThermoCurve]] = {}
    for name, quantity in CURVE_FIGURES.items():
        pair = tuple(sweep(quantity, n, grid, spec) for n in FAMILIES)
        curves[name] = pair
        tables[name] = curve_table(pair)
        logger.debug("曲线完成", figure=name, quantity=quantity.value)
    assertions += _curve_assertions(curves)
    assertions.append(
        _outcome(
            "row_counts",
            all(len(tables[f].rows) == 401 for f in DENSITY_FIGURES) and all(len(tables[f].rows) == 201 for f in CURVE_FIGURES),
        )
    )

    tv1, tv2 = (total_variation(c) for c in curves["fig4"])
    reported = {
        "variance_total_variation_n1": tv1,
        "variance_total_variation_n2": tv2,
        "variance_total_variation_n2_smaller": tv2 < tv1,
    }
    return tables, assertions, reported


def render_svg(name: str, table: Table, path: Path) -> None:
    """用 matplotlib（Agg 后端）把一张表画成折线图"""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    matplotlib.rcParams["svg.hashsalt"] = "qthermo"
    x_name, *series = table.columns
    x = table.column(x_name)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for column, label in zip(series, ("complex (n=1)", "quaternionic (n=2)")):
        ax.plot(x, table.column(column), label=label)
    ax.set_xlabel("z" if x_name == "z" else "beta")
    ax.set_title(TITLES[name])
    ax.legend()
    fig.tight_layout()
    try:
        fig.savefig(path, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)


def write_figures(
    output_dir: Union[str, Path],
    spec: Optional[QuadratureSpec] = None,
    svg: bool = False,
) -> FigureManifest:
    """
    写出 fig1.csv … fig6.csv 与 manifest.json

    Raises:
        EmissionError: 目录或文件无法写入
    """

    spec = resolve_spec(spec)
    directory = Path(output_dir)
    tables, assertions, reported = build_figures(spec)

    files: List[str] = []
    for name, table in tables.items():
        write_text(table_to_csv(table), directory / f"{name}.csv")
        files.append(f"{name}.csv")
        if svg:
            try:
                render_svg(name, table, directory / f"{name}.svg")
            except OSError as e:
                raise EmissionError(f"cannot write {name}.svg: {e}", path=str(directory)) from e
            files.append(f"{name}.svg")

    manifest = FigureManifest(tolerances=spec, files=files, assertions=assertions, reported=reported)
    write_text(safe_json_dumps(manifest.model_dump(mode="json"), indent=2) + "\n", directory / "manifest.json")
    logger.info(
        "图表数据已写出",
        directory=str(directory),
        files=len(files),
        failed=[a.name for a in assertions if not a.passed],
    )
    return manifest
