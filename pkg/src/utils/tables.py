"""
QThermo-Py 表格输出

命令结果统一表示为 Table（列名 + 行），再写成 CSV 或 JSON：
- CSV：逗号分隔、LF 换行、表头一行、UTF-8，浮点数用最短往返十进制
- JSON：记录列表，字段名与 CSV 表头一致
"""

import csv
import io
import math
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..core.exceptions import EmissionError
from .json_utils import safe_json_dumps

Cell = Union[str, int, float, bool]


class Table(BaseModel):
    """列名 + 行"""

    model_config = ConfigDict(frozen=True)

    columns: List[str] = Field(..., description="列名", min_length=1)
    rows: List[List[Cell]] = Field(default_factory=list, description="数据行")

    @field_validator("rows", mode="before")
    @classmethod
    def _unwrap_numpy(cls, value: Any) -> Any:
        # numpy 标量先转成 Python 内置类型，避免在 Union 中被宽松匹配成 int
        return [[cell.item() if isinstance(cell, np.generic) else cell for cell in row] for row in value]

    @model_validator(mode="after")
    def _check_width(self) -> "Table":
        width = len(self.columns)
        for i, row in enumerate(self.rows):
            if len(row) != width:
                raise ValueError(f"row {i} has {len(row)} cells, expected {width}")
        return self

    def records(self) -> List[Dict[str, Cell]]:
        return [dict(zip(self.columns, row)) for row in self.rows]

    def column(self, name: str) -> List[Cell]:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]


def format_cell(value: Any) -> str:
    """浮点数取 repr（最短往返表示），-0.0 归一为 0.0"""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite value {value!r} cannot be emitted")
        return repr(value + 0.0)
    return str(value)


def table_to_csv(table: Table) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([format_cell(cell) for cell in row])
    return buffer.getvalue()


def table_to_json(table: Table) -> str:
    records = [{k: (v + 0.0 if isinstance(v, float) else v) for k, v in r.items()} for r in table.records()]
    return safe_json_dumps(records, indent=2) + "\n"


def render_table(table: Table, fmt: str = "csv") -> str:
    if fmt == "json":
        return table_to_json(table)
    return table_to_csv(table)


def write_text(content: str, path: Optional[Union[str, Path]] = None) -> None:
    """
    写出文本；path 为空时写到标准输出

    Raises:
        EmissionError: 写文件失败
    """
    if path is None:
        sys.stdout.write(content)
        sys.stdout.flush()
        return
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", encoding="utf-8", newline="") as f:
            f.write(content)
    except OSError as e:
        raise EmissionError(f"cannot write {target}: {e}", path=str(target)) from e


def emit_table(table: Table, fmt: str = "csv", path: Optional[Union[str, Path]] = None) -> None:
    write_text(render_table(table, fmt), path)
