"""
QThermo-Py 命令行入口

    qthermo qfi --n 1 --point 0,0,0.5
    qthermo prior structure --n 1 --z 0
    qthermo gibbs sweep --quantity fisher --n 1 --beta-min -10 --beta-max 10 --beta-step 0.1
    qthermo figures --output out/ [--svg]

坐标以负数开头时须写成 --point=-0.3,0,0 的形式。
退出码：0 成功，2 用法 / 定义域错误，3 数值错误或内部断言失败，4 I/O 错误。
"""

import argparse
import sys
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

from ..core.exceptions import QThermoError
from ..core.settings import get_settings
from ..gibbs import ThermoQuantity
from ..utils.config_loader import load_config_file, merge_configs
from ..utils.logger import get_logger, setup_logger
from ..utils.validators import GIBBS_ACTIONS, PRIOR_ACTIONS, validate_run_config
from .commands import COMMANDS
from .config import RunConfig

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2


def _point(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid coordinate list {text!r}; expected comma-separated reals")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON/YAML 运行配置文件（字段同 RunConfig）")
    common.add_argument("--format", choices=["csv", "json"], help="输出格式，默认 csv")
    common.add_argument("--output", help="输出文件；figures 时为输出目录")
    common.add_argument("--abs-tol", type=float, help="积分绝对容差")
    common.add_argument("--rel-tol", type=float, help="积分相对容差")
    common.add_argument("--max-subdivisions", type=int, help="自适应积分最大细分次数")
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], help="日志级别")
    common.add_argument("--n", type=int, choices=[1, 2], help="结构族：1 复情形，2 四元数情形")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="qthermo", description="两能级复 / 四元数量子系统的贝叶斯热统计数值计算")
    sub = parser.add_subparsers(dest="command", required=True)

    qfi = sub.add_parser("qfi", parents=[common], help="闭式与 SLD 数值量子 Fisher 信息")
    qfi.add_argument("--point", type=_point, help="逗号分隔的 Bloch 坐标（d=3: x,y,z；d=5: u,v,x,y,z）")

    prior = sub.add_parser("prior", parents=[common], help="归一化先验与结构函数")
    prior.add_argument("action", choices=PRIOR_ACTIONS)
    prior.add_argument("--point", type=_point, help="逗号分隔的 Bloch 坐标")
    prior.add_argument("--z", type=float)
    prior.add_argument("--count", type=int, help="样本数")
    prior.add_argument("--seed", type=int, help="PCG64 种子")

    gibbs = sub.add_parser("gibbs", parents=[common], help="Gibbs 分布及其热统计量")
    gibbs.add_argument("action", choices=GIBBS_ACTIONS)
    gibbs.add_argument("--beta", type=float)
    gibbs.add_argument("--z", type=float)
    gibbs.add_argument("--quantity", choices=[q.value for q in ThermoQuantity])
    gibbs.add_argument("--beta-min", type=float)
    gibbs.add_argument("--beta-max", type=float)
    gibbs.add_argument("--beta-step", type=float)

    figures = sub.add_parser("figures", parents=[common], help="写出六组图表数据与清单")
    figures.add_argument("--svg", action="store_true", default=None, help="同时用 matplotlib 渲染 SVG")

    return parser


def _drop_none(values: Dict[str, Any]) -> Dict[str, Any]:
    return {k: v for k, v in values.items() if v is not None}


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """配置文件中的值 < 显式命令行参数"""
    file_config = load_config_file(args.config) if args.config else {}
    cli_config = _drop_none(
        {
            "command": args.command,
            "action": getattr(args, "action", None),
            "n": args.n,
            "point": getattr(args, "point", None),
            "z": getattr(args, "z", None),
            "beta": getattr(args, "beta", None),
            "quantity": getattr(args, "quantity", None),
            "count": getattr(args, "count", None),
            "seed": getattr(args, "seed", None),
            "output_path": args.output,
            "format": args.format,
            "svg": getattr(args, "svg", None),
            "grid": _drop_none(
                {
                    "min": getattr(args, "beta_min", None),
                    "max": getattr(args, "beta_max", None),
                    "step": getattr(args, "beta_step", None),
                }
            ),
            "tolerances": _drop_none(
                {
                    "abs_tol": args.abs_tol,
                    "rel_tol": args.rel_tol,
                    "max_subdivisions": args.max_subdivisions,
                }
            ),
        }
    )

    merged = merge_configs(file_config, cli_config)
    base_tolerances = get_settings().quadrature_spec().model_dump()
    merged["tolerances"] = merge_configs(base_tolerances, merged.get("tolerances") or {})
    return RunConfig.model_validate(merged)


def _configure_logging(args: argparse.Namespace) -> None:
    settings = get_settings()
    setup_logger(level=args.log_level or settings.log_level, format_type=settings.log_format)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    运行一条命令

    Returns:
        进程退出码
    """
    args = build_parser().parse_args(argv)
    _configure_logging(args)

    try:
        config = config_from_args(args)
    except ValidationError as e:
        print(f"qthermo: invalid configuration:\n{e}", file=sys.stderr)
        return EXIT_USAGE
    except QThermoError as e:
        print(f"qthermo: {e}", file=sys.stderr)
        return e.exit_code

    ok, issues = validate_run_config(config)
    if not ok:
        for issue in issues:
            print(f"qthermo: {issue}", file=sys.stderr)
        return EXIT_USAGE

    logger.info("命令开始", command=config.command, action=config.action, n=config.n)
    try:
        code = COMMANDS[config.command](config)
    except ValidationError as e:
        print(f"qthermo: invalid input:\n{e}", file=sys.stderr)
        return EXIT_USAGE
    except QThermoError as e:
        logger.error("命令失败", command=config.command, error=str(e))
        print(f"qthermo: {e}", file=sys.stderr)
        return e.exit_code

    logger.info("命令完成", command=config.command, exit_code=code)
    return code


if __name__ == "__main__":
    sys.exit(main())
