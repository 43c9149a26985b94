"""
命令行入口
解析参数、合并设置文件，然后运行类信息可视化流水线
"""
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import click
from click.core import ParameterSource

from ..core.errors import ConfigError
from ..core.pipeline import EXIT_USAGE, PipelineRunner
from ..models.chart import CaptionPosition, ScaleMode
from ..models.config import OUTPUT_FORMATS, RunConfig, known_keys, read_settings
from ..models.metrics import LocMode


logger = logging.getLogger(__name__)

# 命令行参数名 → 设置文件中的键
_OPTION_KEYS = {
    "root": "root",
    "include": "include",
    "exclude": "exclude",
    "select": "select",
    "loc_mode": "loc_mode",
    "scale": "scale_mode",
    "caption": "caption_position",
    "columns": "columns",
    "out": "out_dir",
    "formats": "formats",
    "strict": "strict",
    "export_xml": "export_xml",
    "qualified_captions": "qualified_captions",
    "legend": "show_legend",
    "workers": "workers",
}


def setup_logging(verbosity: int):
    """日志输出到标准错误；-v 为 INFO，-vv 为 DEBUG"""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def merge_config(settings_file: Optional[str], options: Dict[str, Any]) -> RunConfig:
    """
    合并设置文件与命令行参数

    命令行上显式给出的参数优先，其余取设置文件中的值，再其余用默认值。
    """
    data: Dict[str, Any] = {}
    if settings_file:
        data = read_settings(settings_file)
        unknown = sorted(set(data) - set(known_keys()))
        if unknown:
            logger.warning("设置文件中有未知的键: %s", ", ".join(unknown))

    ctx = click.get_current_context()
    for name, key in _OPTION_KEYS.items():
        if ctx.get_parameter_source(name) is ParameterSource.DEFAULT:
            continue
        value = options[name]
        if isinstance(value, Path):
            value = str(value)
        elif isinstance(value, tuple):
            value = list(value)
        data[key] = value
    return RunConfig.from_dict(data)


def _values(enum_type) -> list:
    return [member.value for member in enum_type]


@click.command(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--root", type=click.Path(path_type=Path), default=Path("."), show_default=True,
              help="源码根目录")
@click.option("--include", multiple=True, help="包含的文件通配符，可重复；默认 **/*.java")
@click.option("--exclude", multiple=True, help="排除的文件通配符，可重复")
@click.option("--select", multiple=True, help="按简单名或限定名选择类的通配符，可重复")
@click.option("--loc-mode", type=click.Choice(_values(LocMode)), default=LocMode.SLOC.value,
              show_default=True, help="行数统计方式")
@click.option("--scale", type=click.Choice(_values(ScaleMode)), default=ScaleMode.PER_CHART.value,
              show_default=True, help="锥高的缩放基准")
@click.option("--caption", type=click.Choice(_values(CaptionPosition)),
              default=CaptionPosition.ABOVE.value, show_default=True, help="类名标题位置")
@click.option("--columns", type=int, default=3, show_default=True, help="网格图每行的图表数")
@click.option("--out", type=click.Path(path_type=Path), default=Path("classcone-out"),
              show_default=True, help="输出目录")
@click.option("--format", "formats", multiple=True, type=click.Choice(list(OUTPUT_FORMATS)),
              help="输出格式，可重复；默认全部")
@click.option("--strict", is_flag=True, help="任何文件解析失败即中止")
@click.option("--export-xml", is_flag=True, help="额外写出 structure.xml")
@click.option("--qualified-captions", is_flag=True, help="标题使用限定名")
@click.option("--legend", is_flag=True, help="在网格图下方绘制图例")
@click.option("--workers", type=int, default=1, show_default=True, help="解析线程数")
@click.option("--config", "settings_file", type=click.Path(dir_okay=False),
              help="JSON 设置文件")
@click.option("-v", "--verbose", count=True, help="提高日志级别，可重复")
@click.pass_context
def main(ctx: click.Context, settings_file: Optional[str], verbose: int, **options):
    """把 Java 类的方法数、属性数和行数绘制成三锥图"""
    setup_logging(verbose)
    try:
        config = merge_config(settings_file, options)
    except ConfigError as e:
        logger.error("%s", e)
        ctx.exit(EXIT_USAGE)
        return

    runner = PipelineRunner()
    runner.set_on_class_summary(click.echo)
    runner.set_on_diagnostic(lambda d: logger.warning("%s: %s", d.path, d.message))
    result = runner.run(config)
    ctx.exit(result.exit_code)


if __name__ == "__main__":
    main()
