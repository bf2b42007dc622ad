import argparse
import logging
import sys
from typing import List, Optional
from pydantic import ValidationError
from pythonjsonlogger import jsonlogger
from augtree import __version__
from augtree.bench import command as bench_command
from augtree.config import get_settings
from augtree.core import command as core_command
from augtree.diameter import command as diameter_command
from augtree.exceptions import AugTreeError
from augtree.lowerbound import command as lowerbound_command
from augtree.schemas import RunConfig
from augtree.solvers import command as solvers_command


logger = logging.getLogger(__name__)

settings = get_settings()

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging() -> None:
    """配置日志（log_json 时输出 JSON 行）"""
    level = getattr(logging, settings.log_level.upper(), logging.INFO)
    if settings.log_json:
        handler = logging.StreamHandler()
        handler.setFormatter(jsonlogger.JsonFormatter(LOG_FORMAT))
        logging.basicConfig(level=level, handlers=[handler], force=True)
    else:
        logging.basicConfig(level=level, format=LOG_FORMAT)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=settings.default_seed, help="随机种子")
    common.add_argument("--threads", type=int, default=settings.threads, help="并行线程数")
    common.add_argument("-o", "--output", default=None, help="输出文件")

    parser = argparse.ArgumentParser(prog="augtree", description="k-DOAT 工具链")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # 注册子命令
    for module in (core_command, diameter_command, solvers_command, lowerbound_command, bench_command):
        module.register(subparsers, [common])
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    执行一条命令

    Returns:
        0 成功；1 领域错误（解析、守卫、校验失败）；2 用法错误
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    options = vars(args)
    handler = options.pop("handler")
    try:
        config = RunConfig(
            command=options.pop("command"),
            seed=options.pop("seed"),
            output=options.pop("output"),
            threads=options.pop("threads"),
            options=options,
        )
    except ValidationError as e:
        logger.error(f"❌ 参数校验失败: {e}")
        return 2

    logger.info(f"🚀 执行命令: {config.command}")
    try:
        return handler(config)
    except AugTreeError as e:
        logger.error(f"❌ {config.command} 失败: {e}", exc_info=settings.debug)
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        logger.error(f"❌ 文件读写失败: {e}", exc_info=settings.debug)
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    setup_logging()
    sys.exit(run())


if __name__ == "__main__":
    main()
