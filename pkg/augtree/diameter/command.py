import logging
import time
from augtree.core.instance import ShortcutSet
from augtree.core.io import load_instance
from augtree.diameter.graph import graph_diameter
from augtree.schemas import DiameterResult, RunConfig


logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("diam", parents=parents, help="计算 T+S 的精确直径")
    parser.add_argument("-i", "--input", required=True, help="DOAT 实例文件")
    parser.add_argument("-s", "--shortcuts", default=None, help='捷径字面量，如 "0-5:3,2-9"')
    parser.set_defaults(handler=handle_diam)


def handle_diam(config: RunConfig) -> int:
    """
    计算直径并打印见证点对

    省略代价的捷径从实例预言机查询；--threads > 1 时按源点分片并行。
    """
    opts = config.options
    instance = load_instance(opts["input"])
    shortcuts = ShortcutSet.parse(opts.get("shortcuts"), instance.oracle)
    shortcuts.validate(instance.tree)

    start = time.perf_counter()
    diam, witness = graph_diameter(instance.tree, shortcuts, threads=config.threads)
    result = DiameterResult(diam=diam, witness=witness, elapsed=time.perf_counter() - start)

    logger.info(f"✅ 直径计算完成: diam={diam}, witness={witness}, 耗时 {result.elapsed:.3f}s")
    print(f"diam={result.diam} witness={result.witness[0]}-{result.witness[1]}")
    if config.output:
        with open(config.output, "w", encoding="utf-8") as f:
            f.write(result.model_dump_json(indent=2))
    return 0
