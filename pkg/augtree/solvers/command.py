import logging
from augtree.core.io import load_instance
from augtree.schemas import Algo, RunConfig
from augtree.solvers.service import solver_service


logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("solve", parents=parents, help="求解 k-DOAT 实例")
    parser.add_argument("-i", "--input", required=True, help="DOAT 实例文件")
    parser.add_argument("--algo", required=True, choices=[a.value for a in Algo])
    parser.add_argument("--eps", type=float, default=None, help="ptas 的 ε")
    parser.add_argument("--h", type=int, default=None, help="gonzalez 选点数")
    parser.add_argument("--budget", type=int, default=None, help="exact 枚举工作量预算")
    parser.add_argument("--start", type=int, default=None, help="Gonzalez 起点 x_1")
    parser.add_argument("--generalized", action="store_true", help="exact 允许与树边平行的捷径")
    parser.set_defaults(handler=handle_solve)


def handle_solve(config: RunConfig) -> int:
    opts = config.options
    instance = load_instance(opts["input"])
    result = solver_service.solve(
        instance,
        opts["algo"],
        eps=opts.get("eps"),
        h=opts.get("h"),
        budget=opts.get("budget"),
        threads=config.threads,
        start=opts.get("start"),
        generalized=opts.get("generalized", False),
    )
    text = result.model_dump_json(indent=2)
    print(text)
    if config.output:
        with open(config.output, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info(f"结果已写入 {config.output}")
    return 0
