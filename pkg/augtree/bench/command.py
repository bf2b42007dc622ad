import logging
from augtree.bench.service import BENCH_ALGOS, bench_service
from augtree.exceptions import AugTreeError
from augtree.schemas import Family, RunConfig


logger = logging.getLogger(__name__)


def _sizes(text: str):
    try:
        sizes = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise AugTreeError(f"--sizes 必须是逗号分隔的整数: {text!r}")
    if not sizes:
        raise AugTreeError("--sizes 不能为空")
    return sizes


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("bench", parents=parents, help="随机实例上的计时实验")
    parser.add_argument("--algo", required=True, choices=BENCH_ALGOS)
    parser.add_argument("--sizes", required=True, help="n1,n2,...")
    parser.add_argument("--k", type=int, default=3)
    parser.add_argument("--reps", type=int, default=1)
    parser.add_argument("--family", default=Family.RANDOM_L1.value, choices=[Family.RANDOM_L1.value, Family.PATH_L1.value])
    parser.add_argument("--eps", type=float, default=0.5, help="ptas 的 ε")
    parser.set_defaults(handler=handle_bench)


def handle_bench(config: RunConfig) -> int:
    opts = config.options
    rows = bench_service.run_bench(
        opts["algo"],
        _sizes(opts["sizes"]),
        opts.get("k", 3),
        reps=opts.get("reps", 1),
        seed=config.seed,
        family=opts.get("family"),
        eps=opts.get("eps", 0.5),
    )
    for row in rows:
        print(f"{row.algo} n={row.n} k={row.k} rep={row.rep}: {row.seconds:.4f}s value={row.value} queries={row.queries}")
    if config.output:
        bench_service.write_csv(rows, config.output)
    return 0
