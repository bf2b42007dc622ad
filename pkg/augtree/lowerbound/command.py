import logging
from augtree.lowerbound.construction import family_k
from augtree.lowerbound.service import lowerbound_service
from augtree.schemas import Algo, Family, LowerBoundParams, RunConfig


logger = logging.getLogger(__name__)

ADVERSARY_ALGOS = [Algo.STAR4.value, Algo.PTAS.value, Algo.EXACT.value]


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("adversary", parents=parents, help="下界实例上的对抗实验")
    parser.add_argument("--family", required=True, choices=[Family.LB3.value, Family.LBK.value])
    parser.add_argument("--n-star", dest="n_star", type=int, required=True, help="每个星的顶点数")
    parser.add_argument("--k", type=int, default=None, help="lbk 族的捷径预算 (必须 > 3)")
    parser.add_argument("--algo", required=True, choices=ADVERSARY_ALGOS)
    parser.add_argument("--samples", type=int, default=None, help="抽样的 (a, b) 对数")
    parser.add_argument("--eps", type=float, default=0.5, help="ptas 的 ε")
    parser.add_argument("--budget", type=int, default=None, help="exact 枚举工作量预算")
    parser.add_argument("--check-facts", dest="check_facts", action="store_true", help="同时校验构造的三条性质")
    parser.set_defaults(handler=handle_adversary)


def handle_adversary(config: RunConfig) -> int:
    opts = config.options
    k = family_k(Family(opts["family"]), opts.get("k"))
    params = LowerBoundParams(n_star=opts["n_star"], k=k)

    if opts.get("check_facts"):
        facts = lowerbound_service.check_facts(params, budget=opts.get("budget"))
        print(facts.model_dump_json(indent=2))

    report = lowerbound_service.adversary_experiment(
        params,
        opts["algo"],
        samples=opts.get("samples"),
        seed=config.seed,
        eps=opts.get("eps", 0.5),
        budget=opts.get("budget"),
    )
    for row in report.rows:
        print(f"{row.variant}: queries={row.queries} diam={row.diam} distinguished={row.distinguished}")
    print(f"L2×L3 未查询点对: {report.unqueried_pairs}/{report.total_pairs}")
    if config.output:
        lowerbound_service.write_csv(report, config.output)
    return 0
