import logging
from augtree.config import get_settings
from augtree.core.generators import gen_random
from augtree.core.io import load_instance, save_instance
from augtree.core.metric import verify_metric
from augtree.exceptions import AugTreeError
from augtree.schemas import Family, LowerBoundParams, MetricReport, RunConfig


logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    gen = subparsers.add_parser("gen", parents=parents, help="生成 DOAT 实例")
    gen.add_argument("--family", required=True, choices=[f.value for f in Family])
    gen.add_argument("--n", type=int, default=None, help="随机族的顶点数")
    gen.add_argument("--n-star", dest="n_star", type=int, default=None, help="下界族每个星的顶点数")
    gen.add_argument("--k", type=int, default=None, help="捷径预算（随机族默认 3，lbk 族必须 > 3）")
    gen.add_argument("--variant", default="Iab", choices=["I", "Iab"], help="下界族的变体")
    gen.add_argument("--a", type=int, default=None, help="I_{a,b} 的 a (L_2 中)")
    gen.add_argument("--b", type=int, default=None, help="I_{a,b} 的 b (L_3 中)")
    gen.set_defaults(handler=handle_gen)

    verify = subparsers.add_parser("verify", parents=parents, help="检查实例的度量性与树边嵌入")
    verify.add_argument("-i", "--input", required=True, help="DOAT 实例文件")
    verify.add_argument("--full", action="store_true", help="检查全部三元组（默认抽样）")
    verify.add_argument("--samples", type=int, default=None, help="抽样三元组数")
    verify.set_defaults(handler=handle_verify)


def handle_gen(config: RunConfig) -> int:
    opts = config.options
    family = Family(opts["family"])
    if not config.output:
        raise AugTreeError("gen 需要 -o/--output 指定输出文件")

    if family in (Family.LB3, Family.LBK):
        if opts.get("n_star") is None:
            raise AugTreeError(f"{family.value} 需要 --n-star")
        from augtree.lowerbound.construction import family_k, gen_lb

        k = family_k(family, opts.get("k"))
        params = LowerBoundParams(n_star=opts["n_star"], k=k, variant=opts.get("variant", "Iab"), a=opts.get("a"), b=opts.get("b"))
        instance = gen_lb(params)
    else:
        if opts.get("n") is None:
            raise AugTreeError(f"{family.value} 需要 --n")
        instance = gen_random(opts["n"], 3 if opts.get("k") is None else opts["k"], config.seed, family)

    save_instance(instance, config.output)
    print(f"已生成 {instance!r} -> {config.output}")
    return 0


def handle_verify(config: RunConfig) -> int:
    """度量检查 + 树边代价与预言机一致性检查，失败时退出码 1"""
    opts = config.options
    instance = load_instance(opts["input"])
    mode = "full" if opts.get("full") else "sampled"
    samples = opts.get("samples") or get_settings().metric_sample_size

    if instance.n >= 3:
        ok, violation = verify_metric(instance.oracle, instance.n, mode=mode, samples=samples, seed=config.seed)
    else:
        ok, violation = True, None
    mismatches = instance.check_embedding()
    report = MetricReport(
        ok=ok and not mismatches,
        mode=mode,
        checked=instance.oracle.query_count,
        violation=violation,
        embedding_mismatches=mismatches,
    )
    text = report.model_dump_json(indent=2)
    print(text)
    if config.output:
        with open(config.output, "w", encoding="utf-8") as f:
            f.write(text)
    if not report.ok:
        logger.warning(f"⚠️ 实例校验未通过: violation={violation}, 嵌入不一致={mismatches}")
        return 1
    return 0
