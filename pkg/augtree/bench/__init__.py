from augtree.bench.service import BENCH_ALGOS, BenchService, bench_service, random_shortcuts

run_bench = bench_service.run_bench

__all__ = ["BENCH_ALGOS", "BenchService", "bench_service", "random_shortcuts", "run_bench"]
