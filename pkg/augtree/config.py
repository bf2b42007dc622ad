from pydantic_settings import BaseSettings
from functools import lru_cache


class Settings(BaseSettings):
    # 应用配置
    app_name: str = "augtree"
    debug: bool = False
    log_level: str = "INFO"
    log_json: bool = False

    # 精确求解配置
    exact_budget: int = 10**10
    dense_eval_max_n: int = 96
    exact_chunk: int = 256

    # 并行与随机
    threads: int = 1
    default_seed: int = 0
    gonzalez_start: int = 0

    # 测试/调试开关
    reference_structures: bool = False
    debug_checks: bool = False

    # 下界实例配置
    lb_validate_max_vertices: int = 80
    lb_representatives: int = 4
    adversary_samples: int = 5

    # 近似算法配置
    ptas_compare_star4: bool = False

    # 度量校验
    metric_sample_size: int = 10000

    class Config:
        env_file = ".env"
        env_prefix = "AUGTREE_"
        case_sensitive = False


@lru_cache()
def get_settings() -> Settings:
    return Settings()
