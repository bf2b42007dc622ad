from pydantic import BaseModel, Field
from typing import Optional, List, Dict, Any, Tuple
from enum import Enum


class Algo(str, Enum):
    EXACT = "exact"
    STAR4 = "star4"
    PTAS = "ptas"
    GONZALEZ = "gonzalez"


class OracleKind(str, Enum):
    EXPLICIT = "explicit"
    L1 = "l1"
    LB3 = "lb3"
    LBK = "lbk"


class Variant(str, Enum):
    I = "I"
    IAB = "Iab"


class Family(str, Enum):
    RANDOM_L1 = "random-l1"
    PATH_L1 = "path-l1"
    LB3 = "lb3"
    LBK = "lbk"


# 求解结果 Schema
class SolveResult(BaseModel):
    algo: str
    shortcuts: List[Tuple[int, int, int]] = Field(default_factory=list, description="(u, v, cost)")
    diam: int
    oracle_queries: int = 0
    elapsed: float = 0.0
    # ptas 约简实例统计
    epsilon: Optional[float] = None
    eta: Optional[int] = None
    branch_count: Optional[int] = None
    leaves: Optional[int] = None
    reduced_vertices: Optional[int] = None
    size_premise_holds: Optional[bool] = None
    certified: Optional[bool] = None

    def shortcut_set(self):
        from augtree.core.instance import ShortcutSet
        return ShortcutSet.from_triples(self.shortcuts)


class GonzalezResult(BaseModel):
    picks: List[int]
    radii: List[int] = Field(default_factory=list, description="每一步选点时的最大最小距离")
    spread: Optional[int] = None
    elapsed: float = 0.0


class DiameterResult(BaseModel):
    diam: int
    witness: Optional[Tuple[int, int]] = None
    elapsed: float = 0.0


class MetricReport(BaseModel):
    ok: bool
    mode: str
    checked: int
    violation: Optional[Tuple[int, int, int]] = None
    embedding_mismatches: List[Tuple[int, int]] = Field(default_factory=list)


# 下界实例相关 Schema
class LowerBoundParams(BaseModel):
    n_star: int
    k: int = 3
    variant: Variant = Variant.IAB
    a: Optional[int] = None
    b: Optional[int] = None

    @property
    def kind(self) -> OracleKind:
        return OracleKind.LB3 if self.k == 3 else OracleKind.LBK


class FactReport(BaseModel):
    n_star: int
    k: int
    a: int
    b: int
    shortcut_diam: int
    shortcut_bound_holds: bool
    plain_optimum: Optional[int] = None
    plain_bound_holds: Optional[bool] = None
    differing_pairs: List[Tuple[int, int]] = Field(default_factory=list)
    single_pair_holds: bool


class QueryRow(BaseModel):
    variant: str
    n_star: int
    k: int
    algo: str
    queries: int
    diam: int
    distinguished: bool


class QueryReport(BaseModel):
    rows: List[QueryRow] = Field(default_factory=list)
    unqueried_pairs: int
    queried_pairs: int
    total_pairs: int


class BenchRow(BaseModel):
    algo: str
    n: int
    k: int
    rep: int
    seconds: float
    value: int
    queries: int


# CSV 列顺序
QUERY_CSV_FIELDS = ["variant", "n_star", "k", "algo", "queries", "diam", "distinguished"]
BENCH_CSV_FIELDS = ["algo", "n", "k", "rep", "seconds", "value", "queries"]


class RunConfig(BaseModel):
    command: str
    seed: int = 0
    output: Optional[str] = None
    threads: int = Field(default=1, ge=1)
    options: Dict[str, Any] = Field(default_factory=dict)
