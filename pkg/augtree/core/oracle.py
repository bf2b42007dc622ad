import logging
from abc import ABC, abstractmethod
from typing import Any, Optional, Sequence, Set, Tuple
import numpy as np
from augtree.exceptions import CostFormatError
from augtree.schemas import OracleKind


logger = logging.getLogger(__name__)


class CostOracle(ABC):
    """
    带计数器的代价预言机

    每次调用 cost() 计数加 1（包括重复查询，调用方可自行缓存）。
    开启 track_queries() 后还会记录被查询过的无序顶点对。
    """

    kind: OracleKind
    metric: bool = False

    def __init__(self, n: int):
        self.n = n
        self.query_count = 0
        self._queried: Optional[Set[Tuple[int, int]]] = None

    def cost(self, u: int, v: int) -> int:
        self.query_count += 1
        if self._queried is not None:
            self._queried.add((u, v) if u < v else (v, u))
        if u == v:
            return 0
        return self._lookup(u, v)

    @abstractmethod
    def _lookup(self, u: int, v: int) -> int:
        ...

    @abstractmethod
    def payload(self) -> Any:
        """用于序列化和相等比较的负载"""

    @abstractmethod
    def clone(self) -> "CostOracle":
        """计数器归零的独立副本"""

    def track_queries(self, enabled: bool = True) -> None:
        self._queried = set() if enabled else None

    @property
    def queried_pairs(self) -> Set[Tuple[int, int]]:
        return set(self._queried) if self._queried is not None else set()

    def reset_queries(self) -> None:
        self.query_count = 0
        if self._queried is not None:
            self._queried = set()

    def __eq__(self, other) -> bool:
        if not isinstance(other, CostOracle):
            return NotImplemented
        return self.kind == other.kind and self.n == other.n and self._payload_equal(other)

    def _payload_equal(self, other: "CostOracle") -> bool:
        return self.payload() == other.payload()

    __hash__ = None


class MatrixOracle(CostOracle):
    """显式对称矩阵"""

    kind = OracleKind.EXPLICIT

    def __init__(self, matrix: Sequence[Sequence[int]], metric: bool = False):
        arr = np.asarray(matrix, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise CostFormatError(f"代价矩阵必须是方阵，实际形状: {arr.shape}")
        if not np.array_equal(arr, arr.T):
            raise CostFormatError("代价矩阵不对称")
        if np.any(np.diag(arr) != 0):
            raise CostFormatError("代价矩阵对角线必须为 0")
        if np.any(arr < 0):
            raise CostFormatError("代价矩阵存在负值")
        super().__init__(arr.shape[0])
        self._matrix = arr
        self._rows = arr.tolist()
        self.metric = metric

    def _lookup(self, u: int, v: int) -> int:
        return self._rows[u][v]

    def payload(self) -> np.ndarray:
        return self._matrix

    def _payload_equal(self, other: CostOracle) -> bool:
        return np.array_equal(self._matrix, other.payload())

    def clone(self) -> "MatrixOracle":
        return MatrixOracle(self._matrix, metric=self.metric)


class L1Oracle(CostOracle):
    """整数网格点上的 L1 距离，严格满足三角不等式"""

    kind = OracleKind.L1
    metric = True

    def __init__(self, points: Sequence[Sequence[int]]):
        pts = [(int(p[0]), int(p[1])) for p in points]
        super().__init__(len(pts))
        self._points = pts

    def _lookup(self, u: int, v: int) -> int:
        (x1, y1), (x2, y2) = self._points[u], self._points[v]
        return abs(x1 - x2) + abs(y1 - y2)

    def payload(self):
        return list(self._points)

    def clone(self) -> "L1Oracle":
        return L1Oracle(self._points)


class SubsetOracle(CostOracle):
    """
    基础预言机在顶点子集上的计数视图

    vertex_map[i] 为局部顶点 i 对应的基础顶点；每次查询两个计数器都会增加。
    """

    def __init__(self, base: CostOracle, vertex_map: Sequence[int]):
        super().__init__(len(vertex_map))
        self.base = base
        self.vertex_map = list(vertex_map)
        self.kind = base.kind
        self.metric = base.metric

    def _lookup(self, u: int, v: int) -> int:
        return self.base.cost(self.vertex_map[u], self.vertex_map[v])

    def payload(self):
        return (self.base.payload(), tuple(self.vertex_map))

    def _payload_equal(self, other: CostOracle) -> bool:
        if not isinstance(other, SubsetOracle):
            return False
        return self.vertex_map == other.vertex_map and self.base == other.base

    def clone(self) -> "SubsetOracle":
        return SubsetOracle(self.base.clone(), self.vertex_map)
