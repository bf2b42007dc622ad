import logging
import re
from typing import Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple
from augtree.core.oracle import CostOracle
from augtree.core.tree import Tree
from augtree.exceptions import ShortcutError


logger = logging.getLogger(__name__)

_LITERAL = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*(?::\s*(\d+))?\s*$")


class Shortcut(NamedTuple):
    u: int
    v: int
    cost: int

    def key(self) -> Tuple[int, int]:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)


class ShortcutSet:
    """捷径集合 S：无向边 (u, v, cost) 列表"""

    def __init__(self, edges: Iterable[Sequence[int]] = ()):
        self.edges: List[Shortcut] = []
        seen = set()
        for e in edges:
            s = Shortcut(int(e[0]), int(e[1]), int(e[2]))
            if s.u == s.v:
                raise ShortcutError(f"捷径端点必须不同: {s}")
            if s.cost < 0:
                raise ShortcutError(f"捷径代价必须非负: {s}")
            if s.key() in seen:
                raise ShortcutError(f"重复捷径: {s.key()}")
            seen.add(s.key())
            self.edges.append(s)

    @classmethod
    def from_triples(cls, triples: Iterable[Sequence[int]]) -> "ShortcutSet":
        return cls(triples)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]], oracle: CostOracle) -> "ShortcutSet":
        """按预言机查询代价构造"""
        return cls((u, v, oracle.cost(u, v)) for u, v in pairs)

    @classmethod
    def parse(cls, text: Optional[str], oracle: Optional[CostOracle] = None) -> "ShortcutSet":
        """
        解析捷径字面量 "u-v:cost,u-v"

        省略代价时从 oracle 查询。
        """
        if text is None or not text.strip():
            return cls()
        triples = []
        for item in text.split(","):
            m = _LITERAL.match(item)
            if not m:
                raise ShortcutError(f"无法解析捷径字面量: {item!r}")
            u, v = int(m.group(1)), int(m.group(2))
            if m.group(3) is not None:
                c = int(m.group(3))
            elif oracle is not None:
                if not (0 <= u < oracle.n and 0 <= v < oracle.n):
                    raise ShortcutError(f"捷径端点越界: {u}-{v}，n={oracle.n}")
                c = oracle.cost(u, v)
            else:
                raise ShortcutError(f"捷径 {u}-{v} 缺少代价且没有可用的预言机")
            triples.append((u, v, c))
        return cls(triples)

    def validate(self, tree: Tree, k: Optional[int] = None, generalized: bool = False) -> None:
        if k is not None and len(self.edges) > k:
            raise ShortcutError(f"捷径数 {len(self.edges)} 超过预算 k={k}")
        for s in self.edges:
            if not (0 <= s.u < tree.n and 0 <= s.v < tree.n):
                raise ShortcutError(f"捷径端点越界: {s}，n={tree.n}")
            if not generalized and tree.has_edge(s.u, s.v):
                raise ShortcutError(f"捷径与树边重合: {s.key()}")

    def endpoints(self) -> List[int]:
        out = set()
        for s in self.edges:
            out.add(s.u)
            out.add(s.v)
        return sorted(out)

    def triples(self) -> List[Tuple[int, int, int]]:
        return [tuple(s) for s in self.edges]

    def total_cost(self) -> int:
        return sum(s.cost for s in self.edges)

    def __iter__(self) -> Iterator[Shortcut]:
        return iter(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ShortcutSet):
            return NotImplemented
        norm = lambda ss: sorted((s.key(), s.cost) for s in ss.edges)
        return norm(self) == norm(other)

    def __repr__(self) -> str:
        body = ",".join(f"{s.u}-{s.v}:{s.cost}" for s in self.edges)
        return f"ShortcutSet({body})"


class Instance:
    """k-DOAT 实例：树 + 代价预言机 + 捷径预算 k"""

    def __init__(self, tree: Tree, oracle: CostOracle, k: int):
        if oracle.n != tree.n:
            raise ShortcutError(f"预言机顶点数 {oracle.n} 与树顶点数 {tree.n} 不一致")
        if k < 0:
            raise ShortcutError(f"k 必须非负: {k}")
        self.tree = tree
        self.oracle = oracle
        self.k = k

    @property
    def n(self) -> int:
        return self.tree.n

    def check_embedding(self) -> List[Tuple[int, int]]:
        """返回树边代价与预言机代价不一致的树边（会消耗 n-1 次查询）"""
        bad = []
        for u, v, c in self.tree.edges:
            if self.oracle.cost(u, v) != c:
                bad.append((min(u, v), max(u, v)))
        return bad

    def clone(self) -> "Instance":
        return Instance(self.tree, self.oracle.clone(), self.k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Instance):
            return NotImplemented
        return self.k == other.k and self.tree == other.tree and self.oracle == other.oracle

    __hash__ = None

    def __repr__(self) -> str:
        return f"Instance(n={self.n}, k={self.k}, oracle={self.oracle.kind.value})"
