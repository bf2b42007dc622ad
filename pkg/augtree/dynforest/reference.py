"""
朴素参考实现（测试开关 reference_structures=True 时替换对数结构）

接口与 LinkCutForest / MarkedAncestorStructure / EccForest 一致，查询代价为连通块大小。
"""
import logging
from typing import Any, Dict, List, Optional, Set, Tuple
from augtree.core.tree import Tree
from augtree.exceptions import ForestError


logger = logging.getLogger(__name__)


class NaiveForest:

    def __init__(self):
        self._adj: Dict[int, Set[int]] = {}
        self._payload: Dict[int, Any] = {}

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def add_vertex(self, v: int, payload: Any = None) -> None:
        if v in self._adj:
            raise ForestError(f"顶点已存在: {v}")
        self._adj[v] = set()
        self._payload[v] = payload

    def remove_vertex(self, v: int) -> None:
        if v not in self._adj:
            raise ForestError(f"顶点不存在: {v}")
        if self._adj[v]:
            raise ForestError(f"顶点 {v} 仍有邻居 {sorted(self._adj[v])}，不能删除")
        del self._adj[v]
        del self._payload[v]

    def payload(self, v: int) -> Any:
        if v not in self._payload:
            raise ForestError(f"顶点不存在: {v}")
        return self._payload[v]

    def set_payload(self, v: int, payload: Any) -> None:
        if v not in self._payload:
            raise ForestError(f"顶点不存在: {v}")
        self._payload[v] = payload

    def component(self, v: int) -> Set[int]:
        if v not in self._adj:
            raise ForestError(f"顶点不存在: {v}")
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in self._adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def find_root(self, v: int) -> int:
        return min(self.component(v))

    def connected(self, u: int, v: int) -> bool:
        return v in self.component(u)

    def link(self, u: int, v: int) -> None:
        if self.connected(u, v):
            raise ForestError(f"link 失败: {u} 与 {v} 已在同一棵树中")
        self._adj[u].add(v)
        self._adj[v].add(u)

    def cut(self, u: int, v: int) -> None:
        if u not in self._adj or v not in self._adj[u]:
            raise ForestError(f"cut 失败: 边 ({u}, {v}) 不存在")
        self._adj[u].discard(v)
        self._adj[v].discard(u)

    def neighbors(self, v: int) -> Set[int]:
        return set(self._adj[v])

    def vertices(self) -> List[int]:
        return sorted(self._adj)

    def export(self) -> List[Tuple[int, int]]:
        return sorted((u, v) for u, vs in self._adj.items() for v in vs if u < v)


class NaiveMarkedAncestor:
    """沿父指针向上扫描"""

    def __init__(self, root: int, kids: List[List[int]]):
        self.n = len(kids)
        self.root = root
        self._parent = [-1] * self.n
        for v, cs in enumerate(kids):
            for c in cs:
                self._parent[c] = v
        self._marked = [False] * self.n

    def mark(self, v: int) -> None:
        self._marked[v] = True

    def unmark(self, v: int) -> None:
        self._marked[v] = False

    def is_marked(self, v: int) -> bool:
        return self._marked[v]

    def closest_marked_ancestor(self, v: int) -> Optional[int]:
        x = self._parent[v]
        while x >= 0:
            if self._marked[x]:
                return x
            x = self._parent[x]
        return None


class NaiveEccForest:
    """每次查询遍历整个连通块"""

    def __init__(self, n: int, track_diameter: bool = False):
        self.n = n
        self.track_diameter = track_diameter
        self._adj: List[Dict[int, int]] = [dict() for _ in range(n)]

    @classmethod
    def from_tree(cls, tree: Tree, track_diameter: bool = False) -> "NaiveEccForest":
        forest = cls(tree.n, track_diameter=track_diameter)
        for u, v, c in tree.edges:
            forest._adj[u][v] = c
            forest._adj[v][u] = c
        return forest

    def _distances(self, v: int) -> Dict[int, int]:
        dist = {v: 0}
        stack = [v]
        while stack:
            x = stack.pop()
            for y, c in self._adj[x].items():
                if y not in dist:
                    dist[y] = dist[x] + c
                    stack.append(y)
        return dist

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def connected(self, u: int, v: int) -> bool:
        return v in self._distances(u)

    def link(self, u: int, v: int, w: int) -> None:
        if u == v or self.connected(u, v):
            raise ForestError(f"link 失败: {u} 与 {v} 已在同一棵树中")
        if w < 0:
            raise ForestError(f"边权必须非负: ({u}, {v}) w={w}")
        self._adj[u][v] = w
        self._adj[v][u] = w

    def cut(self, u: int, v: int) -> int:
        if v not in self._adj[u]:
            raise ForestError(f"cut 失败: 边 ({u}, {v}) 不存在")
        w = self._adj[u].pop(v)
        del self._adj[v][u]
        return w

    def eccentricity(self, v: int) -> Tuple[int, int]:
        dist = self._distances(v)
        best = max(dist.values())
        return best, min(x for x, d in dist.items() if d == best)

    def diameter(self, v: int) -> int:
        if not self.track_diameter:
            raise ForestError("未开启直径维护 (track_diameter=False)")
        return max(self.eccentricity(x)[0] for x in self._distances(v))

    def eccentricity_via_diameter(self, v: int) -> int:
        return self.eccentricity(v)[0]

    def edges(self) -> List[Tuple[int, int, int]]:
        return sorted((u, v, c) for u in range(self.n) for v, c in self._adj[u].items() if u < v)
