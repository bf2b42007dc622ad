import logging
from typing import Any, Dict, List, Optional, Set, Tuple
from augtree.exceptions import ForestError


logger = logging.getLogger(__name__)


class Node:
    __slots__ = ("key", "left", "right", "parent", "rev", "payload")

    def __init__(self, key: int, payload: Any = None):
        self.key = key
        self.left: Optional["Node"] = None
        self.right: Optional["Node"] = None
        self.parent: Optional["Node"] = None
        self.rev = False
        self.payload = payload

    def is_root(self) -> bool:
        p = self.parent
        return p is None or (p.left is not self and p.right is not self)

    def push(self) -> None:
        if self.rev:
            self.rev = False
            self.left, self.right = self.right, self.left
            if self.left:
                self.left.rev = not self.left.rev
            if self.right:
                self.right.rev = not self.right.rev

    def rotate(self) -> None:
        p = self.parent
        g = p.parent
        if not p.is_root():
            if g.left is p:
                g.left = self
            else:
                g.right = self
        self.parent = g
        if p.left is self:
            b = self.right
            p.left = b
            self.right = p
        else:
            b = self.left
            p.right = b
            self.left = p
        if b:
            b.parent = p
        p.parent = self

    def splay(self) -> None:
        path = [self]
        x = self
        while not x.is_root():
            x = x.parent
            path.append(x)
        for y in reversed(path):
            y.push()
        while not self.is_root():
            p = self.parent
            if not p.is_root():
                g = p.parent
                if (g.left is p) == (p.left is self):
                    p.rotate()
                else:
                    self.rotate()
            self.rotate()

    def access(self) -> None:
        last = None
        y = self
        while y:
            y.splay()
            y.right = last
            last = y
            y = y.parent
        self.splay()

    def evert(self) -> None:
        self.access()
        self.rev = not self.rev
        self.push()


class LinkCutForest:
    """
    基于伸展树的 link-cut 森林

    维护动态森林（顶点增删、link、cut），并保存邻接表以便 O(size) 导出。
    """

    def __init__(self):
        self._nodes: Dict[int, Node] = {}
        self._adj: Dict[int, Set[int]] = {}

    def __contains__(self, v: int) -> bool:
        return v in self._nodes

    def __len__(self) -> int:
        return len(self._nodes)

    def add_vertex(self, v: int, payload: Any = None) -> None:
        if v in self._nodes:
            raise ForestError(f"顶点已存在: {v}")
        self._nodes[v] = Node(v, payload)
        self._adj[v] = set()

    def remove_vertex(self, v: int) -> None:
        if v not in self._nodes:
            raise ForestError(f"顶点不存在: {v}")
        if self._adj[v]:
            raise ForestError(f"顶点 {v} 仍有邻居 {sorted(self._adj[v])}，不能删除")
        del self._nodes[v]
        del self._adj[v]

    def payload(self, v: int) -> Any:
        return self._node(v).payload

    def set_payload(self, v: int, payload: Any) -> None:
        self._node(v).payload = payload

    def _node(self, v: int) -> Node:
        try:
            return self._nodes[v]
        except KeyError:
            raise ForestError(f"顶点不存在: {v}")

    def find_root(self, v: int) -> int:
        x = self._node(v)
        x.access()
        x.push()
        while x.left:
            x = x.left
            x.push()
        x.splay()
        return x.key

    def connected(self, u: int, v: int) -> bool:
        if u == v:
            return u in self._nodes
        return self.find_root(u) == self.find_root(v)

    def link(self, u: int, v: int) -> None:
        if self.connected(u, v):
            raise ForestError(f"link 失败: {u} 与 {v} 已在同一棵树中")
        x, y = self._node(u), self._node(v)
        x.evert()
        x.parent = y
        self._adj[u].add(v)
        self._adj[v].add(u)

    def cut(self, u: int, v: int) -> None:
        if u not in self._adj or v not in self._adj[u]:
            raise ForestError(f"cut 失败: 边 ({u}, {v}) 不存在")
        x, y = self._node(u), self._node(v)
        x.evert()
        y.access()
        # 此时 y 的辅助树中只剩路径 u-v，u 为 y 的左孩子
        left = y.left
        if left is not x:
            raise ForestError(f"cut 失败: 森林结构与邻接表不一致 ({u}, {v})")
        left.parent = None
        y.left = None
        self._adj[u].discard(v)
        self._adj[v].discard(u)

    def neighbors(self, v: int) -> Set[int]:
        return set(self._adj[v])

    def vertices(self) -> List[int]:
        return sorted(self._nodes)

    def export(self) -> List[Tuple[int, int]]:
        """当前森林的边（u < v，按字典序）"""
        return sorted((u, v) for u, vs in self._adj.items() for v in vs if u < v)
