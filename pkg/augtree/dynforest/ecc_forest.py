import heapq
import logging
from collections import Counter
from typing import Dict, List, Optional, Tuple
from augtree.core.tree import Tree
from augtree.exceptions import ForestError


logger = logging.getLogger(__name__)

# 编码键：value * SHIFT + (SHIFT - 1 - witness)，同值时取编号最小的见证点
SHIFT_BITS = 32
SHIFT = 1 << SHIFT_BITS
LOW = SHIFT - 1
NEG = -(1 << 200)
NEGV = -(1 << 120)


def _decode(key: int) -> Tuple[int, int]:
    return key >> SHIFT_BITS, LOW - (key & LOW)


class _LazyHeap:
    """支持惰性删除的最大堆"""

    __slots__ = ("_heap", "_gone")

    def __init__(self):
        self._heap: List[int] = []
        self._gone: Counter = Counter()

    def push(self, key: int) -> None:
        heapq.heappush(self._heap, -key)

    def discard(self, key: int) -> None:
        self._gone[key] += 1

    def _clean(self) -> None:
        h, gone = self._heap, self._gone
        while h and gone[-h[0]]:
            gone[-h[0]] -= 1
            heapq.heappop(h)

    def top(self) -> Optional[int]:
        self._clean()
        return -self._heap[0] if self._heap else None

    def top2(self) -> Tuple[Optional[int], Optional[int]]:
        self._clean()
        if not self._heap:
            return None, None
        first = -heapq.heappop(self._heap)
        second = self.top()
        heapq.heappush(self._heap, -first)
        return first, second


class EccForest:
    """
    支持 link/cut 与离心率查询的边带权动态森林

    实现为带虚子树信息的 link-cut 树：每个顶点是一个节点（权 0，可作为见证点），
    每条边也是一个节点（权为边代价，不可作为见证点）。辅助树节点 x 维护
      sum  - 辅助子树对应路径段的权和
      lmax - 从路径段最上端到结构内任一顶点的最大距离（编码键）
      rmax - 从路径段最下端出发的同一量
    虚孩子的 lmax 存放在每个节点的惰性删除堆中。access(v) 之后 rmax[v] 即 v 的离心率。
    track_diameter=True 时额外维护每个簇的直径（用于辅助顶点黑盒校验）。
    """

    def __init__(self, n: int, track_diameter: bool = False):
        self.n = n
        self.track_diameter = track_diameter
        self._left: List[int] = []
        self._right: List[int] = []
        self._par: List[int] = []
        self._rev: List[bool] = []
        self._w: List[int] = []
        self._sum: List[int] = []
        self._lmax: List[int] = []
        self._rmax: List[int] = []
        self._cand: List[bool] = []
        self._diam: List[int] = []
        self._heap: Dict[int, _LazyHeap] = {}
        self._dheap: Dict[int, _LazyHeap] = {}
        self._free: List[int] = []
        self._edge: Dict[Tuple[int, int], int] = {}
        for v in range(n):
            self._alloc(0, True)

    @classmethod
    def from_tree(cls, tree: Tree, track_diameter: bool = False) -> "EccForest":
        """批量构建：所有辅助树为单点，虚孩子信息自底向上一次性填好"""
        forest = cls(tree.n, track_diameter=track_diameter)
        parent, order = tree.rooted()
        sequence = [order[0]]
        for v in order[1:]:
            p = parent[v]
            e = forest._alloc(tree.edge_cost(p, v), False)
            forest._edge[(p, v) if p < v else (v, p)] = e
            forest._par[e] = p
            forest._par[v] = e
            sequence.append(e)
            sequence.append(v)
        for x in reversed(sequence):
            forest._pull(x)
            p = forest._par[x]
            if p >= 0:
                forest._add_virtual(p, x)
        return forest

    # ---------- 节点存储 ----------

    def _alloc(self, weight: int, candidate: bool) -> int:
        if self._free:
            x = self._free.pop()
            self._left[x] = self._right[x] = self._par[x] = -1
            self._rev[x] = False
            self._w[x] = weight
            self._cand[x] = candidate
            self._heap.pop(x, None)
            self._dheap.pop(x, None)
        else:
            x = len(self._w)
            if x >= SHIFT:
                raise ForestError("节点数超过编码上限")
            self._left.append(-1)
            self._right.append(-1)
            self._par.append(-1)
            self._rev.append(False)
            self._w.append(weight)
            self._sum.append(0)
            self._lmax.append(NEG)
            self._rmax.append(NEG)
            self._cand.append(candidate)
            self._diam.append(NEGV)
        self._pull(x)
        return x

    def _release(self, x: int) -> None:
        self._heap.pop(x, None)
        self._dheap.pop(x, None)
        self._free.append(x)

    # ---------- 聚合 ----------

    def _add_virtual(self, x: int, child: int) -> None:
        h = self._heap.get(x)
        if h is None:
            h = self._heap[x] = _LazyHeap()
        h.push(self._lmax[child])
        if self.track_diameter:
            d = self._dheap.get(x)
            if d is None:
                d = self._dheap[x] = _LazyHeap()
            d.push(self._diam[child])

    def _remove_virtual(self, x: int, child: int) -> None:
        self._heap[x].discard(self._lmax[child])
        if self.track_diameter:
            self._dheap[x].discard(self._diam[child])

    def _pull(self, x: int) -> None:
        L, R = self._left[x], self._right[x]
        c = self._w[x]
        own = (LOW - x) if self._cand[x] else NEG
        h = self._heap.get(x)
        if h is not None:
            t = h.top()
            if t is not None and t > own:
                own = t
        if L >= 0:
            sL, lL, rL = self._sum[L], self._lmax[L], self._rmax[L]
        else:
            sL, lL, rL = 0, NEG, NEG
        if R >= 0:
            sR, lR, rR = self._sum[R], self._lmax[R], self._rmax[R]
        else:
            sR, lR, rR = 0, NEG, NEG

        off = (sL + c) << SHIFT_BITS
        best = lL
        if off + own > best:
            best = off + own
        if off + lR > best:
            best = off + lR
        self._lmax[x] = best

        off = (sR + c) << SHIFT_BITS
        best = rR
        if off + own > best:
            best = off + own
        if off + rL > best:
            best = off + rL
        self._rmax[x] = best

        self._sum[x] = sL + c + sR
        if self.track_diameter:
            self._pull_diameter(x, L, R, c, h, lR, rL)

    def _pull_diameter(self, x: int, L: int, R: int, c: int, h, lR: int, rL: int) -> None:
        val = lambda key: key >> SHIFT_BITS if key >= 0 else NEGV
        base = 0 if self._cand[x] else NEGV
        v1, v2 = base, NEGV
        if h is not None:
            t1, t2 = h.top2()
            for t in (t1, t2):
                if t is None:
                    continue
                tv = val(t)
                if tv > v1:
                    v1, v2 = tv, v1
                elif tv > v2:
                    v2 = tv
        best = base
        if L >= 0 and self._diam[L] > best:
            best = self._diam[L]
        if R >= 0 and self._diam[R] > best:
            best = self._diam[R]
        d = self._dheap.get(x)
        if d is not None:
            t = d.top()
            if t is not None and t > best:
                best = t
        left_arm = val(rL)
        right_arm = val(lR)
        down = v1 if v1 > right_arm else right_arm
        best = max(best, left_arm + c + down, right_arm + c + v1, v1 + c + v2)
        self._diam[x] = best if best > NEGV else NEGV

    def _toggle(self, x: int) -> None:
        self._left[x], self._right[x] = self._right[x], self._left[x]
        self._lmax[x], self._rmax[x] = self._rmax[x], self._lmax[x]
        self._rev[x] = not self._rev[x]

    def _push(self, x: int) -> None:
        if self._rev[x]:
            L, R = self._left[x], self._right[x]
            if L >= 0:
                self._toggle(L)
            if R >= 0:
                self._toggle(R)
            self._rev[x] = False

    # ---------- 伸展树 ----------

    def _is_root(self, x: int) -> bool:
        p = self._par[x]
        return p < 0 or (self._left[p] != x and self._right[p] != x)

    def _rotate(self, x: int) -> None:
        left, right, par = self._left, self._right, self._par
        p = par[x]
        g = par[p]
        if not self._is_root(p):
            if left[g] == p:
                left[g] = x
            else:
                right[g] = x
        par[x] = g
        if left[p] == x:
            b = right[x]
            left[p] = b
            right[x] = p
        else:
            b = left[x]
            right[p] = b
            left[x] = p
        if b >= 0:
            par[b] = p
        par[p] = x
        self._pull(p)
        self._pull(x)

    def _splay(self, x: int) -> None:
        path = [x]
        y = x
        while not self._is_root(y):
            y = self._par[y]
            path.append(y)
        for y in reversed(path):
            self._push(y)
        left, par = self._left, self._par
        while not self._is_root(x):
            p = par[x]
            if not self._is_root(p):
                g = par[p]
                if (left[g] == p) == (left[p] == x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)

    def _access(self, x: int) -> None:
        last = -1
        y = x
        while y >= 0:
            self._splay(y)
            old = self._right[y]
            if old >= 0:
                self._add_virtual(y, old)
            if last >= 0:
                self._remove_virtual(y, last)
            self._right[y] = last
            self._pull(y)
            last = y
            y = self._par[y]
        self._splay(x)

    def _evert(self, x: int) -> None:
        self._access(x)
        self._toggle(x)

    def _find_root(self, x: int) -> int:
        self._access(x)
        y = x
        self._push(y)
        while self._left[y] >= 0:
            y = self._left[y]
            self._push(y)
        self._splay(y)
        return y

    def _link_nodes(self, a: int, b: int) -> None:
        self._evert(a)
        self._access(b)
        self._par[a] = b
        self._add_virtual(b, a)
        self._pull(b)

    def _cut_nodes(self, a: int, b: int) -> None:
        self._evert(a)
        self._access(b)
        if self._left[b] != a:
            raise ForestError(f"cut 失败: 节点 {a} 与 {b} 不相邻")
        self._left[b] = -1
        self._par[a] = -1
        self._pull(b)

    # ---------- 对外接口 ----------

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge

    def connected(self, u: int, v: int) -> bool:
        return u == v or self._find_root(u) == self._find_root(v)

    def link(self, u: int, v: int, w: int) -> None:
        key = (u, v) if u < v else (v, u)
        if u == v or key in self._edge or self.connected(u, v):
            raise ForestError(f"link 失败: {u} 与 {v} 已在同一棵树中")
        if w < 0:
            raise ForestError(f"边权必须非负: ({u}, {v}) w={w}")
        e = self._alloc(w, False)
        self._link_nodes(u, e)
        self._link_nodes(e, v)
        self._edge[key] = e

    def cut(self, u: int, v: int) -> int:
        """删除边 (u, v)，返回其权"""
        key = (u, v) if u < v else (v, u)
        e = self._edge.pop(key, None)
        if e is None:
            raise ForestError(f"cut 失败: 边 ({u}, {v}) 不存在")
        w = self._w[e]
        self._cut_nodes(u, e)
        self._cut_nodes(e, v)
        self._release(e)
        return w

    def eccentricity(self, v: int) -> Tuple[int, int]:
        """(v 所在树中的最大距离, 取到该距离的编号最小顶点)"""
        self._access(v)
        return _decode(self._rmax[v])

    def diameter(self, v: int) -> int:
        if not self.track_diameter:
            raise ForestError("未开启直径维护 (track_diameter=False)")
        self._access(v)
        return self._diam[v]

    def eccentricity_via_diameter(self, v: int) -> int:
        """黑盒校验：挂一个权为 D 的辅助顶点，新直径减去 D 即离心率"""
        D = self.diameter(v)
        aux = self._alloc(0, True)
        e = self._alloc(D, False)
        self._link_nodes(v, e)
        self._link_nodes(e, aux)
        D2 = self.diameter(v)
        self._cut_nodes(v, e)
        self._cut_nodes(e, aux)
        self._release(e)
        self._release(aux)
        return D2 - D

    def edges(self) -> List[Tuple[int, int, int]]:
        return sorted((u, v, self._w[e]) for (u, v), e in self._edge.items())
