import logging
from typing import List, Optional


logger = logging.getLogger(__name__)


class MarkedAncestorStructure:
    """
    静态树上的标记集合 + 最近标记祖先查询

    Euler 括号序列：标记顶点在 tin 处记 +1、tout 处记 -1，用线段树维护
    (区间和, 区间内最小前缀和)。v 的最近标记真祖先即 tin[v] 之前最近的未匹配左括号，
    通过自右向左的下降搜索在 O(log n) 内找到。
    """

    def __init__(self, root: int, kids: List[List[int]]):
        n = len(kids)
        self.n = n
        self.root = root
        tin = [0] * n
        tout = [0] * n
        at = [-1] * (2 * n)
        clock = 0
        stack = [(root, False)]
        while stack:
            v, done = stack.pop()
            if done:
                tout[v] = clock
                clock += 1
                continue
            tin[v] = clock
            at[clock] = v
            clock += 1
            stack.append((v, True))
            for c in reversed(kids[v]):
                stack.append((c, False))
        self._tin = tin
        self._tout = tout
        self._at = at

        size = 1
        while size < 2 * n:
            size <<= 1
        self._size = size
        self._sum = [0] * (2 * size)
        self._min = [0] * (2 * size)
        self._marked = [False] * n

    # ---------- 线段树 ----------

    def _set(self, pos: int, val: int) -> None:
        i = pos + self._size
        s, m = self._sum, self._min
        s[i] = val
        m[i] = val
        i >>= 1
        while i:
            l, r = 2 * i, 2 * i + 1
            s[i] = s[l] + s[r]
            a, b = m[l], s[l] + m[r]
            m[i] = a if a < b else b
            i >>= 1

    def _prefix(self, pos: int) -> int:
        """sum[0..pos]"""
        if pos < 0:
            return 0
        total = 0
        lo = self._size
        hi = pos + self._size + 1
        s = self._sum
        while lo < hi:
            if lo & 1:
                total += s[lo]
                lo += 1
            if hi & 1:
                hi -= 1
                total += s[hi]
            lo >>= 1
            hi >>= 1
        return total

    def _find(self, node: int, lo: int, hi: int, base: int, lim: int, t: int) -> int:
        # base = 前缀和 E(lo - 1)；返回 [lo, min(hi, lim)] 中最右的 i 使 E(i) <= t
        if lo > lim:
            return -1
        if hi <= lim and base + self._min[node] > t:
            return -1
        if lo == hi:
            return lo if base + self._sum[node] <= t else -1
        mid = (lo + hi) >> 1
        res = self._find(2 * node + 1, mid + 1, hi, base + self._sum[2 * node], lim, t)
        if res >= 0:
            return res
        return self._find(2 * node, lo, mid, base, lim, t)

    # ---------- 对外接口 ----------

    def mark(self, v: int) -> None:
        if self._marked[v]:
            return
        self._marked[v] = True
        self._set(self._tin[v], 1)
        self._set(self._tout[v], -1)

    def unmark(self, v: int) -> None:
        if not self._marked[v]:
            return
        self._marked[v] = False
        self._set(self._tin[v], 0)
        self._set(self._tout[v], 0)

    def is_marked(self, v: int) -> bool:
        return self._marked[v]

    def closest_marked_ancestor(self, v: int) -> Optional[int]:
        """v 的最近标记真祖先（不含 v 本身），不存在时返回 None"""
        q = self._tin[v]
        if q == 0:
            return None
        t = self._prefix(q - 1) - 1
        i = self._find(1, 0, self._size - 1, 0, q - 2, t)
        if i >= 0:
            p = i + 1
        elif t >= 0:
            p = 0
        else:
            return None
        return self._at[p]
