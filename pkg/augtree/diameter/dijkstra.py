import heapq
from typing import Dict, Iterable, List, Mapping, Tuple


Adjacency = Mapping[int, Iterable[Tuple[int, int]]]
AdjList = List[List[Tuple[int, int]]]


def dijkstra(adj: Adjacency, source: int) -> Dict[int, int]:
    """二叉堆 Dijkstra，顶点编号任意（用于收缩图 G'）"""
    dist = {source: 0}
    pq = [(0, source)]
    while pq:
        d, u = heapq.heappop(pq)
        if d != dist[u]:
            continue
        for v, w in adj.get(u, ()):
            nd = d + w
            if v not in dist or nd < dist[v]:
                dist[v] = nd
                heapq.heappush(pq, (nd, v))
    return dist


def sssp(adj: AdjList, source: int) -> List[int]:
    """稠密编号 0..n-1 的单源最短路，不可达记为 -1"""
    n = len(adj)
    dist = [-1] * n
    dist[source] = 0
    pq = [(0, source)]
    while pq:
        d, u = heapq.heappop(pq)
        if d != dist[u]:
            continue
        for v, w in adj[u]:
            nd = d + w
            if dist[v] < 0 or nd < dist[v]:
                dist[v] = nd
                heapq.heappush(pq, (nd, v))
    return dist
