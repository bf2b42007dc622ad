import logging
from typing import List, Optional
from augtree.core.instance import ShortcutSet
from augtree.core.tree import Tree
from augtree.diameter.dijkstra import AdjList, sssp


logger = logging.getLogger(__name__)


def augmented_adjacency(tree: Tree, shortcuts: Optional[ShortcutSet] = None) -> AdjList:
    """T+S 的显式邻接表（n 个顶点，n-1+k 条边）"""
    adj = [list(nb) for nb in tree.adjacency()]
    for s in shortcuts or ():
        adj[s.u].append((s.v, s.cost))
        adj[s.v].append((s.u, s.cost))
    return adj


def naive_eccentricity(tree: Tree, shortcuts: Optional[ShortcutSet], source: int) -> int:
    return max(sssp(augmented_adjacency(tree, shortcuts), source))


def naive_all_pairs(tree: Tree, shortcuts: Optional[ShortcutSet] = None) -> List[List[int]]:
    adj = augmented_adjacency(tree, shortcuts)
    return [sssp(adj, s) for s in range(tree.n)]


def naive_diameter(tree: Tree, shortcuts: Optional[ShortcutSet] = None) -> int:
    """每个顶点跑一次 Dijkstra，O(n^2 log n)"""
    adj = augmented_adjacency(tree, shortcuts)
    return max(max(sssp(adj, s)) for s in range(tree.n))
