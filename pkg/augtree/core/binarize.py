import logging
from typing import List, Tuple
from augtree.core.tree import Tree


logger = logging.getLogger(__name__)


def binarize(tree: Tree) -> Tuple[Tree, List[int]]:
    """
    把树变换为二叉树（以 tree.root 定根）

    对每个有 h >= 3 个孩子的顶点 v，删除 v 到孩子 v_1..v_h 的边，挂一棵以 v 为根、
    恰有 h 个叶子 u_1..u_h 的满二叉树（新增 2h-2 个顶点，内部边代价 0），
    再连接 (u_i, v_i)，代价为原边 (v, v_i) 的代价。

    Returns:
        (二叉树, owner)：owner[x] 为新树顶点 x 对应的原顶点，原顶点映射到自身。
        新顶点编号从 n 开始顺序追加。
    """
    n = tree.n
    kids = tree.children()
    edges: List[Tuple[int, int, int]] = []
    owner = list(range(n))
    next_id = n

    for v in range(n):
        children = kids[v]
        h = len(children)
        if h <= 2:
            for c in children:
                edges.append((v, c, tree.edge_cost(v, c)))
            continue

        # 平衡满二叉树：队列中每个待展开的 (节点, 叶子区间)
        leaf_of = {}
        stack = [(v, 0, h)]
        while stack:
            node, lo, hi = stack.pop()
            if hi - lo == 1:
                leaf_of[lo] = node
                continue
            mid = (lo + hi) // 2
            for a, b in ((lo, mid), (mid, hi)):
                child = next_id
                next_id += 1
                owner.append(v)
                edges.append((node, child, 0))
                stack.append((child, a, b))
        for i, c in enumerate(children):
            edges.append((leaf_of[i], c, tree.edge_cost(v, c)))

    added = next_id - n
    if added:
        logger.debug(f"二叉化: n={n} 新增 {added} 个顶点")
    return Tree(next_id, edges, root=tree.root), owner
