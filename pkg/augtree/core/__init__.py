from augtree.core.tree import Tree, tree_distances, path_tree, star_tree
from augtree.core.oracle import CostOracle, MatrixOracle, L1Oracle, SubsetOracle
from augtree.core.instance import Instance, Shortcut, ShortcutSet
from augtree.core.binarize import binarize
from augtree.core.generators import gen_random
from augtree.core.metric import verify_metric, cost_matrix
from augtree.core.io import load_instance, save_instance, loads_instance, dumps_instance

__all__ = [
    "Tree", "tree_distances", "path_tree", "star_tree",
    "CostOracle", "MatrixOracle", "L1Oracle", "SubsetOracle",
    "Instance", "Shortcut", "ShortcutSet",
    "binarize", "gen_random", "verify_metric", "cost_matrix",
    "load_instance", "save_instance", "loads_instance", "dumps_instance",
]
