from augtree.dynforest.link_cut import LinkCutForest
from augtree.dynforest.marked_ancestor import MarkedAncestorStructure
from augtree.dynforest.ecc_forest import EccForest
from augtree.dynforest.reference import NaiveForest, NaiveMarkedAncestor, NaiveEccForest

__all__ = [
    "LinkCutForest", "MarkedAncestorStructure", "EccForest",
    "NaiveForest", "NaiveMarkedAncestor", "NaiveEccForest",
]
