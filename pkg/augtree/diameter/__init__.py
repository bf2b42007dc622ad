from augtree.diameter.dijkstra import dijkstra, sssp
from augtree.diameter.naive import naive_diameter, naive_eccentricity, naive_all_pairs, augmented_adjacency
from augtree.diameter.path import path_diameter, path_order
from augtree.diameter.graph import graph_diameter, ecc_from_source, tree_diameter, condensed_graph

__all__ = [
    "dijkstra", "sssp",
    "naive_diameter", "naive_eccentricity", "naive_all_pairs", "augmented_adjacency",
    "path_diameter", "path_order",
    "graph_diameter", "ecc_from_source", "tree_diameter", "condensed_graph",
]
