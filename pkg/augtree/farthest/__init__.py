from augtree.farthest.structure import (
    FarthestReport,
    FarthestStructure,
    ShrunkEdge,
    ShrunkTree,
    ShrunkVertex,
)

__all__ = ["FarthestReport", "FarthestStructure", "ShrunkEdge", "ShrunkTree", "ShrunkVertex"]
