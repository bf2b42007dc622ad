from augtree.oracles.static_index import StaticTreeIndex

__all__ = ["StaticTreeIndex"]
