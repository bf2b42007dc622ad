from augtree.lowerbound.construction import (
    LbLayout,
    LowerBoundOracle,
    family_k,
    gen_lb,
    lb_full_graph_costs,
    lb_tree,
    lb_vertex_classes,
    resolve_params,
)
from augtree.lowerbound.service import LowerBoundService, lowerbound_service

check_facts = lowerbound_service.check_facts
adversary_experiment = lowerbound_service.adversary_experiment

__all__ = [
    "LbLayout", "LowerBoundOracle", "family_k", "gen_lb", "lb_full_graph_costs", "lb_tree", "lb_vertex_classes", "resolve_params",
    "LowerBoundService", "lowerbound_service", "check_facts", "adversary_experiment",
]
