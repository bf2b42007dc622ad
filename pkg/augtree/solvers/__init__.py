from augtree.solvers.gonzalez import farthest_first, gonzalez, spread_radius
from augtree.solvers.exact import exact_doat, candidate_pairs, estimated_work
from augtree.solvers.approx import approx4
from augtree.solvers.ptas import ReducedInstance, build_reduced, size_premise_holds, eta_for, ptas, split_generalized
from augtree.solvers.service import SolverService, solver_service

__all__ = [
    "farthest_first", "gonzalez", "spread_radius",
    "exact_doat", "candidate_pairs", "estimated_work",
    "approx4",
    "ReducedInstance", "build_reduced", "size_premise_holds", "eta_for", "ptas", "split_generalized",
    "SolverService", "solver_service",
]
