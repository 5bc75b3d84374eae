"""
Configuration for solvabilizer and graph computations.
"""

import os
from typing import Optional


CLOSURE_MODES = ("plain", "graded")


class Config:
    """Configuration for closures, enumeration caps and verification runs"""

    def __init__(
        self,
        workers: Optional[int] = None,
        closure: Optional[str] = None,
        iso_vertex_cap: int = 64,
        subspace_max_dim: int = 4,
        subspace_max_prime: int = 5,
        cubic_max_odd_dim: int = 8,
        exhaustive_limit: int = 256,
        trials: int = 8,
        instance_count: int = 20,
        seed: int = 1,
        show_progress: bool = False,
    ):
        """
        Initialize configuration.

        Args:
            workers: Thread-pool size for pair enumeration (env SOLVGRAPH_WORKERS, default 1)
            closure: "plain" or "graded" subalgebra closure (env SOLVGRAPH_CLOSURE, default plain)
            iso_vertex_cap: Largest graph handed to the isomorphism search
            subspace_max_dim: Largest dimension for exhaustive subspace enumeration
            subspace_max_prime: Largest p for exhaustive subspace enumeration
            cubic_max_odd_dim: Largest odd dimension for the p=3 cubic axiom check
            exhaustive_limit: Algebras with more elements are sampled during verification
            trials: Sample size used by sampled verification checks
            instance_count: Number of generated instances per verification run
            seed: Seed for the instance generator and samplers
            show_progress: Whether to draw progress bars
        """
        # Environment values may carry quotes
        workers_value = workers if workers is not None else self._clean_value(os.getenv("SOLVGRAPH_WORKERS"))
        self.workers = max(1, int(workers_value)) if workers_value else 1
        closure_value = closure or self._clean_value(os.getenv("SOLVGRAPH_CLOSURE")) or "plain"
        if closure_value not in CLOSURE_MODES:
            raise ValueError(f"Unknown closure mode '{closure_value}', expected one of {CLOSURE_MODES}")
        self.closure = closure_value
        self.iso_vertex_cap = iso_vertex_cap
        self.subspace_max_dim = subspace_max_dim
        self.subspace_max_prime = subspace_max_prime
        self.cubic_max_odd_dim = cubic_max_odd_dim
        self.exhaustive_limit = exhaustive_limit
        self.trials = trials
        self.instance_count = instance_count
        self.seed = seed
        self.show_progress = show_progress

    def _clean_value(self, value: Optional[str]) -> Optional[str]:
        """Strip whitespace and one pair of matching quotes; empty becomes None"""
        value = (value or "").strip()
        if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
            value = value[1:-1].strip()
        return value or None

    def allows_subspace_enumeration(self, n: int, p: int) -> bool:
        """Check if GF(p)^n is small enough to enumerate all its subspaces"""
        return n <= self.subspace_max_dim and p <= self.subspace_max_prime

    def is_exhaustive(self, order: int) -> bool:
        """Check if an algebra with this many elements is checked exhaustively"""
        return order <= self.exhaustive_limit
