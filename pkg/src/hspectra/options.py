"""Solver configuration shared by root finders, iterations and the oracle."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class SolverOptions:
    """Tolerances, caps and seeding for every numerical routine.

    tol_root      half-width at which a bracketing root search stops
    tol_iter      Collatz bound gap at which the power iteration stops
    tol_residual  infinity-norm residual below which an eigenpair is accepted
    tol_struct    tolerance for structural lemma predicates
    max_iter      iteration cap for bisection and power iteration
    seed          base seed; restart i uses seed + i
    restarts      number of random restarts in the multistart oracle
    """

    tol_root: float = 1e-12
    tol_iter: float = 1e-10
    tol_residual: float = 1e-9
    tol_struct: float = 1e-8
    max_iter: int = 100_000
    seed: int = 0
    restarts: int = 500

    def __post_init__(self) -> None:
        for name in ("tol_root", "tol_iter", "tol_residual", "tol_struct"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")

    def with_(self, **changes) -> "SolverOptions":
        """Copy with selected fields replaced."""
        return replace(self, **changes)


DEFAULT_OPTIONS = SolverOptions()
