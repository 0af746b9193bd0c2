"""Gradient-free parameter optimization with exact call accounting.

Backed by scipy's COBYLA behind a wrapper that owns the evaluation budget,
tracks the best point seen, and guarantees the result is never worse than
the starting point.  One iteration is defined as one objective evaluation
(COBYLA's own budget unit); reports keep assumed-vs-measured call counts
separate, so no per-iteration evaluation ratio is baked in here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize as scipy_minimize


class ObjectiveError(RuntimeError):
    """The objective returned a non-finite value."""


class _BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class OptimizerConfig:
    max_iterations: int = 200
    f_tolerance: float = 1e-3  # Hartree
    initial_step: float = 0.1  # radians

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if self.f_tolerance <= 0:
            raise ValueError("f_tolerance must be positive")


@dataclass
class OptimizationOutcome:
    best_parameters: np.ndarray
    best_energy: float
    n_evaluations: int
    n_iterations: int
    converged: bool


def minimize(objective, x0, cfg: OptimizerConfig) -> OptimizationOutcome:
    """Minimize a deterministic objective from x0 under an evaluation budget."""
    x0 = np.asarray(x0, dtype=float)
    if x0.size and not np.all(np.isfinite(x0)):
        raise ValueError("x0 must be finite")

    state = {"count": 0, "best_f": math.inf, "best_x": x0.copy()}

    def wrapped(x):
        if state["count"] >= cfg.max_iterations:
            raise _BudgetExhausted
        value = float(objective(np.asarray(x, dtype=float)))
        state["count"] += 1
        if not math.isfinite(value):
            raise ObjectiveError(
                f"objective returned {value!r} at evaluation {state['count']}"
            )
        if value < state["best_f"]:
            state["best_f"] = value
            state["best_x"] = np.array(x, dtype=float)
        return value

    if x0.size == 0:
        value = float(objective(x0))
        return OptimizationOutcome(x0, value, 1, 1, True)

    exhausted = False
    try:
        scipy_minimize(
            wrapped,
            x0,
            method="COBYLA",
            tol=cfg.f_tolerance,
            options={"maxiter": cfg.max_iterations, "rhobeg": cfg.initial_step},
        )
    except _BudgetExhausted:
        exhausted = True

    return OptimizationOutcome(
        best_parameters=state["best_x"],
        best_energy=state["best_f"],
        n_evaluations=state["count"],
        n_iterations=state["count"],
        converged=not exhausted,
    )
