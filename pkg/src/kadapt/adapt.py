"""The K-ADAPT-VQE driver.

Each step screens the whole pool by energy-gradient magnitude, appends the
top K operators (descending gradient, new parameters at zero), and
re-optimizes all parameters warm-started from the previous optimum.  A
ledger counts every quantum-function call: one screening evaluation per
pool operator per step, one energy evaluation per objective call.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .optimizer import OptimizerConfig, minimize
from .pauli import PauliSum
from .pool import ExcitationOperator, OperatorPool
from .statevector import Statevector, apply_pauli_sum, expectation, _rotate_inplace


class PrecomputationMissing(RuntimeError):
    pass


@dataclass(frozen=True)
class AdaptConfig:
    k: int = 5
    max_operators: int = 25
    vqe_iterations_per_step: int = 200
    total_vqe_iterations: int | None = None
    gradient_threshold: float = 1e-3
    optimizer: OptimizerConfig = field(default_factory=OptimizerConfig)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.vqe_iterations_per_step < 1:
            raise ValueError("vqe_iterations_per_step must be >= 1")
        if self.gradient_threshold <= 0:
            raise ValueError("gradient_threshold must be positive")
        if self.max_operators < 1:
            raise ValueError("max_operators must be >= 1")


@dataclass
class CallLedger:
    screening_evaluations: int = 0
    energy_evaluations: int = 0


@dataclass
class AdaptResult:
    ansatz: list[tuple[str, float]]  # (operator label, final parameter)
    chunk_sizes: list[int]
    energy_trace: list[tuple[int, float]]  # (cumulative VQE iterations, best energy)
    final_energy: float
    quantum_calls: CallLedger
    converged_by: str  # gradient_threshold | operator_budget | iteration_budget
    n_steps: int
    pool_size: int

    @property
    def total_vqe_iterations(self) -> int:
        return self.quantum_calls.energy_evaluations


def ansatz_state(initial: Statevector, operators, parameters) -> Statevector:
    """|psi> = prod_j exp(theta_j G_j) |initial>, applied in ansatz order."""
    out = initial.copy()
    for op, theta in zip(operators, parameters):
        for term, scale in op.rotation_factors:
            _rotate_inplace(out.amplitudes, term, theta * scale)
    return out


def gradient_screen(state: Statevector, pool: OperatorPool,
                    ledger: CallLedger | None = None) -> np.ndarray:
    """dE/dtheta at theta=0 for every pool operator: <[H, G]> on |state>.

    Evaluated as 2 Re <H psi | G psi>, algebraically identical to the
    commutator expectation of the precomputed [G, H] sums.
    """
    if not pool.commutators_ready:
        raise PrecomputationMissing("call precompute_commutators before screening")
    h_psi = apply_pauli_sum(state, pool.hamiltonian)
    grads = np.empty(len(pool))
    for j, op in enumerate(pool.operators):
        g_psi = apply_pauli_sum(state, op.qubit_image)
        grads[j] = 2.0 * h_psi.inner(g_psi).real
    if ledger is not None:
        ledger.screening_evaluations += len(pool)
    return grads


def select_top_k(gradients, k: int, labels=None) -> list[int]:
    """Indices of the k largest |gradient|, descending; ties by ascending label."""
    if k < 1:
        raise ValueError("k must be >= 1")
    gradients = np.asarray(gradients, dtype=float)
    if labels is None:
        labels = [str(i) for i in range(len(gradients))]
    order = sorted(range(len(gradients)), key=lambda j: (-abs(gradients[j]), labels[j]))
    return order[: min(k, len(gradients))]


def run_adapt(h: PauliSum, pool: OperatorPool, initial: Statevector,
              cfg: AdaptConfig) -> AdaptResult:
    if len(pool) == 0:
        raise ValueError("empty operator pool")
    if not pool.commutators_ready:
        raise PrecomputationMissing("call precompute_commutators before run_adapt")
    if cfg.total_vqe_iterations is not None and cfg.total_vqe_iterations < 1:
        raise ValueError("total iteration budget must be >= 1")

    ledger = CallLedger()
    trace: list[tuple[int, float]] = []
    chunk_sizes: list[int] = []
    ansatz_ops: list[ExcitationOperator] = []
    params = np.zeros(0)
    state = initial.copy()
    energy = expectation(state, h)
    best_seen = energy
    n_steps = 0

    while True:
        grads = gradient_screen(state, pool, ledger)
        if float(np.max(np.abs(grads))) < cfg.gradient_threshold:
            converged_by = "gradient_threshold"
            break

        n_slots = cfg.max_operators - len(ansatz_ops)
        chosen = select_top_k(grads, min(cfg.k, n_slots), pool.labels)
        budget = cfg.vqe_iterations_per_step
        if cfg.total_vqe_iterations is not None:
            budget = min(budget, cfg.total_vqe_iterations - ledger.energy_evaluations)
        if budget < 1:
            converged_by = "iteration_budget"
            break

        ansatz_ops.extend(pool.operators[j] for j in chosen)
        params = np.concatenate([params, np.zeros(len(chosen))])
        chunk_sizes.append(len(chosen))

        def objective(x):
            nonlocal best_seen
            trial = ansatz_state(initial, ansatz_ops, x)
            value = expectation(trial, h)
            ledger.energy_evaluations += 1
            best_seen = min(best_seen, value)
            trace.append((ledger.energy_evaluations, best_seen))
            return value

        outcome = minimize(
            objective, params,
            OptimizerConfig(
                max_iterations=budget,
                f_tolerance=cfg.optimizer.f_tolerance,
                initial_step=cfg.optimizer.initial_step,
            ),
        )
        params = outcome.best_parameters
        energy = outcome.best_energy
        state = ansatz_state(initial, ansatz_ops, params)
        n_steps += 1

        if len(ansatz_ops) >= cfg.max_operators:
            converged_by = "operator_budget"
            break
        if (
            cfg.total_vqe_iterations is not None
            and ledger.energy_evaluations >= cfg.total_vqe_iterations
        ):
            converged_by = "iteration_budget"
            break

    return AdaptResult(
        ansatz=[(op.label, float(t)) for op, t in zip(ansatz_ops, params)],
        chunk_sizes=chunk_sizes,
        energy_trace=trace,
        final_energy=float(energy),
        quantum_calls=ledger,
        converged_by=converged_by,
        n_steps=n_steps,
        pool_size=len(pool),
    )


def assumed_call_total(evals_per_iteration: int, vqe_iterations: int,
                       pool_size: int, screening_rounds: int) -> int:
    """Back-of-envelope cost formula: optimizer calls plus pool screenings."""
    return evals_per_iteration * vqe_iterations + pool_size * screening_rounds


def quantum_call_report(r: AdaptResult, evals_per_iteration_assumption: int = 3) -> dict:
    """Assumed (formula) and measured quantum-function-call totals for a run."""
    screening = r.quantum_calls.screening_evaluations
    measured_energy = r.quantum_calls.energy_evaluations
    return {
        "vqe_iterations": r.total_vqe_iterations,
        "screening_evaluations": screening,
        "energy_evaluations": measured_energy,
        "evals_per_iteration_assumption": evals_per_iteration_assumption,
        "assumed_total": assumed_call_total(
            evals_per_iteration_assumption, r.total_vqe_iterations,
            r.pool_size, r.n_steps,
        ),
        "measured_total": measured_energy + screening,
    }


def call_cost_ratio(report_a: dict, report_b: dict, key: str = "assumed_total") -> float:
    """Cost ratio a/b between two run reports (e.g. 1-ADAPT over 5-ADAPT)."""
    return report_a[key] / report_b[key]


def ansatz_report(r: AdaptResult, pool: OperatorPool) -> dict:
    """Per-chunk ansatz structure: indices, supports, parameters, overlaps."""
    by_label = {op.label: op for op in pool.operators}
    chunks = []
    pos = 0
    for size in r.chunk_sizes:
        entries = []
        for label, theta in r.ansatz[pos: pos + size]:
            op = by_label[label]
            entries.append(
                {
                    "label": label,
                    "occupied": list(op.occ),
                    "virtual": list(op.virt),
                    "support_qubits": list(op.support),
                    "z_string_qubits": list(op.z_string_qubits),
                    "same_spin": op.same_spin,
                    "parameter": theta,
                }
            )
        supports = [set(e["support_qubits"]) for e in entries]
        overlap = any(
            supports[i] & supports[j]
            for i in range(len(supports))
            for j in range(i)
        )
        chunks.append({"operators": entries, "overlapping_supports": overlap})
        pos += size
    return {
        "n_operators": len(r.ansatz),
        "final_energy": r.final_energy,
        "chunks": chunks,
    }


def render_ansatz_report(report: dict) -> str:
    lines = [f"ansatz: {report['n_operators']} operators, final energy "
             f"{report['final_energy']:.10f} Ha"]
    for c, chunk in enumerate(report["chunks"], start=1):
        flag = " [overlapping supports]" if chunk["overlapping_supports"] else ""
        lines.append(f"chunk {c}{flag}:")
        for e in chunk["operators"]:
            spin = "same-spin " if e["same_spin"] else ""
            z = ",".join(map(str, e["z_string_qubits"])) or "-"
            lines.append(
                f"  {e['label']:<18} {spin}theta={e['parameter']: .6f}  "
                f"support={','.join(map(str, e['support_qubits']))}  z={z}"
            )
    return "\n".join(lines) + "\n"
