"""Command-line front end: run, compare, scan, pool-info, fci.

Every output JSON embeds the full run manifest so results can be reproduced
from the artifact alone.  Exit codes: 0 success, 1 computation failure,
2 usage or I/O error.
"""

from __future__ import annotations

import csv
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

import click

from .adapt import (
    AdaptConfig,
    ansatz_report,
    assumed_call_total,
    call_cost_ratio,
    quantum_call_report,
    render_ansatz_report,
    run_adapt,
)
from .fci import SpectrumRequest, exact_ground_energy
from .integrals import FcidumpParseError, build_fermionic_hamiltonian, parse_fcidump
from .mapping import jordan_wigner
from .optimizer import OptimizerConfig
from .pool import build_pool, precompute_commutators
from .statevector import expectation, hartree_fock_state


@dataclass(frozen=True)
class RunManifest:
    fcidump_path: str
    k: int = 5
    max_operators: int = 25
    iterations_per_step: int = 200
    total_iterations: int | None = 1000
    gradient_threshold: float = 1e-3
    f_tolerance: float = 1e-3
    initial_step: float = 0.1
    out_dir: str = "out"
    seed: int = 0

    def adapt_config(self) -> AdaptConfig:
        return AdaptConfig(
            k=self.k,
            max_operators=self.max_operators,
            vqe_iterations_per_step=self.iterations_per_step,
            total_vqe_iterations=self.total_iterations,
            gradient_threshold=self.gradient_threshold,
            optimizer=OptimizerConfig(
                max_iterations=self.iterations_per_step,
                f_tolerance=self.f_tolerance,
                initial_step=self.initial_step,
            ),
        )


class Problem:
    """Parsed fixture plus everything derived from it, built once per file."""

    def __init__(self, fcidump_path: str):
        path = Path(fcidump_path)
        if not path.exists():
            raise FileNotFoundError(f"FCIDUMP file not found: {path}")
        self.path = path
        self.integrals = parse_fcidump(path.read_text())
        self.hamiltonian = jordan_wigner(
            build_fermionic_hamiltonian(self.integrals), self.integrals.n_qubits
        )
        self.hf_state = hartree_fock_state(
            self.integrals.n_qubits, self.integrals.n_electrons
        )
        self.sidecar = self._load_sidecar()

    def _load_sidecar(self) -> dict:
        sidecar = self.path.with_suffix(".json")
        if sidecar.exists():
            return json.loads(sidecar.read_text())
        return {}

    @property
    def bond_length(self) -> float | None:
        return self.sidecar.get("bond_length_angstrom")

    def pool(self):
        pool = build_pool(self.integrals.n_electrons, self.integrals.n_qubits)
        return precompute_commutators(pool, self.hamiltonian)

    def hf_energy(self) -> float:
        return expectation(self.hf_state, self.hamiltonian)

    def fci_energy(self) -> float:
        sector = (self.integrals.n_electrons, self.integrals.ms2 / 2)
        return exact_ground_energy(SpectrumRequest(self.hamiltonian, sector=sector))


def execute(manifest: RunManifest, problem: Problem | None = None):
    problem = problem or Problem(manifest.fcidump_path)
    result = run_adapt(
        problem.hamiltonian, problem.pool(), problem.hf_state,
        manifest.adapt_config(),
    )
    return problem, result


def _write_trace_csv(trace, fci_energy: float, path: Path) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["vqe_iteration", "best_energy", "error_vs_exact"])
        for iteration, energy in trace:
            writer.writerow([iteration, f"{energy:.12f}", f"{energy - fci_energy:.6e}"])


def _run_payload(manifest: RunManifest, problem: Problem, result, pool) -> dict:
    fci = problem.fci_energy()
    return {
        "manifest": asdict(manifest),
        "fixture": problem.sidecar,
        "n_qubits": problem.integrals.n_qubits,
        "pool_size": result.pool_size,
        "hf_energy": problem.hf_energy(),
        "fci_energy": fci,
        "final_energy": result.final_energy,
        "error_vs_fci": result.final_energy - fci,
        "converged_by": result.converged_by,
        "n_steps": result.n_steps,
        "chunk_sizes": result.chunk_sizes,
        "quantum_calls": quantum_call_report(result),
        "ansatz": ansatz_report(result, pool),
    }


def _fail(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _guarded(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except FileNotFoundError as exc:
        _fail(str(exc), 2)
    except FcidumpParseError as exc:
        _fail(f"parse failure: {exc}", 2)
    except (ValueError, RuntimeError) as exc:
        _fail(str(exc), 1)


def manifest_options(fn):
    fn = click.option("--seed", default=0, show_default=True)(fn)
    fn = click.option("--initial-step", default=0.1, show_default=True,
                      help="optimizer initial trust-region step (radians)")(fn)
    fn = click.option("--f-tol", "f_tolerance", default=1e-3, show_default=True,
                      help="optimizer tolerance (Hartree)")(fn)
    fn = click.option("--gradient-threshold", default=1e-3, show_default=True)(fn)
    fn = click.option("--total-iters", "total_iterations", default=1000,
                      show_default=True, help="total VQE iteration budget (0 = unlimited)")(fn)
    fn = click.option("--iters-per-step", "iterations_per_step", default=200,
                      show_default=True)(fn)
    fn = click.option("--max-ops", "max_operators", default=25, show_default=True)(fn)
    fn = click.option("--k", default=5, show_default=True)(fn)
    return fn


@click.group()
def main():
    """Adaptive-ansatz molecular ground-state solver."""


@main.command("run")
@click.option("--fcidump", "fcidump_path", required=True)
@manifest_options
@click.option("--out", "out_dir", default="out", show_default=True)
@click.option("--plots/--no-plots", default=True, show_default=True)
def cmd_run(fcidump_path, out_dir, plots, **options):
    """Run the adaptive solver on one FCIDUMP file and write artifacts."""
    if not options["total_iterations"]:
        options["total_iterations"] = None
    manifest = RunManifest(fcidump_path=fcidump_path, out_dir=out_dir, **options)

    def job():
        problem, result = execute(manifest)
        pool = problem.pool()
        payload = _run_payload(manifest, problem, result, pool)
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "run.json").write_text(json.dumps(payload, indent=2) + "\n")
        _write_trace_csv(result.energy_trace, payload["fci_energy"], out / "trace.csv")
        (out / "ansatz.txt").write_text(render_ansatz_report(payload["ansatz"]))
        if plots:
            from .plotting import plot_trace

            plot_trace(result.energy_trace, payload["fci_energy"], out / "trace.png")
        click.echo(f"final energy : {result.final_energy:.10f} Ha")
        click.echo(f"exact energy : {payload['fci_energy']:.10f} Ha")
        click.echo(f"error        : {payload['error_vs_fci']:.3e} Ha")
        click.echo(f"converged by : {result.converged_by}")
        calls = payload["quantum_calls"]
        click.echo(
            f"quantum calls: {calls['measured_total']} measured "
            f"({calls['energy_evaluations']} energy + "
            f"{calls['screening_evaluations']} screening), "
            f"{calls['assumed_total']} by the 3-per-iteration formula"
        )
        click.echo(f"artifacts    : {out}/run.json, trace.csv, ansatz.txt"
                   + (", trace.png" if plots else ""))

    _guarded(job)


@main.command("compare")
@click.option("--fcidump", "fcidump_path", required=True)
@click.option("--k", "k_values", default="1,5", show_default=True,
              help="comma-separated chunk sizes")
@click.option("--iters-per-operator", default=40, show_default=True,
              help="per-step budget is k times this")
@click.option("--max-ops", "max_operators", default=25, show_default=True)
@click.option("--total-iters", "total_iterations", default=1000, show_default=True)
@click.option("--gradient-threshold", default=1e-3, show_default=True)
@click.option("--f-tol", "f_tolerance", default=1e-3, show_default=True)
@click.option("--initial-step", default=0.1, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--out", "out_dir", default="out", show_default=True)
@click.option("--plots/--no-plots", default=True, show_default=True)
def cmd_compare(fcidump_path, k_values, iters_per_operator, out_dir, plots, **options):
    """Run several chunk sizes on one fixture and tabulate cost ratios."""
    ks = [int(x) for x in k_values.split(",") if x.strip()]
    if not ks:
        _fail("no chunk sizes given", 2)

    def job():
        problem = Problem(fcidump_path)
        fci = problem.fci_energy()
        rows, reports = [], []
        for k in ks:
            manifest = RunManifest(
                fcidump_path=fcidump_path, k=k,
                iterations_per_step=iters_per_operator * k,
                out_dir=out_dir, **options,
            )
            _, result = execute(manifest, problem)
            report = quantum_call_report(result)
            reports.append(report)
            rows.append(
                {
                    "k": k,
                    "final_energy": result.final_energy,
                    "error": result.final_energy - fci,
                    "vqe_iterations": report["vqe_iterations"],
                    "assumed_calls": report["assumed_total"],
                    "measured_calls": report["measured_total"],
                }
            )
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        with (out / "compare.csv").open("w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
        payload = {
            "fcidump_path": fcidump_path,
            "fci_energy": fci,
            "runs": rows,
            "ratios": {},
        }
        for i, a in enumerate(rows):
            for j, b in enumerate(rows):
                if i != j:
                    key = f"k{a['k']}_over_k{b['k']}"
                    payload["ratios"][key] = {
                        "assumed_calls": call_cost_ratio(reports[i], reports[j]),
                        "measured_calls": call_cost_ratio(
                            reports[i], reports[j], key="measured_total"
                        ),
                        "error": a["error"] / b["error"] if b["error"] else None,
                    }
        (out / "compare.json").write_text(json.dumps(payload, indent=2) + "\n")
        if plots:
            from .plotting import plot_compare

            plot_compare(rows, out / "compare.png")
        for row in rows:
            click.echo(
                f"K={row['k']}: error={row['error']:.3e} Ha, "
                f"calls assumed={row['assumed_calls']} measured={row['measured_calls']}"
            )
        click.echo(f"artifacts: {out}/compare.csv, compare.json"
                   + (", compare.png" if plots else ""))

    _guarded(job)


@main.command("scan")
@click.argument("fcidump_paths", nargs=-1, required=True)
@manifest_options
@click.option("--out", "out_dir", default="out", show_default=True)
@click.option("--plots/--no-plots", default=True, show_default=True)
def cmd_scan(fcidump_paths, out_dir, plots, **options):
    """Run the solver across a bond-length series of FCIDUMP files."""
    if not options["total_iterations"]:
        options["total_iterations"] = None

    def job():
        rows = []
        n_orbitals = None
        for i, path in enumerate(fcidump_paths):
            problem = Problem(path)
            if n_orbitals is None:
                n_orbitals = problem.integrals.n_spatial_orbitals
            elif problem.integrals.n_spatial_orbitals != n_orbitals:
                raise ValueError(
                    f"{path}: orbital count differs from the first file in the scan"
                )
            manifest = RunManifest(fcidump_path=path, out_dir=out_dir, **options)
            _, result = execute(manifest, problem)
            fci = problem.fci_energy()
            rows.append(
                {
                    "fcidump_path": path,
                    "bond_length": problem.bond_length
                    if problem.bond_length is not None
                    else float(i),
                    "hf_energy": problem.hf_energy(),
                    "fci_energy": fci,
                    "adapt_energy": result.final_energy,
                    "error": result.final_energy - fci,
                    "converged_by": result.converged_by,
                }
            )
            click.echo(
                f"{path}: bond={rows[-1]['bond_length']} error={rows[-1]['error']:.3e} Ha"
            )
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        with (out / "scan.csv").open("w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
        payload = {"manifest_defaults": options, "rows": rows}
        (out / "scan.json").write_text(json.dumps(payload, indent=2) + "\n")
        if plots:
            from .plotting import plot_scan

            plot_scan(rows, out / "scan.png")
        click.echo(f"artifacts: {out}/scan.csv, scan.json"
                   + (", scan.png" if plots else ""))

    _guarded(job)


@main.command("pool-info")
@click.option("--fcidump", "fcidump_path", required=True)
def cmd_pool_info(fcidump_path):
    """Print the excitation-pool summary for a fixture."""

    def job():
        problem = Problem(fcidump_path)
        pool = build_pool(problem.integrals.n_electrons, problem.integrals.n_qubits)
        info = {
            "fcidump_path": fcidump_path,
            "n_qubits": pool.n_qubits,
            "n_electrons": pool.n_electrons,
            "pool_size": len(pool),
            "categories": pool.category_counts(),
        }
        click.echo(json.dumps(info, indent=2))

    _guarded(job)


@main.command("fci")
@click.option("--fcidump", "fcidump_path", required=True)
def cmd_fci(fcidump_path):
    """Print the exact (sector-restricted) ground energy for a fixture."""

    def job():
        problem = Problem(fcidump_path)
        click.echo(f"hf_energy  : {problem.hf_energy():.10f} Ha")
        click.echo(f"fci_energy : {problem.fci_energy():.10f} Ha")

    _guarded(job)


if __name__ == "__main__":
    main()
