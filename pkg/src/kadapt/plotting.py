"""Matplotlib renderings of run artifacts, written next to the CSV output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def plot_trace(trace, fci_energy: float | None, path: Path) -> None:
    """Best-so-far energy (and error vs the exact reference) per VQE iteration."""
    iterations = [i for i, _ in trace]
    energies = [e for _, e in trace]
    fig, ax = plt.subplots(figsize=(6, 4))
    if fci_energy is not None:
        errors = [max(e - fci_energy, 1e-12) for e in energies]
        ax.semilogy(iterations, errors, lw=1.2)
        ax.axhline(1e-3, color="gray", ls="--", lw=0.8, label="chemical accuracy")
        ax.set_ylabel("energy error vs exact (Ha)")
        ax.legend(frameon=False)
    else:
        ax.plot(iterations, energies, lw=1.2)
        ax.set_ylabel("energy (Ha)")
    ax.set_xlabel("VQE iteration")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_scan(rows: list[dict], path: Path) -> None:
    """Dissociation curves (HF / exact / ADAPT) with an error panel below."""
    rows = sorted(rows, key=lambda r: r["bond_length"])
    x = [r["bond_length"] for r in rows]
    fig, (top, bottom) = plt.subplots(
        2, 1, figsize=(6, 6), sharex=True, height_ratios=[2, 1]
    )
    top.plot(x, [r["hf_energy"] for r in rows], "s--", ms=4, label="HF")
    top.plot(x, [r["fci_energy"] for r in rows], "k-", lw=1, label="exact")
    top.plot(x, [r["adapt_energy"] for r in rows], "o", ms=5, label="ADAPT")
    top.set_ylabel("energy (Ha)")
    top.legend(frameon=False)
    bottom.semilogy(x, [max(r["error"], 1e-12) for r in rows], "o-", ms=4)
    bottom.axhline(1e-3, color="gray", ls="--", lw=0.8)
    bottom.set_ylabel("error (Ha)")
    bottom.set_xlabel("bond length (Angstrom)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_compare(rows: list[dict], path: Path) -> None:
    """Final error and call totals per chunk size, side by side."""
    labels = [f"K={r['k']}" for r in rows]
    fig, (left, right) = plt.subplots(1, 2, figsize=(8, 4))
    left.bar(labels, [max(r["error"], 1e-12) for r in rows], color="tab:blue")
    left.set_yscale("log")
    left.axhline(1e-3, color="gray", ls="--", lw=0.8)
    left.set_ylabel("final error (Ha)")
    width = 0.35
    xs = range(len(rows))
    right.bar([i - width / 2 for i in xs], [r["assumed_calls"] for r in rows],
              width, label="assumed")
    right.bar([i + width / 2 for i in xs], [r["measured_calls"] for r in rows],
              width, label="measured")
    right.set_xticks(list(xs), labels)
    right.set_ylabel("quantum function calls")
    right.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
