"""FCIDUMP + JSON sidecar emission for generated fixtures."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .basis import Molecule, make_molecule
from .fci import fci_ground_energy
from .scf import ScfError, mo_integrals, run_rhf

# determinant FCI is recorded only at desk scale (<= 14 qubits)
FCI_MAX_SPATIAL_ORBITALS = 7


def fcidump_text(h1: np.ndarray, eri: np.ndarray, core: float,
                 n_electrons: int, ms2: int = 0) -> str:
    n = h1.shape[0]
    lines = [
        f"&FCI NORB={n},NELEC={n_electrons},MS2={ms2},",
        " ORBSYM=" + "1," * n,
        " ISYM=1,",
        "&END",
    ]
    seen = set()
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    v = eri[i, j, k, l]
                    if abs(v) < 1e-13:
                        continue
                    canon = min(
                        (i, j, k, l), (j, i, k, l), (i, j, l, k), (j, i, l, k),
                        (k, l, i, j), (l, k, i, j), (k, l, j, i), (l, k, j, i),
                    )
                    if canon in seen:
                        continue
                    seen.add(canon)
                    a, b, c, d = canon
                    lines.append(f" {v: .16e} {a + 1:3d} {b + 1:3d} {c + 1:3d} {d + 1:3d}")
    for i in range(n):
        for j in range(i + 1):
            if abs(h1[i, j]) >= 1e-13:
                lines.append(f" {h1[i, j]: .16e} {i + 1:3d} {j + 1:3d}   0   0")
    lines.append(f" {core: .16e}   0   0   0   0")
    return "\n".join(lines) + "\n"


def generate_fixture(molecule_name: str, bond_length: float, out_dir,
                     with_fci: bool = True) -> Path:
    """Run RHF at the given geometry and write FCIDUMP + sidecar.

    On SCF non-convergence only a sidecar with ``"scf_converged": false``
    is written, and no FCIDUMP is emitted.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    mol = make_molecule(molecule_name, bond_length)
    stem = f"{mol.name.lower()}_{bond_length:.2f}"
    sidecar_path = out_dir / f"{stem}.json"

    meta = {
        "molecule": mol.name,
        "bond_length_angstrom": round(bond_length, 6),
        "basis": "STO-3G",
        "charge": mol.charge,
        "multiplicity": 1,
        "n_electrons": mol.n_electrons,
        "ms2": 0,
        "generator": "fixturegen (McMurchie-Davidson STO-3G RHF + determinant FCI)",
    }
    try:
        scf = run_rhf(mol)
    except ScfError as exc:
        meta["scf_converged"] = False
        meta["error"] = str(exc)
        sidecar_path.write_text(json.dumps(meta, indent=2) + "\n")
        return sidecar_path

    h1, eri = mo_integrals(scf)
    n = h1.shape[0]
    meta["scf_converged"] = True
    meta["n_spatial_orbitals"] = n
    meta["n_qubits"] = 2 * n
    meta["nuclear_repulsion"] = scf.nuclear_repulsion
    meta["hf_energy"] = scf.energy
    if with_fci and n <= FCI_MAX_SPATIAL_ORBITALS:
        meta["fci_energy"] = fci_ground_energy(h1, eri, mol.n_electrons, scf.nuclear_repulsion)
    else:
        meta["fci_energy"] = None

    (out_dir / f"{stem}.fcidump").write_text(
        fcidump_text(h1, eri, scf.nuclear_repulsion, mol.n_electrons)
    )
    sidecar_path.write_text(json.dumps(meta, indent=2) + "\n")
    return out_dir / f"{stem}.fcidump"
