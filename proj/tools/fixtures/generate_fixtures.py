#!/usr/bin/env python3
# Copyright 2026 The hydrovqe Authors.
# SPDX-License-Identifier: Apache-2.0
"""Regenerates the bundled FCIDUMP fixtures (requires pyscf).

Writes molecular-orbital-basis FCIDUMPs plus a metadata JSON with the
RHF, full-CI and frozen-core CASCI reference energies used by the tests.
"""
import json
import os
import sys

import numpy as np
from pyscf import ao2mo, fci, gto, mcscf, scf
from pyscf.tools import fcidump

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "data", "fixtures")


def run(atom, charge=0, frozen=0, ncas=None, nelecas=None):
    mol = gto.M(atom=atom, basis="sto-3g", charge=charge, spin=0, unit="Angstrom", verbose=0)
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    mf.kernel()
    assert mf.converged
    e_fci = fci.FCI(mf).kernel()[0]
    meta = {"e_hf": mf.e_tot, "e_fci": e_fci, "n_orbitals": mol.nao, "n_electrons": mol.nelectron}
    if ncas is not None:
        cas = mcscf.CASCI(mf, ncas, nelecas)
        meta["e_casci_frozen_core"] = cas.kernel()[0]
        meta["frozen_core"] = frozen
    return mf, meta


def dump(mf, path):
    fcidump.from_scf(mf, path, tol=1e-15)


def diatomic(sym, r):
    return f"{sym} 0 0 0; H 0 0 {r}"


def main():
    os.makedirs(OUT, exist_ok=True)
    meta_all = {}

    for name, sym, bonds, extra in [
        ("h2", "H", [0.3, 0.5, 0.7414, 0.9, 1.2, 1.5, 2.0, 2.5], {}),
        ("lih", "Li", [1.0, 1.3, 1.6, 2.0, 2.5, 3.0, 3.5, 4.0],
         {"frozen": 1, "ncas": 5, "nelecas": 2}),
    ]:
        d = os.path.join(OUT, name)
        os.makedirs(d, exist_ok=True)
        rows = []
        meta = {}
        for r in bonds:
            mf, m = run(diatomic(sym, r), **extra)
            fn = f"{name}_{r:.4f}.fcidump"
            dump(mf, os.path.join(d, fn))
            rows.append(f"{r:.4f} {fn}")
            meta[fn] = dict(m, bond_length=r)
        with open(os.path.join(d, "manifest.txt"), "w") as f:
            f.write("# bond_length_angstrom fcidump_path\n")
            f.write("\n".join(rows) + "\n")
        meta_all[name] = meta

    # Scaling family: distorted hydrogen clusters without point-group symmetry.
    rng = np.random.default_rng(7)
    d = os.path.join(OUT, "scaling")
    os.makedirs(d, exist_ok=True)
    meta = {}
    rows = []
    for n_atoms in range(2, 9):
        pos = np.array([[0.9 * i, 0.0, 0.0] for i in range(n_atoms)])
        if n_atoms > 2:
            pos += rng.uniform(-0.25, 0.25, size=pos.shape)
        atom = "; ".join(f"H {x:.6f} {y:.6f} {z:.6f}" for x, y, z in pos)
        charge = n_atoms % 2
        mf, m = run(atom, charge=charge)
        fn = f"h{n_atoms}.fcidump"
        dump(mf, os.path.join(d, fn))
        rows.append(fn)
        meta[fn] = m
    with open(os.path.join(d, "family.txt"), "w") as f:
        f.write("\n".join(rows) + "\n")
    meta_all["scaling"] = meta

    with open(os.path.join(OUT, "reference_energies.json"), "w") as f:
        json.dump(meta_all, f, indent=2, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    sys.exit(main())
