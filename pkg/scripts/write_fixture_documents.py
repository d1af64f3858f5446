"""Write the JSON reference documents under fixtures/ (states, subsystems, batch jobs)."""

import argparse
import json
from pathlib import Path

import numpy as np

from gaussian_partners import fixtures as fx
from gaussian_partners.io import complex_to_pairs

STATES = {
    "pure3": fx.PURE3_NU,
    "pure4": fx.PURE4_NU,
    "j6": fx.J6_NU,
    "j8": fx.J8_NU,
}


def eigen_coefficients(n_modes, combo):
    """Coefficient vector in the [e1, e1*, e2, e2*, ...] ordering."""
    c = np.zeros(2 * n_modes, dtype=complex)
    for label, value in combo.items():
        idx = 2 * (int(label.strip("e*")) - 1) + label.endswith("*")
        c[idx] = value
    return c


def subsystem_doc(n_modes, *combos, note=""):
    doc = {"coordinates": "eigenbasis",
           "vectors": complex_to_pairs(np.array([eigen_coefficients(n_modes, c) for c in combos]))}
    if note:
        doc["metadata"] = {"description": note}
    return doc


def state_doc(nu, note=""):
    doc = {"n_modes": len(nu), "spectral": {"nu": list(nu)}}
    if note:
        doc["metadata"] = {"description": note}
    return doc


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=Path(__file__).resolve().parents[1] / "fixtures", type=Path)
    args = parser.parse_args()
    out = args.out
    (out / "batch").mkdir(parents=True, exist_ok=True)
    docs = {f"{name}_state.json": state_doc(nu, f"symplectic eigenvalues {nu}") for name, nu in STATES.items()}
    docs["half_vacuum_state.json"] = {"n_modes": 1, "covariance": [[0.5, 0.0], [0.0, 0.5]],
                                      "metadata": {"description": "unphysical: nu = 1/2"}}
    docs["squeezed13_3modes.json"] = subsystem_doc(3, fx.SQUEEZED_13, note="2 e1 - sqrt3 e3*")
    docs["pure_partner13_3modes.json"] = subsystem_doc(3, {"e1": fx.SQRT3, "e3*": -2.0},
                                                       note="sqrt3 e1 - 2 e3*")
    docs["squeezed_pairs_4modes.json"] = subsystem_doc(4, fx.SQUEEZED_13, fx.SQUEEZED_24,
                                                       note="2 e1 - sqrt3 e3*, 2 e2 - sqrt3 e4*")
    for case, combos in fx.CATALOG_CASES.items():
        docs[f"catalog_case{case}.json"] = subsystem_doc(3, *combos, note=f"catalog case {case}")
    for name, doc in docs.items():
        (out / name).write_text(json.dumps(doc, indent=2) + "\n")

    for case, combos in fx.CATALOG_CASES.items():
        job = {"state": docs["j6_state.json"], "subsystem": docs[f"catalog_case{case}.json"]}
        (out / "batch" / f"catalog_case{case}.json").write_text(json.dumps(job, indent=2) + "\n")
    print(f"wrote {len(docs) + len(fx.CATALOG_CASES)} documents to {out}")


if __name__ == "__main__":
    main()
