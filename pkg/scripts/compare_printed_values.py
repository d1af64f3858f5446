"""Compare printed reference values with the main path and the dense oracle.

For each reference example the script prints the printed value, the value
from the main (eigenvector-based) path, the value from the dense oracle and
the closed form that matches the computation.  Subunity values of a
single-mode pair with symplectic eigenvalues (a, b) solve
v^2 - s v + a b = 0, which is how the closed forms below were identified.
"""

import numpy as np

from gaussian_partners import fixtures as fx
from gaussian_partners.entanglement import partial_transpose, pt_spectrum
from gaussian_partners.gaussian_state import complex_structure, symplectic_spectrum
from gaussian_partners.oracle import dense_pt_eigensolve, dense_symplectic_eigenvalues
from gaussian_partners.partners import pure_partner
from gaussian_partners.phase_space import symplectic_product
from gaussian_partners.subsystems import projector_distance, reduce_state, restrict


def _row(label, printed, main, oracle, closed=""):
    print(f"{label:<38} printed {printed:<28} main {main:<28} oracle {oracle:<28} {closed}")


def _fmt(values):
    return "(" + ", ".join(f"{v:.12g}" for v in np.atleast_1d(values)) + ")"


def subunity_values():
    for name, state, n, combos, printed in (
        ("single mode in J6", fx.j6(), 3, (fx.SQUEEZED_13,), [0.5 * (np.sqrt(1201) - 35)]),
        ("two modes in J8", fx.j8(), 4, (fx.SQUEEZED_13, fx.SQUEEZED_24),
         [np.sqrt(57) - 7, 0.5 * (np.sqrt(73) - 7)]),
    ):
        A = fx.subsystem(n, *combos)
        main = pt_spectrum(partial_transpose(complex_structure(state), A)).subunity_values
        oracle = dense_pt_eigensolve(state, A).subunity_values
        closed = "(35 - sqrt1201)/2" + (", 21 - sqrt433" if n == 4 else "")
        _row(f"subunity values, {name}", _fmt(printed), _fmt(np.sort(main)), _fmt(np.sort(oracle)), closed)


def pure_partners():
    J3 = complex_structure(fx.pure3())
    A = fx.subsystem(3, fx.SQUEEZED_13)
    gamma = fx.eigen_combination(3, fx.SQUEEZED_13)
    printed = fx.eigen_combination(3, {"e1": fx.SQRT3, "e3*": 2.0})
    partner = pure_partner(A, J3).partner
    print(f"<gamma_A, sqrt3 e1 + 2e3*> = {symplectic_product(gamma, printed):.6g} (must vanish for a partner)")
    for label, combo in (("sqrt3 e1 + 2e3*", {"e1": fx.SQRT3, "e3*": 2.0}),
                         ("sqrt3 e1 - 2e3*", {"e1": fx.SQRT3, "e3*": -2.0})):
        print(f"  distance to span{{{label}}}: {projector_distance(partner, fx.subsystem(3, combo)):.3g}")

    state = fx.pure4()
    A2 = fx.subsystem(4, fx.SQUEEZED_13, fx.MIXED_123)
    nu = symplectic_spectrum(restrict(complex_structure(state), A2)).nu
    oracle = dense_symplectic_eigenvalues(reduce_state(state, A2).covariance)
    _row("nu(J_A), one correlated mode", "(7, 1)", _fmt(nu), _fmt(oracle))


def main():
    subunity_values()
    pure_partners()


if __name__ == "__main__":
    main()
