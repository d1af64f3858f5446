"""Seeded sweep: logarithmic negativity of a single mode before and after localizing onto A + A_ep."""

import argparse
import time

import numpy as np

from gaussian_partners.entanglement import entanglement_partner, log_negativity
from gaussian_partners.gaussian_state import complex_structure, random_state
from gaussian_partners.subsystems import direct_sum, localize, random_subsystem, restrict


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cases", type=int, default=100)
    parser.add_argument("--min-modes", type=int, default=3)
    parser.add_argument("--max-modes", type=int, default=6)
    args = parser.parse_args()
    start = time.perf_counter()
    deviations = []
    for seed in range(args.cases):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(args.min_modes, args.max_modes + 1))
        J = complex_structure(random_state(n, rng))
        A = random_subsystem(n, 1, rng)
        full = log_negativity(J, A)
        joint = direct_sum(A, entanglement_partner(A, J).partner)
        local = log_negativity(restrict(J, joint), localize(A, joint))
        deviations.append(abs(full - local))
        print(f"seed {seed:4d}  modes {n}  E_N {full:.10f}  localized {local:.10f}")
    print(f"max deviation {max(deviations):.3g} over {args.cases} cases in {time.perf_counter() - start:.2f} s")


if __name__ == "__main__":
    main()
