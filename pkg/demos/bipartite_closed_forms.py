"""Bipartite measures follow from Schmidt coefficients alone.

For states of Schmidt rank at most k the measure is one minus the sum of the
k largest coefficients.  The numerical product-state search reproduces the
k = 1 value, and the rank-k family decides LOCC convertibility.
"""
import numpy as np

from geoent import (Cut, OptConfig, PureState, RandomSource, e_rank_k, nearest_product,
                    random_state, schmidt)
from geoent.bipartite import d_from_e, locc_convertible

cut = Cut((0,), (1,))


def main():
    s = random_state((4, 4), RandomSource(1))
    lam = schmidt(s, cut).lambdas
    print("Schmidt coefficients:", np.round(lam, 6))
    for k in range(1, 5):
        e = e_rank_k(s, cut, k)
        print(f"  rank <= {k}:  E = {e:.6f}   d = {d_from_e(e):.6f}")

    r = nearest_product(s, OptConfig(n_starts=8))
    print(f"numerical search for k = 1: {r.e_value:.12f} vs {1 - lam[0]:.12f}")

    # majorization: a maximally entangled pair converts to any other two-qubit state
    other = random_state((2, 2), RandomSource(2))
    bell = PureState(np.eye(2) / np.sqrt(2))
    print("Bell -> random:", locc_convertible(bell, [other], [1.0], cut))
    print("random -> Bell:", locc_convertible(other, [bell], [1.0], cut))


if __name__ == "__main__":
    main()
