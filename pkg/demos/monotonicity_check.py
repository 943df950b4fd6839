"""Randomized check that the measures do not increase on average under LOCC.

Each trial measures one party of a Haar-random state with a random instrument
and compares E before with the probability-weighted E after.  A function that
is not a monotone (the weight on |111>) is caught quickly.
"""
from geoent import RandomSource, SISetId, monotonicity_fuzz
from geoent.classify import THREE_QUBIT_CUTS
from geoent.product_opt import OptConfig

CFG = OptConfig(n_starts=16, max_iters=100)


def main():
    sets = {"A-BC cut": SISetId.rank_k(THREE_QUBIT_CUTS["A-BC"]),
            "product": SISetId.product(),
            "W closure": SISetId.w_closure()}
    for i, (name, set_id) in enumerate(sets.items()):
        rep = monotonicity_fuzz(set_id, (2, 2, 2), 200, RandomSource(i), CFG)
        print(f"{name:<10} violations {rep.violations}  smallest margin {rep.worst_margin:+.2e}")
    rep = monotonicity_fuzz(lambda s: abs(s.amps[1, 1, 1]) ** 2, (2, 2, 2), 200, RandomSource(9))
    print(f"{'|a111|^2':<10} violations {rep.violations}")


if __name__ == "__main__":
    main()
