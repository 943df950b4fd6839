"""A state and its complex conjugate share every monotone value.

Phi(z; c) = |000> + z |b1 b2 b3> with real |b_i>.  Replacing z by z* gives the
complex conjugate state.  Every measure here is invariant under conjugation,
so the two columns agree.
"""
from geoent.reports import conj_pair


def main():
    rep = conj_pair(1j, (0.5, 0.5, 0.5))
    for row, (a, b) in rep.values.items():
        print(f"{row:<10} z: {a:.6f}   z*: {b:.6f}")
    print("pairwise equal:", rep.passed)


if __name__ == "__main__":
    main()
