"""The six SLOCC classes of three qubits.

Local ranks separate product and biseparable states; the three-tangle then
splits the genuinely tripartite states into the W and GHZ classes.  Invertible
local operators never change the class.
"""
import numpy as np

from geoent import basis_state, ghz, slocc_apply, slocc_class, w_state
from geoent.state import PureState

bell = np.eye(2) / np.sqrt(2)
REPS = {
    "|000>": basis_state((0, 0, 0)),
    "|0>|bell>": PureState(np.einsum("i,jk->ijk", [1, 0], bell)),
    "W": w_state(),
    "GHZ": ghz(),
}


def main():
    g = np.random.default_rng(0)
    for name, s in REPS.items():
        c = slocc_class(s)
        ops = [g.standard_normal((2, 2)) + 1j * g.standard_normal((2, 2)) for _ in range(3)]
        moved = slocc_class(slocc_apply(s, ops))
        print(f"{name:<10} class {c.label.value:<6} ranks {c.ranks}  tau {c.tau:.3f}  "
              f"after random SLOCC: {moved.label.value}")


if __name__ == "__main__":
    main()
