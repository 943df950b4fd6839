"""The W closure gives a non-trivial measure while the GHZ closure does not.

Every state in the closure of the W class is a local-basis rotation of a state
with at most one excitation, so its measure is the smallest weight on two or
more excitations over all local bases.  GHZ-class states can approach the W
state arbitrarily closely, so the GHZ closure contains every state.
"""
from geoent import SISetId, e_w, ghz, measure, three_tangle, w_state
from geoent.state import overlap2
from geoent.wclass import GhzSequenceParam, ghz_eps_state


def main():
    for name, s in [("W", w_state()), ("GHZ", ghz())]:
        r = e_w(s)
        print(f"E_W({name}) = {r.e_value:.6f}, witness tangle = {three_tangle(r.witness):.1e}")

    print("\nGHZ-class states approaching W:")
    for eps in (0.5, 0.1, 0.01, 0.001):
        s = ghz_eps_state(GhzSequenceParam(eps))
        print(f"  eps = {eps:<6} tau = {three_tangle(s):.3e}  1 - |<W|s>|^2 = "
              f"{1 - overlap2(w_state(), s):.3e}")
    print("\nE_GHZ of the W state:", measure(w_state(), SISetId.ghz_closure()).e_value)


if __name__ == "__main__":
    main()
