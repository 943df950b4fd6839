"""Command line front end.

Exit codes: 0 on success, 1 when a quantitative check fails, 2 on usage,
parse or shape errors.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .bipartite import locc_convertible, schmidt
from .catalog import phi_z_state, table1_phi, table1_psi
from .classify import SISetId, parse_cut, parse_set_spec, measure, slocc_class
from .errors import GeoentError
from .linalg import RandomSource
from .locc import monotonicity_fuzz
from .product_opt import OptConfig
from .reports import conj_pair, table1
from .state import ghz, w_state
from .statefile import format_state, read_state, write_state
from .wclass import GhzSequenceParam, ghz_eps_state

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _uses_w(set_id: SISetId) -> bool:
    return set_id.kind == "w" or any(_uses_w(m) for m in set_id.members)


def _config(starts, seed, tol=None, wide=False) -> OptConfig:
    n = starts if starts is not None else (64 if wide else 32)
    kw = {"conv_tol": tol} if tol is not None else {}
    return OptConfig(n_starts=n, seed=seed, **kw)


def _complex(text: str) -> complex:
    try:
        parts = [float(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}; use re,im") from None
    if len(parts) == 1:
        return complex(parts[0], 0)
    if len(parts) != 2:
        raise UsageError(f"cannot parse complex number {text!r}; use re,im")
    return complex(*parts)


def _floats(text: str, n: int) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse {text!r}") from None
    if len(vals) != n:
        raise UsageError(f"expected {n} comma-separated numbers, got {text!r}")
    return vals


def _emit(obj, as_json: bool, human: str):
    if as_json:
        print(json.dumps(obj))
    else:
        print(human)


def _amplitudes(s):
    return {"dims": list(s.dims), "amplitudes": [[a.real, a.imag] for a in s.vector.tolist()]}


def cmd_measure(args) -> int:
    s = read_state(args.state)
    set_id = parse_set_spec(args.set, s.n_parties)
    cfg = _config(args.starts, args.seed, args.tol, wide=_uses_w(set_id))
    r = measure(s, set_id, cfg)
    _emit({"set": set_id.spec(), "E": r.e_value, "d": r.d_value,
           "starts_agreeing": r.starts_agreeing, "iterations": r.iterations,
           "converged": r.converged, "witness": _amplitudes(r.witness)},
          args.json, f"E = {r.e_value:.6f}\nd = {r.d_value:.6f}")
    return EXIT_OK


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "ghz":
        s = ghz(args.parties)
    elif kind == "w":
        s = w_state(args.parties)
    elif kind == "phi":
        if args.z is None or args.c is None:
            raise UsageError("gen phi needs --z re,im and --c c1,c2,c3")
        s = phi_z_state(_complex(args.z), _floats(args.c, 3))
    elif kind == "eps-seq":
        if args.eps is None:
            raise UsageError("gen eps-seq needs --eps")
        s = ghz_eps_state(GhzSequenceParam(args.eps))
    elif kind == "table1-psi":
        s = table1_psi()
    else:
        s = table1_phi()
    comment = "generated by geoent gen " + kind
    if args.output:
        write_state(args.output, s, comment)
    else:
        sys.stdout.write(format_state(s, comment))
    return EXIT_OK


def cmd_table1(args) -> int:
    cfg = _config(args.starts, args.seed, wide=True)
    rep = table1(cfg)
    if args.json:
        print(json.dumps({
            "entries": [{"row": e.row, "column": e.column, "value": e.value,
                         "expected": e.expected, "tol": e.tol, "pass": e.passed}
                        for e in rep.entries],
            "ordering": [{"row": r, "expected": a, "observed": b} for r, a, b in rep.ordering],
            "pass": rep.passed}))
    else:
        print(f"{'measure':<10} {'state':<5} {'computed':>10} {'table':>8} {'diff':>10}  result")
        for e in rep.entries:
            print(f"{e.row:<10} {e.column:<5} {e.value:>10.6f} {e.expected:>8.4g} "
                  f"{e.value - e.expected:>+10.2e}  {'PASS' if e.passed else 'FAIL'}")
        print()
        for row, expected, observed in rep.ordering:
            flag = "ok" if expected == observed else "MISMATCH"
            print(f"{row:<10} psi {observed} phi  (table: {expected})  {flag}")
        print("\nall entries PASS" if rep.passed else "\nFAIL")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_conj_pair(args) -> int:
    cfg = _config(args.starts, args.seed, wide=True)
    z = _complex(args.z)
    rep = conj_pair(z, _floats(args.c, 3), cfg)
    if args.json:
        print(json.dumps({"z": [z.real, z.imag], "c": list(rep.c),
                          "entries": {r: list(v) for r, v in rep.values.items()},
                          "pass": rep.passed}))
    else:
        for row, (a, b) in rep.values.items():
            print(f"{row:<10} {a:.6f}  {b:.6f}  diff {abs(a - b):.2e}")
        print("equal within tolerance" if rep.passed else "FAIL")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_fuzz(args) -> int:
    dims = tuple(int(d) for d in args.dims.split(","))
    set_id = parse_set_spec(args.measure, len(dims))
    cfg = _config(args.starts, args.seed, wide=_uses_w(set_id))
    rep = monotonicity_fuzz(set_id, dims, args.trials, RandomSource(args.seed), cfg)
    _emit({"measure": set_id.spec(), "trials": rep.trials, "violations": rep.violations,
           "worst_margin": rep.worst_margin, "flagged": [list(np.ravel(f[1])) for f in rep.flagged]},
          args.json,
          f"trials = {rep.trials}\nviolations = {rep.violations}\nworst margin = {rep.worst_margin:.3e}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_classify(args) -> int:
    r = slocc_class(read_state(args.state))
    _emit({"class": r.label.value, "ranks": list(r.ranks), "tau": r.tau, "flagged": r.flagged},
          args.json, r.label.value + (" (borderline)" if r.flagged else ""))
    return EXIT_OK


def cmd_schmidt(args) -> int:
    s = read_state(args.state)
    dec = schmidt(s, parse_cut(args.cut, s.n_parties))
    lam = [float(x) for x in dec.lambdas]
    _emit({"cut": str(dec.cut), "lambdas": lam}, args.json,
          " ".join(f"{x:.6g}" for x in lam))
    return EXIT_OK


def cmd_convertible(args) -> int:
    s, t = read_state(args.state), read_state(args.target)
    if s.dims != t.dims:
        raise UsageError("state and target have different dims")
    ok = locc_convertible(s, [t], [1.0], parse_cut(args.cut, s.n_parties))
    _emit({"convertible": ok}, args.json, "yes" if ok else "no")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="geoent", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def opt_flags(q, seed_default=0):
        q.add_argument("--starts", type=int, default=None, help="optimizer starts")
        q.add_argument("--seed", type=int, default=seed_default)
        q.add_argument("--json", action="store_true")

    q = sub.add_parser("measure", help="geometric measure for one SLOCC-invariant set")
    q.add_argument("--state", required=True)
    q.add_argument("--set", required=True,
                   help="product | w | ghz | cut:<left> | rank:<left>:<k> | union:<spec>,...")
    q.add_argument("--tol", type=float, default=None, help="convergence tolerance")
    opt_flags(q)
    q.set_defaults(func=cmd_measure)

    q = sub.add_parser("gen", help="write a named state")
    q.add_argument("kind", choices=["ghz", "w", "phi", "eps-seq", "table1-psi", "table1-phi"])
    q.add_argument("--z")
    q.add_argument("--c")
    q.add_argument("--eps", type=float)
    q.add_argument("--parties", type=int, default=3)
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_gen)

    q = sub.add_parser("table1", help="recompute the reference table for the two test states")
    opt_flags(q)
    q.set_defaults(func=cmd_table1)

    q = sub.add_parser("conj-pair", help="compare monotones of a state and its z-conjugate")
    q.add_argument("--z", required=True)
    q.add_argument("--c", required=True)
    opt_flags(q)
    q.set_defaults(func=cmd_conj_pair)

    q = sub.add_parser("fuzz", help="randomized monotonicity check")
    q.add_argument("--measure", required=True)
    q.add_argument("--dims", default="2,2,2")
    q.add_argument("--trials", type=int, default=200)
    opt_flags(q)
    q.set_defaults(func=cmd_fuzz)

    q = sub.add_parser("classify", help="three-qubit SLOCC class")
    q.add_argument("--state", required=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_classify)

    q = sub.add_parser("schmidt", help="Schmidt coefficients across a cut")
    q.add_argument("--state", required=True)
    q.add_argument("--cut", required=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_schmidt)

    q = sub.add_parser("convertible", help="bipartite LOCC convertibility across a cut")
    q.add_argument("--state", required=True)
    q.add_argument("--target", required=True)
    q.add_argument("--cut", required=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_convertible)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, GeoentError, ValueError, OSError) as exc:
        print(f"geoent: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
