"""``ncx`` command line.

Exit codes: 0 success, 1 an identity check failed (counterexample printed),
2 parse or usage error, 3 degenerate or irregular input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from gmpy2 import mpq

from . import crossratio as cr
from .errors import (
    Degenerate,
    DimensionError,
    NCXError,
    NotConjugate,
    ParseError,
    Singular,
    Undefined,
    ZeroInverse,
)
from .linalg import Mat2, Mat2xN
from .parse import parse_matrix, parse_quaternion, parse_vector, render_matrix, render_vector
from .qplucker import qp
from .quasidet import quasidet
from .scalars import Quaternion, render_scalar
from .suites import SUITES, run_all

EXIT_OK, EXIT_FINDING, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3


class _Usage(Exception):
    pass


# -- value helpers ---------------------------------------------------------------


def _all_real(values) -> bool:
    return all(not (q.b or q.c or q.d) for q in values)


def _commutative(vectors):
    """Drop to rationals when no imaginary part appears anywhere."""
    flat = [c for v in vectors for c in v]
    if _all_real(flat):
        return [type(v)(mpq(v.x1.a), mpq(v.x2.a)) for v in vectors]
    return vectors


def _matrix_ring(A: Mat2xN) -> Mat2xN:
    return Mat2xN(_commutative(list(A.columns)), A.labels)


def scalar_json(x) -> dict:
    q = Quaternion.coerce(x)
    return {
        "text": render_scalar(x),
        "quaternion": [[int(c.numerator), int(c.denominator)] for c in q.coeffs()],
    }


class Output:
    def __init__(self, as_json: bool, out=None):
        self.as_json = as_json
        self.out = out or sys.stdout
        self.data: dict = {}

    def emit(self, key: str, value, text: str | None = None):
        if self.as_json:
            self.data[key] = scalar_json(value) if _is_scalar(value) else value
        else:
            self.out.write((text if text is not None else _text(value)) + "\n")

    def flush(self):
        if self.as_json:
            json.dump(_jsonable(self.data), self.out, sort_keys=True)
            self.out.write("\n")


def _jsonable(obj):
    """Keep JSON to integers and strings: booleans become "true"/"false"."""
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def error_json(command: str, exc: Exception) -> dict:
    """Structured blame: operation, failing factor and box position when known."""
    blame = getattr(exc, "blame", str(exc))
    data = {"error": type(exc).__name__, "operation": command, "blame": blame}
    if ": " in blame:
        data["factor"] = blame.split(": ", 1)[0]
    position = getattr(exc, "position", None)
    if position is not None:
        data["position"] = [int(p) for p in position]
    return data


def _is_scalar(v) -> bool:
    return isinstance(v, Quaternion) or type(v) is type(mpq())


def _text(v) -> str:
    return render_scalar(v) if _is_scalar(v) else str(v)


# -- subcommands ---------------------------------------------------------------------


def _column_index(A: Mat2xN, token: str) -> int:
    if token.isdigit():
        idx = int(token) - 1
        if not 0 <= idx < A.n:
            raise _Usage(f"column {token} out of range 1..{A.n}")
        return idx
    if A.n == 4 and token in cr.LABELS:
        return cr.LABELS.index(token)
    raise _Usage(f"bad column {token!r}: use 1..{A.n}" + (" or x,y,z,t" if A.n == 4 else ""))


def cmd_quasidet(args, out: Output) -> int:
    A = _matrix_ring(parse_matrix(args.matrix))
    if A.n != 2:
        raise _Usage("quasidet needs a 2x2 matrix")
    if args.row not in (1, 2) or args.col not in (1, 2):
        raise _Usage("row and col must be 1 or 2")
    m = Mat2.from_columns(*A.columns)
    out.emit("quasidet", quasidet(m, (args.row, args.col)))
    return EXIT_OK


def cmd_qplucker(args, out: Output) -> int:
    A = _matrix_ring(parse_matrix(args.matrix))
    i, j, k = (_column_index(A, t) for t in (args.i, args.j, args.k))
    if i == k:
        raise _Usage("i and k must differ")
    out.emit("qplucker", qp(A, i, j, k))
    return EXIT_OK


def _tuple(texts) -> cr.FourTuple:
    return cr.FourTuple(*_commutative([parse_vector(t) for t in texts]))


def cmd_cross_ratio(args, out: Output) -> int:
    T = _tuple(args.vectors)
    if cr.is_zt_dependent(T):
        raise Degenerate("z and t are dependent, so kappa is 0 or 1 (excluded)")
    if args.system:
        sol = cr.cross_ratio_via_system(T)
        for name in ("alpha", "beta", "gamma", "kappa"):
            v = getattr(sol, name)
            out.emit(name, v, f"{name} = {render_scalar(v)}")
        return EXIT_OK
    out.emit("kappa", cr.cross_ratio(T))
    return EXIT_OK


def _report_check(out: Output, name: str, ok: bool, lhs, rhs) -> None:
    if out.as_json:
        out.data.setdefault("checks", {})[name] = {
            "holds": ok, "lhs": scalar_json(lhs), "rhs": scalar_json(rhs),
        }
    else:
        out.out.write(f"{'PASS' if ok else 'FAIL'}  {name}: {render_scalar(lhs)} vs {render_scalar(rhs)}\n")


def _counterexample(texts) -> None:
    sys.stderr.write("counterexample: " + " ".join(f'"{t}"' for t in texts) + "\n")


def cmd_cocycle(args, out: Output) -> int:
    vs = _commutative([parse_vector(t) for t in args.vectors])
    rep = cr.cocycle_checks(*vs)
    _report_check(out, "kappa(x,y,z,t) = kappa(w,y,z,t) kappa(x,w,z,t)", rep.multiplicative, rep.kappa, rep.product)
    _report_check(out, "kappa(x,y,z,t) = 1 - kappa(t,y,z,x)", rep.flip, rep.kappa, 1 - rep.flipped)
    if not rep.holds:
        _counterexample([render_vector(v) for v in vs])
        return EXIT_FINDING
    return EXIT_OK


def cmd_chain(args, out: Output) -> int:
    vs = _commutative([parse_vector(t) for t in [*args.points, args.z, args.t]])
    pts, z, t = vs[:-2], vs[-2], vs[-1]
    if len(pts) < 2:
        raise _Usage("chain needs at least two points")
    rep = cr.chain_product(pts, z, t)
    _report_check(out, f"chain product n={len(pts)}", rep.holds, rep.product, rep.target)
    if not rep.holds:
        _counterexample([render_vector(v) for v in vs])
        return EXIT_FINDING
    return EXIT_OK


def cmd_perms(args, out: Output) -> int:
    T = _tuple(args.vectors)
    rep = cr.permutation_relations(T)
    out.emit("kappa", rep.kappa, f"kappa = {render_scalar(rep.kappa)}")
    for name, (ok, lhs, rhs) in rep.checks.items():
        _report_check(out, name, ok, lhs, rhs)
    if args.all24:
        values = cr.all_24(T)
        if out.as_json:
            out.data["all24"] = {
                w: (scalar_json(v) if not isinstance(v, NCXError) else {"undefined": str(v)})
                for w, v in values.items()
            }
        else:
            for w, v in values.items():
                shown = f"undefined ({v})" if isinstance(v, NCXError) else render_scalar(v)
                out.out.write(f"kappa({','.join(w)}) = {shown}\n")
    if not rep.holds:
        _counterexample([render_vector(v) for v in T])
        return EXIT_FINDING
    return EXIT_OK


def _matrix_tuple(text: str) -> cr.FourTuple:
    A = parse_matrix(text)
    if A.n != 4:
        raise _Usage("a tuple is a 2x4 matrix [x1,y1,z1,t1; x2,y2,z2,t2]")
    return cr.FourTuple(*A.columns)


def cmd_orbit_check(args, out: Output) -> int:
    T, T2 = _matrix_tuple(args.first), _matrix_tuple(args.second)
    k1, k2 = cr.cross_ratio(T), cr.cross_ratio(T2)
    for which, k in (("first", k1), ("second", k2)):
        if k.is_zero() or k == 1:
            raise Degenerate(f"kappa({which}) is {render_scalar(k)}; the orbit criterion needs kappa not in {{0, 1}}")
    if args.mu is not None:
        mu = parse_quaternion(args.mu)
    else:
        mu = cr.find_conjugator(k1, k2)
        if mu is None:
            # kappa values are not conjugate: certified different orbits
            for key, v in (("kappa1", k1), ("kappa2", k2)):
                out.emit(key, v, f"{key} = {render_scalar(v)}")
            out.emit("same_orbit", False, "different orbits: the cross-ratios are not conjugate")
            return EXIT_OK
    try:
        w = cr.orbit_witness(T, T2, mu)
    except NotConjugate as exc:
        sys.stderr.write(f"not conjugate: {exc}\n")
        _counterexample([render_matrix(T.matrix()), render_matrix(T2.matrix()), "--mu", render_scalar(mu)])
        return EXIT_FINDING
    g = Mat2xN.from_rows([w.g.a11, w.g.a12], [w.g.a21, w.g.a22])
    out.emit("same_orbit", True, "same orbit")
    out.emit("mu", w.mu, f"mu = {render_scalar(w.mu)}")
    if out.as_json:
        out.data["g"] = [[scalar_json(e) for e in row] for row in g.rows()]
        out.data["lambdas"] = [scalar_json(v) for v in w.lambdas]
    else:
        out.out.write(f"g = {render_matrix(g)}\n")
        for n, v in enumerate(w.lambdas, 1):
            out.out.write(f"lambda{n} = {render_scalar(v)}\n")
    return EXIT_OK


def cmd_verify(args, out: Output) -> int:
    names = list(SUITES) if args.suite == "all" else args.suite.split(",")
    for n in names:
        if n not in SUITES:
            raise _Usage(f"unknown suite {n!r}; choose from all, {', '.join(SUITES)}")
    if args.trials < 1 or args.bound < 1:
        raise _Usage("trials and bound must be positive")
    results = run_all(args.trials, args.seed, args.bound, names)
    failed = [r for r in results if not r.passed]
    if out.as_json:
        out.data["suites"] = [
            {"suite": r.name, "ring": r.ring, "trials": r.trials, "checks": r.checks,
             "failures": r.failures, "draws": r.draws, "rejections": r.rejections}
            for r in results
        ]
        out.data["passed"] = not failed
    else:
        out.out.write(f"{'suite':<12} {'ring':<10} {'trials':>7} {'checks':>8}  result\n")
        for r in results:
            out.out.write(
                f"{r.name:<12} {r.ring:<10} {r.trials:>7} {r.checks:>8}  "
                f"{'PASS' if r.passed else f'FAIL ({len(r.failures)})'}\n"
            )
        for r in failed:
            for f in r.failures[:5]:
                sys.stderr.write(f"[{r.name}/{r.ring}] {f}\n")
    return EXIT_FINDING if failed else EXIT_OK


# -- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ncx", description="Noncommutative cross-ratios over the rational quaternions.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--file", help="read extra positional values, one per line")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("quasidet", help="quasideterminant of a 2x2 matrix")
    s.add_argument("--matrix", required=True)
    s.add_argument("--row", type=int, required=True)
    s.add_argument("--col", type=int, required=True)
    s.set_defaults(fn=cmd_quasidet)

    s = sub.add_parser("qplucker", help="quasi-Pluecker coordinate q^k_ij")
    s.add_argument("--matrix", required=True)
    s.add_argument("-i", required=True)
    s.add_argument("-j", required=True)
    s.add_argument("-k", required=True)
    s.set_defaults(fn=cmd_qplucker)

    s = sub.add_parser("cross-ratio", help="kappa(x, y, z, t)")
    s.add_argument("vectors", nargs="*", metavar="V")
    s.add_argument("--system", action="store_true", help="also solve for alpha, beta, gamma")
    s.set_defaults(fn=cmd_cross_ratio, arity=4)

    s = sub.add_parser("cocycle", help="cocycle identities for x y z t w")
    s.add_argument("vectors", nargs="*", metavar="V")
    s.set_defaults(fn=cmd_cocycle, arity=5)

    s = sub.add_parser("chain", help="telescoping product of cross-ratios")
    s.add_argument("points", nargs="*", metavar="V")
    s.add_argument("--z", required=True)
    s.add_argument("--t", required=True)
    s.set_defaults(fn=cmd_chain)

    s = sub.add_parser("perms", help="permutation relations of kappa")
    s.add_argument("vectors", nargs="*", metavar="V")
    s.add_argument("--all24", action="store_true", help="print kappa for all 24 orderings")
    s.set_defaults(fn=cmd_perms, arity=4)

    s = sub.add_parser("orbit-check", help="decide whether two tuples share an orbit")
    s.add_argument("first", metavar="T")
    s.add_argument("second", metavar="T'")
    s.add_argument("--mu")
    s.set_defaults(fn=cmd_orbit_check)

    s = sub.add_parser("verify", help="run seeded identity suites")
    s.add_argument("--suite", default="all", help="all, or a comma list of " + ", ".join(SUITES))
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--bound", type=int, default=5)
    s.set_defaults(fn=cmd_verify)
    return p


def _merge_file(args) -> None:
    if not args.file:
        return
    with open(args.file) as fh:
        extra = [line.strip() for line in fh if line.strip()]
    for attr in ("vectors", "points"):
        if hasattr(args, attr):
            setattr(args, attr, [*getattr(args, attr), *extra])
            return
    raise _Usage("--file is only supported for commands taking vectors")


def main(argv: Sequence[str] | None = None, stdout=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    out = Output(args.json, stdout)
    try:
        _merge_file(args)
        arity = getattr(args, "arity", None)
        if arity is not None and len(args.vectors) != arity:
            raise _Usage(f"{args.command} takes exactly {arity} vectors, got {len(args.vectors)}")
        code = args.fn(args, out)
    except ParseError as exc:
        sys.stderr.write(f"{exc}\n  {exc.text}\n  {' ' * exc.position}^\n")
        return EXIT_USAGE
    except (_Usage, DimensionError, OSError) as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (Undefined, Degenerate, Singular, ZeroInverse) as exc:
        data = error_json(args.command, exc)
        if args.json:
            json.dump(data, out.out, sort_keys=True)
            out.out.write("\n")
        sys.stderr.write(f"{data['error']}: {data['blame']}\n")
        return EXIT_DEGENERATE
    out.flush()
    return code


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
