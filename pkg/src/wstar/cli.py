"""Command-line front end.

Every command prints one deterministic report (JSON by default) and
exits 0 on success / verified, 1 on a failed verification or an empty
feasibility scan, 2 on usage or domain errors.  Doubles are printed
with 17 significant digits and field order is fixed, so re-running a
command yields byte-identical output.
"""

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from .bounds import max_k
from .codes import CapacityError, NotCorrectableError, build_code, build_recovery, verify_detection, verify_recovery
from .enumerators import macwilliams_check, weight_A, weight_B
from .filtration import (
    FiniteMetric,
    classical_filtration,
    hamming_filtration,
    metric_from_filtration,
    random_metric,
    su2_filtration,
    verify_axioms,
)
from .matcore import DEFAULT_TOL, ShapeError
from .randmat import random_hermitian, random_state
from .su2rep import build_irrep
from .tverberg import construct, transport


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- output

def _fnum(x: float) -> str:
    return format(float(x) + 0.0, ".17g")  # +0.0 folds -0.0 into 0.0


def _jval(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return _fnum(v)
    if isinstance(v, (complex, np.complexfloating)):
        return f"[{_fnum(v.real)}, {_fnum(v.imag)}]"
    if isinstance(v, str):
        import json

        return json.dumps(v)
    if isinstance(v, dict):
        return "{" + ", ".join(f"{_jval(str(k))}: {_jval(x)}" for k, x in v.items()) + "}"
    if isinstance(v, np.ndarray):
        return _jval(v.tolist())
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_jval(x) for x in v) + "]"
    raise TypeError(f"cannot serialize {type(v)!r}")


def _cmatrix(m) -> list:
    return [[complex(z) for z in row] for row in np.asarray(m, dtype=complex)]


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, report: dict) -> None:
    _emit(args, _jval(report) + "\n")


def _emit_csv(args, header: list, rows: list) -> None:
    def cell(x):
        if isinstance(x, (bool, np.bool_)):
            return "true" if x else "false"
        if isinstance(x, (float, np.floating)):
            return _fnum(x)
        return str(x)

    lines = [",".join(header)] + [",".join(cell(x) for x in row) for row in rows]
    _emit(args, "\n".join(lines) + "\n")


# ------------------------------------------------------------- commands

def _cmd_rep(args, tol) -> int:
    rep = build_irrep(args.two_j)
    if args.format == "csv":
        raise UsageError("csv output is not defined for this command")
    _emit_json(args, {
        "two_j": rep.two_j,
        "dim": rep.dim,
        "h": _cmatrix(rep.h),
        "e": _cmatrix(rep.e),
        "f": _cmatrix(rep.f),
        "casimir_scalar": rep.two_j * (rep.two_j + 2) / 4.0,
    })
    return 0


def _load_metric(path: str) -> FiniteMetric:
    return FiniteMetric.from_json(Path(path).read_text())


def _cmd_filtration(args, tol) -> int:
    if args.format == "csv":
        raise UsageError("csv output is not defined for this command")
    if args.instance == "su2":
        if args.two_j is None:
            raise UsageError("--instance su2 requires --two-j")
        filt = su2_filtration(build_irrep(args.two_j), tol=tol)
    elif args.instance == "hamming":
        if args.n is None:
            raise UsageError("--instance hamming requires --n")
        filt = hamming_filtration(args.n)
    else:
        if args.metric is None:
            raise UsageError("--instance classical requires --metric FILE")
        filt = classical_filtration(_load_metric(args.metric))
    report = verify_axioms(filt, tol=tol)
    _emit_json(args, {
        "instance": args.instance,
        "ambient_dim": filt.ambient_dim,
        "labels": list(filt.labels()),
        "dims": [b.dim for _, b in filt.grades],
        "identity_ok": report.identity_ok,
        "adjoint_ok": report.adjoint_ok,
        "product_ok": report.product_ok,
        "max_residual": report.max_residual,
        "pass": report.passed,
    })
    return 0 if report.passed else 1


def _cmd_metric(args, tol) -> int:
    if args.format == "csv":
        raise UsageError("csv output is not defined for this command")
    if (args.n is None) == (args.metric is None):
        raise UsageError("metric needs exactly one of --n or --metric FILE")
    if args.n is not None:
        m = random_metric(args.n, random_state(args.seed))
        source = f"random (seed {args.seed})"
    else:
        m = _load_metric(args.metric)
        m.validate()
        source = args.metric
    back = metric_from_filtration(classical_filtration(m))
    exact = list(back.labels) == list(m.labels) and np.array_equal(back.dist, m.dist)
    _emit_json(args, {
        "source": source,
        "n_points": m.n_points,
        "labels": list(m.labels),
        "dist": [[float(x) for x in row] for row in m.dist],
        "roundtrip_exact": exact,
    })
    return 0 if exact else 1


def _frac(x) -> str:
    return str(Fraction(x))


def _cmd_tverberg(args, tol) -> int:
    if args.format == "csv":
        raise UsageError("csv output is not defined for this command")
    part = construct(args.dim, args.parts)
    if args.affine is not None:
        part = transport(part, Fraction(args.affine[0]), Fraction(args.affine[1]))
    _emit_json(args, {
        "dim": part.d,
        "parts": part.parts,
        "points": [_frac(t) for t in part.points],
        "colors": list(part.color),
        "coeffs": [_frac(c) for c in part.coeff],
        "common_point": [_frac(c) for c in part.common_point],
        "verified": True,
    })
    return 0


def _code_report(code) -> dict:
    return {
        "two_j": code.two_j,
        "detect_grade": code.detect_grade,
        "dim": code.k,
        "weight_support": list(code.weight_support),
        "vectors": _cmatrix(code.vectors),
    }


def _cmd_code(args, tol) -> int:
    if args.format == "csv":
        raise UsageError("csv output is not defined for this command")
    code = build_code(args.two_j, args.detect, args.dim)
    rep = build_irrep(args.two_j)
    if args.action == "build":
        filt = su2_filtration(rep, tol=tol, max_grade=code.detect_grade)
        det = verify_detection(code, filt, code.detect_grade, tol=tol)
        report = _code_report(code)
        report["detection_report"] = {
            "grade": det.grade,
            "max_residual": det.max_residual,
            "pass": det.passed,
        }
        _emit_json(args, report)
        return 0 if det.passed else 1
    filt = su2_filtration(rep, tol=tol, max_grade=args.error_grade)
    errors = filt.basis_at(args.error_grade)
    channel = build_recovery(code, errors, tol=tol)
    rec = verify_recovery(channel, errors, trials=args.trials, seed=args.seed, tol=max(tol, 1e-8))
    _emit_json(args, {
        "two_j": code.two_j,
        "detect_grade": code.detect_grade,
        "dim": code.k,
        "error_grade": args.error_grade,
        "kraus_count": len(channel.kraus_in),
        "trials": rec.trials,
        "max_residual": rec.max_residual,
        "completeness_residual": rec.completeness_residual,
        "pass": rec.passed,
    })
    return 0 if rec.passed else 1


def _read_code_vectors(path: str, two_j: int) -> np.ndarray:
    import json

    data = json.loads(Path(path).read_text())
    rows = data["vectors"]
    v = np.array([[complex(re, im) for re, im in row] for row in rows])
    if v.shape[0] != two_j + 1:
        raise ValueError(f"code file has {v.shape[0]} rows, expected {two_j + 1}")
    return v


def _cmd_enumerate(args, tol) -> int:
    n = args.two_j + 1
    if args.code is not None:
        v = _read_code_vectors(args.code, args.two_j)
        x = y = v @ v.conj().T
        operands = f"code projection ({args.code})"
    else:
        rng = random_state(args.random)
        x = random_hermitian(rng, n)
        y = random_hermitian(rng, n)
        operands = f"random hermitian pair (seed {args.random})"
    a = weight_A(args.two_j, x, y)
    b = weight_B(args.two_j, x, y)
    dev = macwilliams_check(args.two_j, x, y)
    if args.format == "csv":
        _emit_csv(args, ["d", "A", "B"], [(d, a[d], b[d]) for d in range(n)])
    else:
        _emit_json(args, {
            "two_j": args.two_j,
            "operands": operands,
            "A": list(a),
            "B": list(b),
            "identity_deviation": dev,
        })
    return 0


def _cmd_identity_check(args, tol) -> int:
    if args.format == "csv":
        raise UsageError("csv output is not defined for this command")
    n = args.two_j + 1
    worst = 0.0
    for i in range(args.trials):
        rng = random_state(args.seed, i)
        worst = max(worst, macwilliams_check(args.two_j, random_hermitian(rng, n), random_hermitian(rng, n)))
    passed = worst < max(tol, 1e-8)
    _emit_json(args, {
        "two_j": args.two_j,
        "trials": args.trials,
        "max_deviation": worst,
        "pass": passed,
    })
    return 0 if passed else 1


def _cmd_bound(args, tol) -> int:
    report = max_k(args.two_j, args.detect, tol=max(tol, 1e-9))
    if args.format == "csv":
        _emit_csv(args, ["k", "feasible"], list(report.per_k))
    else:
        _emit_json(args, {
            "two_j": report.two_j,
            "s": report.s,
            "k_max": report.k_max,
            "feasible_point": None if report.feasible_point is None else list(report.feasible_point),
            "per_k": [{"k": k, "feasible": ok} for k, ok in report.per_k],
        })
    return 0 if report.k_max >= 1 else 1


# ------------------------------------------------------------- dispatch

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="tolerance (default: WSTAR_TOL or 1e-9)")
    common.add_argument("--seed", type=int, default=0, help="random stream seed (default 0)")
    common.add_argument("--out", default=None, help="write the report to this file instead of stdout")
    common.add_argument("--format", choices=["json", "csv"], default="json")

    p = argparse.ArgumentParser(prog="wstar", description="spin filtrations, codes, and enumerator bounds")
    sub = p.add_subparsers(dest="subcommand", required=True)

    q = sub.add_parser("rep", parents=[common], help="ladder matrices of one irreducible representation")
    q.add_argument("--two-j", type=int, required=True, dest="two_j")

    q = sub.add_parser("filtration", parents=[common], help="filtration instances and axiom checks")
    fsub = q.add_subparsers(dest="action", required=True)
    fv = fsub.add_parser("verify", parents=[common])
    fv.add_argument("--instance", choices=["su2", "hamming", "classical"], required=True)
    fv.add_argument("--two-j", type=int, default=None, dest="two_j")
    fv.add_argument("--n", type=int, default=None)
    fv.add_argument("--metric", default=None, help="metric JSON file")

    q = sub.add_parser("metric", parents=[common], help="generate or round-trip a finite metric")
    q.add_argument("--n", type=int, default=None, help="generate a random metric on N points")
    q.add_argument("--metric", default=None, help="validate and round-trip this metric JSON file")

    q = sub.add_parser("tverberg", parents=[common], help="partition of moment-curve points with a common hull point")
    q.add_argument("--dim", type=int, required=True)
    q.add_argument("--parts", type=int, required=True)
    q.add_argument("--affine", nargs=2, default=None, metavar=("A", "B"),
                   help="apply x -> A x + B with rational A != 0, B")

    q = sub.add_parser("code", parents=[common], help="build and exercise detection codes")
    csub = q.add_subparsers(dest="action", required=True)
    cb = csub.add_parser("build", parents=[common])
    for cc in (cb, csub.add_parser("recover", parents=[common])):
        cc.add_argument("--two-j", type=int, required=True, dest="two_j")
        cc.add_argument("--detect", type=int, required=True)
        cc.add_argument("--dim", type=int, required=True)
        if cc is not cb:
            cc.add_argument("--error-grade", type=int, required=True, dest="error_grade")
            cc.add_argument("--trials", type=int, default=20)

    q = sub.add_parser("enumerate", parents=[common], help="A/B weight vectors of an operator pair")
    q.add_argument("--two-j", type=int, required=True, dest="two_j")
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--code", default=None, help="code JSON file (as written by `code build`)")
    g.add_argument("--random", type=int, default=None, help="seed for a random Hermitian pair")

    q = sub.add_parser("identity-check", parents=[common], help="worst transform deviation over random pairs")
    q.add_argument("--two-j", type=int, required=True, dest="two_j")
    q.add_argument("--trials", type=int, default=20)

    q = sub.add_parser("bound", parents=[common], help="largest code dimension not excluded by the LP")
    q.add_argument("--two-j", type=int, required=True, dest="two_j")
    q.add_argument("--detect", type=int, required=True)
    return p


_HANDLERS = {
    "rep": _cmd_rep,
    "filtration": _cmd_filtration,
    "metric": _cmd_metric,
    "tverberg": _cmd_tverberg,
    "code": _cmd_code,
    "enumerate": _cmd_enumerate,
    "identity-check": _cmd_identity_check,
    "bound": _cmd_bound,
}


def _shield_negatives(argv: list) -> list:
    """Let --affine take negative rationals: argparse reads "-7/3" as a
    flag, while a leading space keeps it a value (Fraction strips it)."""
    out = list(argv)
    for i, tok in enumerate(out):
        if tok == "--affine":
            for j in (i + 1, i + 2):
                if j < len(out) and len(out[j]) > 1 and out[j][0] == "-":
                    out[j] = " " + out[j]
    return out


def dispatch(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_shield_negatives(argv))
    except SystemExit as ex:
        return 0 if ex.code in (0, None) else 2
    tol = args.tol
    if tol is None:
        env = os.environ.get("WSTAR_TOL")
        try:
            tol = float(env) if env is not None else DEFAULT_TOL
        except ValueError:
            print(f"error: WSTAR_TOL is not a number: {env!r}", file=sys.stderr)
            return 2
    if tol <= 0:
        print("error: tolerance must be positive", file=sys.stderr)
        return 2
    try:
        return _HANDLERS[args.subcommand](args, tol)
    except (UsageError, CapacityError, NotCorrectableError, ShapeError, ValueError, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    return dispatch(argv)


if __name__ == "__main__":
    sys.exit(main())
