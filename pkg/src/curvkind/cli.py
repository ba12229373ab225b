"""Command-line front end: analyze curvature input, emit spectra, bounds and
certificates as JSON or text tables.

Subcommands: analyze, certify, spectrum, selftest.  Input is either
--model '<json>' (the model-spec vocabulary of model_spaces) or
--dense <path> pointing at {"n": int, "components": [n^4 floats]} in
row-major (i, j, k, l) order.  Exit codes: 2 for unparsable input, 3 when
the tensor fails the curvature-symmetry validation.
"""

import argparse
import json
import sys

import numpy as np

from . import __version__
from .bochner import ric_l_matrix
from .errors import CurvatureSymmetryError, CurvkindError
from .model_spaces import curvature_from_spec
from .operators import (
    cluster_eigenvalues,
    first_kind_matrix,
    ricci_scalar,
    second_kind_matrix,
    spectrum,
)
from .tensor_core import dimension_cap, validate_curvature
from .weights import (
    certify,
    constants,
    k_positivity_profile,
    ric_l_lower_bound,
)

PARSE_ERROR, VALIDATION_ERROR = 2, 3


def _fail(code, message):
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(code)


def _load_curvature(args):
    if bool(args.model) == bool(args.dense):
        _fail(PARSE_ERROR, "provide exactly one of --model or --dense")
    try:
        if args.model:
            spec = json.loads(args.model)
            descriptor = spec
        else:
            with open(args.dense) as handle:
                spec = json.load(handle)
            spec.setdefault("kind", "dense")
            descriptor = {"kind": "dense", "path": args.dense, "n": spec.get("n")}
        R = curvature_from_spec(spec)
    except (OSError, json.JSONDecodeError, CurvkindError, KeyError, TypeError) as exc:
        _fail(PARSE_ERROR, f"cannot build curvature tensor: {exc}")
    if R.n > dimension_cap():
        _fail(
            PARSE_ERROR,
            f"n={R.n} exceeds the soft cap {dimension_cap()} "
            "(set CURVKIND_NMAX to raise it)",
        )
    try:
        validate_curvature(R)
    except CurvatureSymmetryError as exc:
        _fail(VALIDATION_ERROR, f"invalid curvature tensor: {exc}")
    return R, descriptor


def _spectrum_block(matrix):
    eigs = spectrum(matrix)
    return {
        "eigenvalues": [float(v) for v in eigs],
        "clusters": [[value, mult] for value, mult in cluster_eigenvalues(eigs)],
    }


def _certificate_dicts(certs):
    out = []
    for c in certs:
        entry = {
            "theorem": c.theorem,
            "verdict": c.verdict,
            "conclusion": c.conclusion,
            "sums": {k: float(v) for k, v in c.sums.items()},
        }
        if c.p is not None:
            entry["p"] = c.p
        out.append(entry)
    return out


def _per_p_rows(R, p_values):
    n = R.n
    summary = ricci_scalar(R)
    eigs = spectrum(second_kind_matrix(R))
    rows = []
    for p in p_values:
        row = {"p": p, "ric_l_min_eigenvalue": float(spectrum(ric_l_matrix(R, p))[0])}
        if 2 * p <= n:
            row["c_p"] = constants(n, p).c_p
            bounds = {
                "weak": ric_l_lower_bound(eigs, summary, n, p, "weak"),
                "improved": ric_l_lower_bound(eigs, summary, n, p, "improved"),
            }
            if p == 1:
                bounds["one_form"] = ric_l_lower_bound(eigs, summary, n, p, "one_form")
            if summary.is_einstein():
                bounds["einstein"] = ric_l_lower_bound(eigs, summary, n, p, "einstein")
            row["bounds"] = {k: float(v) for k, v in sorted(bounds.items())}
        rows.append(row)
    return rows


def _analysis_report(R, descriptor, kappa=None, p_mode="half"):
    n = R.n
    summary = ricci_scalar(R)
    if p_mode == "all":
        p_values = list(range(1, n))
    elif p_mode == "half":
        p_values = list(range(1, n // 2 + 1))
    else:
        p_values = [int(p_mode)]
    eigs = spectrum(second_kind_matrix(R))
    return {
        "input": descriptor,
        "n": n,
        "summary": {
            "ricci_eigenvalues": [float(v) for v in np.linalg.eigvalsh(summary.ricci)],
            "scalar": summary.scalar,
            "einstein_defect": summary.einstein_defect,
        },
        "second_kind": _spectrum_block(second_kind_matrix(R)),
        "first_kind": _spectrum_block(first_kind_matrix(R)),
        "k_profile": k_positivity_profile(eigs),
        "per_p": _per_p_rows(R, p_values),
        "certificates": _certificate_dicts(certify(R, kappa=kappa)),
    }


def _emit_json(payload):
    print(json.dumps(payload, sort_keys=True, indent=2))


def _fmt(x):
    return f"{x:.6g}"


def _emit_analysis_table(report):
    print(f"n = {report['n']}  input = {json.dumps(report['input'], sort_keys=True)}")
    s = report["summary"]
    print(
        f"scal = {_fmt(s['scalar'])}  einstein defect = {_fmt(s['einstein_defect'])}"
    )
    print("Ricci eigenvalues: " + ", ".join(_fmt(v) for v in s["ricci_eigenvalues"]))
    for name in ("second_kind", "first_kind"):
        clus = ", ".join(f"{_fmt(v)} (x{m})" for v, m in report[name]["clusters"])
        print(f"{name.replace('_', ' ')} spectrum: {clus}")
    prof = report["k_profile"]
    print(
        f"k-positivity: positive from k = {prof['positive']}, "
        f"nonnegative from k = {prof['nonnegative']}"
    )
    print("per-degree table:")
    print("  p   C_p        min eig Ric_L   bounds")
    for row in report["per_p"]:
        cp = _fmt(row["c_p"]) if "c_p" in row else "-"
        bounds = row.get("bounds", {})
        btxt = "  ".join(f"{k}={_fmt(v)}" for k, v in bounds.items())
        print(f"  {row['p']:<3} {cp:<10} {_fmt(row['ric_l_min_eigenvalue']):<15} {btxt}")
    _emit_certificate_table(report["certificates"])


def _emit_certificate_table(cert_dicts):
    print("certificates:")
    for c in cert_dicts:
        tag = c["theorem"] if "p" not in c else f"{c['theorem']} p={c['p']}"
        sums = "  ".join(f"{k}={_fmt(v)}" for k, v in sorted(c["sums"].items()))
        print(f"  {tag:<14} {c['verdict']:<6} {c['conclusion']}  [{sums}]")


def _cmd_analyze(args):
    R, descriptor = _load_curvature(args)
    report = _analysis_report(R, descriptor, kappa=args.kappa, p_mode=args.p)
    if args.table:
        _emit_analysis_table(report)
    else:
        _emit_json(report)
    return 0


def _cmd_certify(args):
    R, descriptor = _load_curvature(args)
    eigs = spectrum(second_kind_matrix(R))
    payload = {
        "input": descriptor,
        "n": R.n,
        "k_profile": k_positivity_profile(eigs),
        "certificates": _certificate_dicts(certify(R, kappa=args.kappa)),
    }
    if args.table:
        prof = payload["k_profile"]
        print(
            f"k-positivity: positive from k = {prof['positive']}, "
            f"nonnegative from k = {prof['nonnegative']}"
        )
        _emit_certificate_table(payload["certificates"])
    else:
        _emit_json(payload)
    return 0


def _cmd_spectrum(args):
    R, descriptor = _load_curvature(args)
    if args.operator == "second":
        matrix = second_kind_matrix(R)
    elif args.operator == "first":
        matrix = first_kind_matrix(R)
    else:
        matrix = ric_l_matrix(R, args.ric_l_p)
    payload = {"input": descriptor, "n": R.n, "operator": args.operator}
    payload.update(_spectrum_block(matrix))
    if args.table:
        clus = ", ".join(f"{_fmt(v)} (x{m})" for v, m in payload["clusters"])
        print(f"{args.operator} spectrum: {clus}")
    else:
        _emit_json(payload)
    return 0


def _cmd_selftest(args):
    from .selftest import run_selftest

    ok = run_selftest(seed=args.seed, seeds=args.seeds, n_max=args.n_max)
    return 0 if ok else 1


def _add_input_and_format(parser):
    parser.add_argument("--model", help="inline model-spec JSON")
    parser.add_argument("--dense", help="path to a dense-components JSON file")
    parser.add_argument("--kappa", type=float, default=None, help="estimate hypothesis level")
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="table", action="store_false", help="JSON output (default)")
    fmt.add_argument("--table", dest="table", action="store_true", help="human-readable table")
    parser.set_defaults(table=False)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="curvkind",
        description="spectra, eigenvalue-sum bounds and vanishing certificates "
        "for algebraic curvature tensors",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="full report: spectra, bounds, certificates")
    _add_input_and_format(analyze)
    analyze.add_argument(
        "--p", default="half", help="'half' (default, p <= n/2), 'all', or a single degree"
    )
    analyze.set_defaults(func=_cmd_analyze)

    cert = sub.add_parser("certify", help="hypothesis checks only")
    _add_input_and_format(cert)
    cert.set_defaults(func=_cmd_certify)

    spec = sub.add_parser("spectrum", help="eigenvalues of one induced operator")
    _add_input_and_format(spec)
    spec.add_argument(
        "--operator", choices=("second", "first", "ric_l"), default="second"
    )
    spec.add_argument("--ric-l-p", dest="ric_l_p", type=int, default=1)
    spec.set_defaults(func=_cmd_spectrum)

    self_test = sub.add_parser("selftest", help="run the randomized identity sweeps")
    self_test.add_argument("--seed", type=int, default=20260114, help="base RNG seed")
    self_test.add_argument("--seeds", type=int, default=20, help="draws per sweep")
    self_test.add_argument("--n-max", type=int, default=6, help="largest dimension swept")
    self_test.set_defaults(func=_cmd_selftest)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "p", None) not in (None, "half", "all"):
        try:
            int(args.p)
        except ValueError:
            _fail(PARSE_ERROR, f"--p must be 'half', 'all' or an integer, got {args.p!r}")
    try:
        return args.func(args)
    except CurvkindError as exc:
        _fail(PARSE_ERROR, str(exc))


if __name__ == "__main__":
    raise SystemExit(main())
