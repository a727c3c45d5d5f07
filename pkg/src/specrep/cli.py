"""Command-line surface: certify | analyze | represent | hv | verify, with a
versioned JSON output format and a batch manifest mode.

Exit codes: 0 success, 1 negative verdict or NotFound, 2 violated
precondition, 3 parse/usage error, 70 internal invariant breach.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
from fractions import Fraction

from .certify import MINOR_CEILING, certify_hyperbolic, certify_real_rooted
from .curvedata import analyze_curve
from .errors import InternalCheckFailed, ParseError, PreconditionError
from .exactalg import (
    FIELD_QI,
    PolyMatrix,
    RadPoly,
    UniPoly,
    format_bipoly,
    format_scalar,
    format_unipoly,
    parse_bipoly,
    parse_scalar,
    parse_unipoly,
)
from .hvpipeline import (
    Pencil,
    TernaryForm,
    _grid_verify,
    check_degree_bound,
    hv_representation,
    normalize_direction,
)
from .ideallat import NOT_FOUND, default_search_bound
from .represent import (
    SpectralRep,
    hermitian_representation,
    symmetric_representation_search,
    verify_representation,
)

SCHEMA = 1
BOUND_ENV = "SPECREP_BOUND"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PRECONDITION = 2
EXIT_USAGE = 3
EXIT_INTERNAL = 70


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract reserves 2 for violated
    # preconditions, so route usage problems to 3 instead
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_input(text: str) -> str:
    """Inline expression, or @path to read one from a file."""
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            return fh.read().strip()
    return text


def _parse_direction(text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ParseError(f"direction needs three comma-separated rationals, got {text!r}")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad direction {text!r}: {exc}") from None


def _default_bound(f, explicit):
    if explicit is not None:
        if explicit < 0:
            raise ParseError("search bound must be nonnegative")
        return explicit
    env = os.environ.get(BOUND_ENV)
    if env is not None:
        try:
            b = int(env)
        except ValueError:
            raise ParseError(f"{BOUND_ENV} must be an integer, got {env!r}") from None
        if b < 0:
            raise ParseError(f"{BOUND_ENV} must be nonnegative")
        return b
    return default_search_bound(f)


# -- JSON builders -----------------------------------------------------------


def _certificate_json(cert, source: str, e=None) -> dict:
    out = {
        "schema": SCHEMA,
        "type": "certificate",
        "input": source,
        "verdict": cert.verdict,
        "n": cert.n,
        "minors": [
            {"indices": list(ix), "value": format_unipoly(m)} for ix, m in cert.minors
        ],
    }
    if e is not None:
        out["e"] = [str(c) for c in e]
    if not cert.verdict:
        out["witness"] = {
            "indices": list(cert.witness_indices) if cert.witness_indices else None,
            "minor": format_unipoly(cert.witness_minor) if cert.witness_minor is not None else None,
            "point": str(cert.witness_point) if cert.witness_point is not None else None,
            "value": str(cert.witness_value) if cert.witness_value is not None else None,
        }
    if cert.note:
        out["note"] = cert.note
    return out


def _curve_json(cd) -> dict:
    return {
        "schema": SCHEMA,
        "type": "curve",
        "f": format_bipoly(cd.f),
        "disc": format_unipoly(cd.disc),
        "smooth": cd.smooth,
        "branch_points": [
            {
                "a": format_scalar(p.a),
                "t0": format_scalar(p.t0),
                "e": p.e,
                "m": p.m,
            }
            for p in cd.branch_points
        ],
    }


def _float_str(v: float, prec: int) -> str:
    return f"{v:.{prec}g}"


def _rep_json(rep: SpectralRep, emit_float=None) -> dict:
    out = {"schema": SCHEMA, "type": "representation"}
    out.update(rep.as_json())
    if emit_float is not None:
        out["float"] = {
            "M": [
                [
                    [
                        [_float_str(c.real, emit_float), _float_str(c.imag, emit_float)]
                        for c in _radpoly_float_coeffs(e)
                    ]
                    for e in row
                ]
                for row in rep.M
            ],
            "precision": emit_float,
        }
    return out


def _radpoly_float_coeffs(e: RadPoly):
    import math

    r = math.sqrt(e.radicand)
    out = []
    for k in range(max(e.poly.degree + 1, 1)):
        from .exactalg import as_gauss

        g = as_gauss(e.poly.coeff(k))
        out.append(complex(float(g.re) * r, float(g.im) * r))
    return out


def _pencil_json(p: Pencil, emit_float=None) -> dict:
    out = {"schema": SCHEMA, "type": "pencil"}
    out.update(p.as_json())
    if emit_float is not None:
        def fm(mat):
            return [
                [
                    [_float_str(s.to_float().real, emit_float), _float_str(s.to_float().imag, emit_float)]
                    for s in row
                ]
                for row in mat
            ]

        out["float"] = {"A": fm(p.A), "B": fm(p.B), "C": fm(p.C), "precision": emit_float}
    return out


# -- verify: reconstruct artifacts and recheck them --------------------------


def _parse_matrix(rows, field=FIELD_QI) -> PolyMatrix:
    return PolyMatrix(
        [[parse_unipoly(e).to_field(field) for e in row] for row in rows], field
    )


def _parse_radpoly(obj) -> RadPoly:
    coeffs = tuple(parse_scalar(c) for c in obj["coeffs"])
    poly = UniPoly(coeffs, FIELD_QI)
    return RadPoly(Fraction(obj["radicand"]), poly)


def _rep_from_json(data) -> SpectralRep:
    f = parse_bipoly(data["f"])
    w = data["witness"]
    return SpectralRep(
        kind=data["kind"],
        f=f.to_field(FIELD_QI),
        M=tuple(tuple(_parse_radpoly(e) for e in row) for row in data["M"]),
        M_I=_parse_matrix(w["M_I"]),
        T=_parse_matrix(w["T"]),
        D=tuple(Fraction(d) for d in w["D"]),
        N=_parse_matrix(w["N"]),
    )


def _verify_certificate(data) -> bool:
    # replaying with ceiling >= n reproduces the run that made the artifact
    ceiling = max(MINOR_CEILING, int(data.get("n", 0)))
    if "e" in data:
        e = tuple(Fraction(c) for c in data["e"])
        cert = certify_hyperbolic(TernaryForm(data["input"]), e, ceiling)
        fresh = _certificate_json(cert, data["input"], e)
    else:
        cert = certify_real_rooted(parse_bipoly(data["input"]), ceiling)
        fresh = _certificate_json(cert, data["input"])
    return fresh == data


def _verify_curve(data) -> bool:
    cd = analyze_curve(parse_bipoly(data["f"]))
    return _curve_json(cd) == data


def _verify_rep(data) -> bool:
    if data.get("found") is False:
        return True  # a NotFound record carries nothing checkable
    rep = _rep_from_json(data)
    return verify_representation(rep.f, rep)


def _verify_pencil(data) -> bool:
    if data.get("found") is False:
        return True
    rep = _rep_from_json(data["witness"]["rep"])
    if not verify_representation(rep.f, rep):
        return False
    e = tuple(Fraction(c) for c in data["e"])
    form = TernaryForm(data["form"], e)
    if form.evaluate(e) <= 0:
        return False
    prime, U = normalize_direction(form, e)
    if [[str(c) for c in row] for row in U] != data["witness"]["U"]:
        return False
    try:
        _grid_verify(rep, prime)
    except InternalCheckFailed:
        return False
    base, root = Fraction(data["scale"]["base"]), int(data["scale"]["root"])
    if base != 1 and form.evaluate(e) != base:
        return False
    # re-derive the pencil and compare the printed faces
    factors = [TernaryForm(t) for t in data["factors"]] if "factors" in data else None
    pen = hv_representation(form, kind=data["kind"], e=e, factors=factors)
    if pen is NOT_FOUND:
        return False
    fresh = _pencil_json(pen)
    for key in ("A", "B", "C", "scale", "n", "kind"):
        if fresh[key] != data[key]:
            return False
    return True


_VERIFIERS = {
    "certificate": _verify_certificate,
    "curve": _verify_curve,
    "representation": _verify_rep,
    "pencil": _verify_pencil,
}


# -- command runners ---------------------------------------------------------


def _run_certify(args) -> tuple:
    source = _read_input(args.input)
    ceiling = args.ceiling if args.ceiling is not None else MINOR_CEILING
    if args.e:
        e = _parse_direction(args.e)
        cert = certify_hyperbolic(TernaryForm(source), e, ceiling)
        result = _certificate_json(cert, source, e)
    else:
        cert = certify_real_rooted(parse_bipoly(source), ceiling)
        result = _certificate_json(cert, source)
    return result, EXIT_OK if cert.verdict else EXIT_NEGATIVE


def _run_analyze(args) -> tuple:
    source = _read_input(args.input)
    cd = analyze_curve(parse_bipoly(source))
    return _curve_json(cd), EXIT_OK


def _run_represent(args) -> tuple:
    source = _read_input(args.input)
    f = parse_bipoly(source)
    if args.kind == "hermitian":
        rep = hermitian_representation(f)
    else:
        rep = symmetric_representation_search(f, _default_bound(f, args.bound))
        if rep is NOT_FOUND:
            return (
                {
                    "schema": SCHEMA,
                    "type": "representation",
                    "kind": "symmetric",
                    "f": source,
                    "found": False,
                },
                EXIT_NEGATIVE,
            )
    return _rep_json(rep, args.emit_float), EXIT_OK


def _run_hv(args) -> tuple:
    source = _read_input(args.input)
    form = TernaryForm(source)
    e = _parse_direction(args.e) if args.e else None
    factors = [TernaryForm(_read_input(t)) for t in args.factor] if args.factor else None
    bound = args.bound
    if args.kind == "symmetric" and bound is None:
        prime, _ = normalize_direction(form, e)
        from .hvpipeline import dehomogenize

        bound = _default_bound(dehomogenize(prime), None)
    pen = hv_representation(form, kind=args.kind, e=e, factors=factors, bound=bound)
    if pen is NOT_FOUND:
        return (
            {"schema": SCHEMA, "type": "pencil", "kind": args.kind, "form": source, "found": False},
            EXIT_NEGATIVE,
        )
    return _pencil_json(pen, args.emit_float), EXIT_OK


def _run_verify(args) -> tuple:
    raw = _read_input(args.input)
    if not raw.lstrip().startswith("{") and os.path.exists(raw):
        with open(raw, "r", encoding="utf-8") as fh:
            raw = fh.read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if data.get("schema") != SCHEMA:
        raise ParseError(f"unsupported schema {data.get('schema')!r}")
    kind = data.get("type")
    checker = _VERIFIERS.get(kind)
    if checker is None:
        raise ParseError(f"unknown artifact type {kind!r}")
    ok = checker(data)
    return (
        {"schema": SCHEMA, "type": "verification", "artifact": kind, "valid": ok},
        EXIT_OK if ok else EXIT_NEGATIVE,
    )


_RUNNERS = {
    "certify": _run_certify,
    "analyze": _run_analyze,
    "represent": _run_represent,
    "hv": _run_hv,
    "verify": _run_verify,
}


def _execute(args) -> int:
    try:
        result, code = _RUNNERS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"precondition violated ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InternalCheckFailed as exc:
        print(f"internal check failed ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = json.dumps(result, indent=2, sort_keys=False)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


# -- manifest batch mode -----------------------------------------------------


def _job_to_argv(job: dict) -> list:
    cmd = job.get("command")
    if cmd not in _RUNNERS:
        raise ParseError(f"manifest job has unknown command {cmd!r}")
    argv = [cmd]
    if job.get("kind"):
        argv += ["--kind", str(job["kind"])]
    if job.get("e"):
        e = job["e"]
        argv += ["--e", e if isinstance(e, str) else ",".join(str(c) for c in e)]
    if job.get("bound") is not None:
        argv += ["--bound", str(job["bound"])]
    if job.get("ceiling") is not None:
        argv += ["--ceiling", str(job["ceiling"])]
    if job.get("emit_float") is not None:
        argv += ["--emit-float", str(job["emit_float"])]
    for fct in job.get("factors", []) or []:
        argv += ["--factor", fct]
    if "input" not in job:
        raise ParseError("manifest job is missing 'input'")
    argv.append(str(job["input"]))
    return argv


def _run_manifest_job(line: str) -> tuple:
    """(exit code, stdout text, stderr text) for one manifest line."""
    import io

    try:
        job = json.loads(line)
    except json.JSONDecodeError as exc:
        return EXIT_USAGE, "", f"bad manifest line: {exc}"
    try:
        argv = _job_to_argv(job)
        args = _build_parser().parse_args(argv)
    except ParseError as exc:
        return EXIT_USAGE, "", str(exc)
    except SystemExit as exc:
        return int(exc.code or EXIT_USAGE), "", "unparseable manifest job"
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err
    try:
        code = _execute(args)
    finally:
        sys.stdout, sys.stderr = old
    return code, out.getvalue(), err.getvalue()


def _run_manifest(path: str) -> int:
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        return EXIT_OK
    workers = min(len(lines), os.cpu_count() or 1)
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_run_manifest_job, lines))
    worst = EXIT_OK
    for code, out, err in results:
        if out:
            sys.stdout.write(out)
        if err:
            sys.stderr.write(err if err.endswith("\n") else err + "\n")
        worst = max(worst, code)
    return worst


# -- entry point -------------------------------------------------------------


def _build_parser() -> _Parser:
    p = _Parser(
        prog="specrep",
        description=(
            "Exact certificates of real-rootedness and hyperbolicity, spectral "
            "representations det(tI - M) = f, and definite determinantal pencils."
        ),
    )
    p.add_argument("--manifest", help="run one JSON job per line of FILE, in parallel")
    sub = p.add_subparsers(dest="command")

    def add_common(sp, with_kind=False, with_bound=False, with_float=False):
        sp.add_argument("input", help="inline expression (or @path to read a file)")
        sp.add_argument("--output", help="write the JSON result to a file")
        if with_kind:
            sp.add_argument(
                "--kind", choices=("hermitian", "symmetric"), default="hermitian"
            )
        if with_bound:
            sp.add_argument(
                "--bound",
                type=int,
                help=f"symmetric search degree bound (default: ${BOUND_ENV} or 2n+deg disc)",
            )
        if with_float:
            sp.add_argument(
                "--emit-float",
                type=int,
                metavar="PREC",
                help="also emit a float rendering at PREC significant digits",
            )

    c = sub.add_parser("certify", help="certify real-rootedness (or hyperbolicity with --e)")
    add_common(c)
    c.add_argument("--e", help="rational direction a,b,c: treat input as a ternary form")
    c.add_argument("--ceiling", type=int, help=f"max t-degree for the minor sweep (default {MINOR_CEILING})")

    a = sub.add_parser("analyze", help="branch points, ramification and smoothness data")
    add_common(a)

    r = sub.add_parser("represent", help="spectral representation of a bivariate f")
    add_common(r, with_kind=True, with_bound=True, with_float=True)

    h = sub.add_parser("hv", help="definite pencil for a hyperbolic ternary form")
    add_common(h, with_kind=True, with_bound=True, with_float=True)
    h.add_argument("--e", help="rational direction a,b,c (required unless baked into the form)")
    h.add_argument(
        "--factor",
        action="append",
        metavar="FORM",
        help="factor of the input form; repeat to block-compose a reducible form",
    )

    v = sub.add_parser("verify", help="recheck a JSON artifact produced by this tool")
    add_common(v)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.manifest:
        if args.command is not None:
            print("--manifest replaces the subcommand", file=sys.stderr)
            return EXIT_USAGE
        try:
            return _run_manifest(args.manifest)
        except OSError as exc:
            print(f"cannot read manifest: {exc}", file=sys.stderr)
            return EXIT_USAGE
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    return _execute(args)


if __name__ == "__main__":
    raise SystemExit(main())
