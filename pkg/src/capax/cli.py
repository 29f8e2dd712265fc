"""Command-line front end.

    capax caps         --domain FILE --kmax N [--method M] [--format F]
    capax contact-caps --domain FILE --kmax N [--override FILE]
    capax structure    --domain FILE --T RAT --ell ODD [--eta-point Z]...
    capax obstruct     --source FILE --target FILE --kmax N [--contact]
    capax obstruct     --ekp --r2 RAT --R2 RAT [--d N]
    capax spectrum     --ell ODD --z RAT [--M ODD]

Exit codes: 0 success; 1 parse/validation error; 2 enumeration budget
exceeded; 3 cross-check mismatch; 4 domain not big; 5 structure window not
admissible (the report is still printed).

The enumeration budget defaults to 10^7 lattice vectors and can be
overridden with the environment variable CAPAX_ENUM_BUDGET.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

import numpy as np

from . import capacities, circulant, contact, output, structure
from .errors import (
    CapaxError,
    CrossCheckMismatchError,
    InvalidInputError,
    KTooLargeForEnumerationError,
    NotBigError,
    ValidationError,
)
from .rationals import to_fraction
from .toric import ELLIPSOID, BALL, ToricDomain, validate_domain

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_BUDGET = 2
EXIT_MISMATCH = 3
EXIT_NOT_BIG = 4
EXIT_NOT_ADMISSIBLE = 5

_METHODS = {
    "lattice": capacities.METHOD_LATTICE,
    "polar": capacities.METHOD_POLAR,
    "closed": capacities.METHOD_CLOSED,
    "cross-check": capacities.METHOD_CROSS_CHECK,
}

DISCREPANCY_NOTE = (
    "for the ellipsoid with a = (3.5, 4) the capacity formula "
    "min{T : floor(T/3.5) + floor(T/4) >= k} gives c_4 = 8 and c_7 = 14; "
    "tables quoting 7.5 and 11 for these entries list the sorted sums "
    "{3.5*m + 4*n}, which is a different sequence. Use --override to "
    "reproduce such a row verbatim."
)


def _is_discrepancy_domain(domain: ToricDomain) -> bool:
    return (domain.shape in (ELLIPSOID, BALL)
            and domain.params == (to_fraction("7/2"), to_fraction(4)))


def _budget() -> int:
    raw = os.environ.get("CAPAX_ENUM_BUDGET")
    if raw is None:
        return capacities.DEFAULT_ENUM_BUDGET
    try:
        value = int(raw)
        if value < 1:
            raise ValueError
        return value
    except ValueError:
        raise InvalidInputError(
            f"CAPAX_ENUM_BUDGET must be a positive integer, got {raw!r}")


def _read_file(path: str) -> bytes:
    try:
        with open(path, "rb") as handle:
            return handle.read()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}")


def _load_domain(path: str) -> tuple[ToricDomain, bytes]:
    data = _read_file(path)
    spec = output.load_json(data.decode("utf-8"))
    return validate_domain(spec), data


def _emit(doc: dict, rendered: str, fmt: str):
    if fmt == output.FORMAT_JSON:
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(rendered)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_caps(args) -> int:
    domain, data = _load_domain(args.domain)
    report = capacities.capacity_sequence(
        domain, args.kmax, _METHODS[args.method], _budget())
    notes = list(report.notes)
    if args.note_discrepancy and _is_discrepancy_domain(domain):
        notes.append(DISCREPANCY_NOTE)
    report = capacities.CapacityReport(
        report.domain, report.k_max, report.method, report.entries,
        tuple(notes))
    doc = output.make_document("caps", args.format, output.digest_bytes(data),
                               output.capacity_report_payload(report))
    _emit(doc, output.render_capacity_report(report, args.format), args.format)
    return EXIT_OK


def _cmd_contact_caps(args) -> int:
    domain, data = _load_domain(args.domain)
    override = None
    digest_data = data
    if args.override:
        raw = _read_file(args.override)
        digest_data = data + raw
        parsed = output.load_json(raw.decode("utf-8"))
        if not isinstance(parsed, list):
            raise InvalidInputError("override file must be a JSON array")
        override = [to_fraction(x) for x in parsed]
    report = contact.contact_sequence(domain, args.kmax, override, _budget())
    notes = list(report.notes)
    if args.note_discrepancy and _is_discrepancy_domain(domain):
        notes.append(DISCREPANCY_NOTE)
    report = contact.ContactCapacityReport(
        report.domain, report.k_max, report.polar_inf_norm, report.big,
        report.entries, tuple(notes))
    doc = output.make_document("contact-caps", args.format,
                               output.digest_bytes(digest_data),
                               output.contact_report_payload(report))
    _emit(doc, output.render_contact_report(report, args.format), args.format)
    return EXIT_OK


def _cmd_structure(args) -> int:
    domain, data = _load_domain(args.domain)
    eta_points = None
    if args.eta_point:
        eta_points = [point.split(",") for point in args.eta_point]
    report = structure.structure_report(
        domain, to_fraction(args.T), args.ell, eta_points)
    doc = output.make_document("structure", args.format,
                               output.digest_bytes(data),
                               output.structure_report_payload(report))
    _emit(doc, output.render_structure_report(report, args.format),
          args.format)
    return EXIT_OK if report.admissible else EXIT_NOT_ADMISSIBLE


def _cmd_obstruct(args) -> int:
    if args.ekp:
        if args.r2 is None or args.R2 is None:
            raise InvalidInputError("--ekp requires --r2 and --R2")
        report = contact.ekp_squeezing_verdict(
            to_fraction(args.r2), to_fraction(args.R2), args.d)
        digest = output.digest_text(f"ekp:{report.r2}:{report.R2}:{args.d}")
        doc = output.make_document("obstruct", args.format, digest,
                                   output.squeezing_report_payload(report))
        _emit(doc, output.render_squeezing_report(report, args.format),
              args.format)
        return EXIT_OK
    if not args.source or not args.target:
        raise InvalidInputError("obstruct requires --source and --target "
                                "(or --ekp with --r2/--R2)")
    source, data_s = _load_domain(args.source)
    target, data_t = _load_domain(args.target)
    if args.contact:
        report = contact.obstruct_contact_embedding(
            source, target, args.kmax, _budget())
    else:
        report = capacities.obstruct_embedding(
            source, target, args.kmax, _budget())
    doc = output.make_document("obstruct", args.format,
                               output.digest_bytes(data_s + data_t),
                               output.obstruction_report_payload(report))
    _emit(doc, output.render_obstruction_report(report, args.format),
          args.format)
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    z = to_fraction(args.z)
    form = circulant.circulant_form(z, args.ell, args.M)
    index = circulant.index_count(form)
    fixed = circulant.fixed_index_count(form)
    oracle = circulant.jacobi_nonnegative_count(form)
    fixed_oracle = circulant.jacobi_fixed_nonnegative_count(form)
    eigs = np.sort(circulant.circulant_eigenvalues(form))
    payload = {
        "report": "spectrum",
        "M": form.M,
        "ell": form.ell,
        "z": str(form.z),
        "matrix_dim": form.matrix_dim,
        "index_count": index,
        "fixed_index_count": fixed,
        "oracle_agreement": bool(oracle == index and fixed_oracle == fixed),
        "eigenvalue_min": float(eigs[0]),
        "eigenvalue_max": float(eigs[-1]),
    }
    digest = output.digest_text(f"spectrum:{form.M}:{form.ell}:{form.z}")
    doc = output.make_document("spectrum", args.format, digest, payload)
    _emit(doc, output.render_spectrum(payload, args.format), args.format)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="capax",
        description="Exact capacities and structural invariants of convex "
                    "toric domains.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p):
        p.add_argument("--format", choices=output.FORMATS,
                       default=output.FORMAT_TABLE)

    p_caps = sub.add_parser("caps", help="capacity sequence c_k")
    p_caps.add_argument("--domain", required=True)
    p_caps.add_argument("--kmax", type=int, required=True)
    p_caps.add_argument("--method", choices=sorted(_METHODS),
                        default="cross-check")
    p_caps.add_argument("--note-discrepancy",
                        action=argparse.BooleanOptionalAction, default=True)
    add_format(p_caps)
    p_caps.set_defaults(func=_cmd_caps)

    p_ccaps = sub.add_parser("contact-caps",
                             help="contact capacity sequence [c]_k")
    p_ccaps.add_argument("--domain", required=True)
    p_ccaps.add_argument("--kmax", type=int, required=True)
    p_ccaps.add_argument("--override",
                         help="JSON array giving the c_k row to use")
    p_ccaps.add_argument("--note-discrepancy",
                         action=argparse.BooleanOptionalAction, default=True)
    add_format(p_ccaps)
    p_ccaps.set_defaults(func=_cmd_contact_caps)

    p_struct = sub.add_parser("structure",
                              help="structural invariants at level T")
    p_struct.add_argument("--domain", required=True)
    p_struct.add_argument("--T", required=True)
    p_struct.add_argument("--ell", type=int, required=True)
    p_struct.add_argument("--eta-point", action="append", default=[],
                          help="slice point as comma-separated rationals; "
                               "repeatable (use --eta-point=-2,-2)")
    add_format(p_struct)
    p_struct.set_defaults(func=_cmd_structure)

    p_obs = sub.add_parser("obstruct",
                           help="embedding obstruction or squeezing verdict")
    p_obs.add_argument("--source")
    p_obs.add_argument("--target")
    p_obs.add_argument("--kmax", type=int, default=10)
    p_obs.add_argument("--contact", action="store_true",
                       help="compare contact capacities (both domains big)")
    p_obs.add_argument("--ekp", action="store_true",
                       help="ball-squeezing verdict from --r2/--R2")
    p_obs.add_argument("--r2", help="pi r^2 of the target ball")
    p_obs.add_argument("--R2", help="pi R^2 of the source ball")
    p_obs.add_argument("--d", type=int, default=2,
                       help="complex dimension for the EKP verdict")
    add_format(p_obs)
    p_obs.set_defaults(func=_cmd_obstruct)

    p_spec = sub.add_parser("spectrum",
                            help="circulant form index counts")
    p_spec.add_argument("--ell", type=int, required=True)
    p_spec.add_argument("--z", required=True)
    p_spec.add_argument("--M", type=int, default=None,
                        help="odd block count; smallest valid one if omitted")
    add_format(p_spec)
    p_spec.set_defaults(func=_cmd_spectrum)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KTooLargeForEnumerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CrossCheckMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except NotBigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_BIG
    except (ValidationError, CapaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
