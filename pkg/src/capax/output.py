"""Rendering and serialization of reports.

Three formats: a deterministic plain-text table, JSON, and CSV.  JSON
payloads are exact: every rational is serialized as its canonical "p" or
"p/q" string and parsing an emitted document reproduces the report
bit-exactly.  Tables and CSV render rationals as terminating decimals when
the denominator is 2^a 5^b (so 7/2 prints as 3.5) and as "p/q" otherwise.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from fractions import Fraction
from typing import Sequence

from ._version import __version__
from .capacities import CapacityEntry, CapacityReport, ObstructionReport
from .contact import ContactCapacityReport, ContactEntry, SqueezingReport
from .errors import InvalidInputError
from .rationals import format_rational, to_fraction
from .structure import StructureReport
from .toric import domain_to_spec, validate_domain

FORMAT_TABLE = "table"
FORMAT_JSON = "json"
FORMAT_CSV = "csv"
FORMATS = (FORMAT_TABLE, FORMAT_JSON, FORMAT_CSV)


def digest_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def digest_text(text: str) -> str:
    return digest_bytes(text.encode("utf-8"))


def make_document(command: str, fmt: str, input_digest: str,
                  payload: dict) -> dict:
    return {
        "command": command,
        "version": __version__,
        "input_digest": input_digest,
        "format": fmt,
        "payload": payload,
    }


def load_json(text: str):
    """Parse JSON keeping decimal literals exact (floats arrive as strings)."""
    try:
        return json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"malformed JSON: {exc}") from exc


def _q(value: Fraction) -> str:
    return str(Fraction(value))


def _bool(value: bool) -> str:
    return "true" if value else "false"


# ---------------------------------------------------------------------------
# payloads (exact, round-trippable)
# ---------------------------------------------------------------------------

def capacity_report_payload(report: CapacityReport) -> dict:
    return {
        "report": "capacities",
        "domain": domain_to_spec(report.domain),
        "k_max": report.k_max,
        "method": report.method,
        "entries": [
            {"k": e.k, "c": _q(e.value),
             "witness_vector": list(e.witness_vector),
             "witness_T": _q(e.witness_T)}
            for e in report.entries
        ],
        "notes": list(report.notes),
    }


def capacity_report_from_payload(payload: dict) -> CapacityReport:
    entries = tuple(
        CapacityEntry(int(e["k"]), to_fraction(e["c"]),
                      tuple(int(x) for x in e["witness_vector"]),
                      to_fraction(e["witness_T"]))
        for e in payload["entries"])
    return CapacityReport(validate_domain(payload["domain"]),
                          int(payload["k_max"]), payload["method"], entries,
                          tuple(payload.get("notes", ())))


def contact_report_payload(report: ContactCapacityReport) -> dict:
    return {
        "report": "contact-capacities",
        "domain": domain_to_spec(report.domain),
        "k_max": report.k_max,
        "polar_inf_norm": _q(report.polar_inf_norm),
        "big": report.big,
        "entries": [
            {"k": e.k, "c_k": _q(e.c_k), "c_source": e.c_source,
             "contact_c_k": e.contact_c_k, "spf": e.spf}
            for e in report.entries
        ],
        "notes": list(report.notes),
    }


def contact_report_from_payload(payload: dict) -> ContactCapacityReport:
    entries = tuple(
        ContactEntry(int(e["k"]), to_fraction(e["c_k"]), e["c_source"],
                     int(e["contact_c_k"]), int(e["spf"]))
        for e in payload["entries"])
    return ContactCapacityReport(
        validate_domain(payload["domain"]), int(payload["k_max"]),
        to_fraction(payload["polar_inf_norm"]), bool(payload["big"]),
        entries, tuple(payload.get("notes", ())))


def structure_report_payload(report: StructureReport) -> dict:
    return {
        "report": "structure",
        "domain": domain_to_spec(report.domain),
        "T": _q(report.T),
        "ell": report.ell,
        "p_ell": report.p_ell,
        "admissible": report.admissible,
        "admissibility_bound": _q(report.admissibility_bound),
        "min_degree": report.min_degree,
        "torsion_window": list(report.torsion_window)
        if report.torsion_window is not None else None,
        "free_rank": report.free_rank,
        "eta_exponents": [
            {"z": [_q(x) for x in z], "exponent": e}
            for z, e in report.eta_exponents
        ],
        "bouquet_corners": list(report.bouquet_corners)
        if report.bouquet_corners is not None else None,
        "torsion_free": report.torsion_free,
        "notes": list(report.notes),
    }


def structure_report_from_payload(payload: dict) -> StructureReport:
    window = payload.get("torsion_window")
    return StructureReport(
        validate_domain(payload["domain"]),
        to_fraction(payload["T"]), int(payload["ell"]), int(payload["p_ell"]),
        bool(payload["admissible"]),
        to_fraction(payload["admissibility_bound"]),
        min_degree=payload.get("min_degree"),
        torsion_window=tuple(window) if window is not None else None,
        free_rank=payload.get("free_rank"),
        eta_exponents=tuple(
            (tuple(to_fraction(x) for x in item["z"]), int(item["exponent"]))
            for item in payload.get("eta_exponents", ())),
        bouquet_corners=tuple(payload["bouquet_corners"])
        if payload.get("bouquet_corners") is not None else None,
        torsion_free=payload.get("torsion_free"),
        notes=tuple(payload.get("notes", ())))


def obstruction_report_payload(report: ObstructionReport) -> dict:
    return {
        "report": "obstruction",
        "source": domain_to_spec(report.source),
        "target": domain_to_spec(report.target),
        "k_max": report.k_max,
        "comparison": report.comparison,
        "verdict": report.verdict,
        "obstructed": report.obstructed,
        "first_k": report.first_k,
        "source_value": _q(report.source_value)
        if report.source_value is not None else None,
        "target_value": _q(report.target_value)
        if report.target_value is not None else None,
        "notes": list(report.notes),
    }


def obstruction_report_from_payload(payload: dict) -> ObstructionReport:
    sv = payload.get("source_value")
    tv = payload.get("target_value")
    return ObstructionReport(
        validate_domain(payload["source"]), validate_domain(payload["target"]),
        int(payload["k_max"]), payload["comparison"],
        bool(payload["obstructed"]), payload.get("first_k"),
        to_fraction(sv) if sv is not None else None,
        to_fraction(tv) if tv is not None else None,
        tuple(payload.get("notes", ())))


def squeezing_report_payload(report: SqueezingReport) -> dict:
    return {
        "report": "squeezing",
        "r2": _q(report.r2),
        "R2": _q(report.R2),
        "dimension": report.dimension,
        "verdict": report.verdict,
        "integer_witness": report.integer_witness,
        "notes": list(report.notes),
    }


def squeezing_report_from_payload(payload: dict) -> SqueezingReport:
    return SqueezingReport(
        to_fraction(payload["r2"]), to_fraction(payload["R2"]),
        int(payload["dimension"]), payload["verdict"],
        payload.get("integer_witness"), tuple(payload.get("notes", ())))


# ---------------------------------------------------------------------------
# tables and CSV
# ---------------------------------------------------------------------------

def _table(header_lines: Sequence[str], columns: Sequence[str],
           rows: Sequence[Sequence[str]], notes: Sequence[str]) -> str:
    lines = list(header_lines)
    if columns:
        lines.append("")
        lines.append(" | ".join(columns))
        for row in rows:
            lines.append(" | ".join(row))
    for note in notes:
        lines.append("")
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def _csv(columns: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buf.getvalue()


def _witness_str(v: Sequence[int]) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def render_capacity_report(report: CapacityReport, fmt: str) -> str:
    columns = ["k", "c_k", "witness_vector", "witness_T"]
    rows = [
        [str(e.k), format_rational(e.value), _witness_str(e.witness_vector),
         format_rational(e.witness_T)]
        for e in report.entries
    ]
    if fmt == FORMAT_CSV:
        csv_rows = [[r[0], r[1], " ".join(map(str, e.witness_vector)), r[3]]
                    for r, e in zip(rows, report.entries)]
        return _csv(columns, csv_rows)
    header = [
        "command: caps",
        f"domain: {report.domain.describe()}",
        f"method: {report.method}",
        f"k_max: {report.k_max}",
    ]
    return _table(header, columns, rows, report.notes)


def render_contact_report(report: ContactCapacityReport, fmt: str) -> str:
    columns = ["k", "c_k", "c_source", "contact_c_k", "spf"]
    rows = [
        [str(e.k), format_rational(e.c_k), e.c_source, str(e.contact_c_k),
         str(e.spf)]
        for e in report.entries
    ]
    if fmt == FORMAT_CSV:
        return _csv(columns, rows)
    header = [
        "command: contact-caps",
        f"domain: {report.domain.describe()}",
        f"polar_inf_norm: {format_rational(report.polar_inf_norm)}",
        f"big: {_bool(report.big)}",
        f"k_max: {report.k_max}",
    ]
    return _table(header, columns, rows, report.notes)


def render_structure_report(report: StructureReport, fmt: str) -> str:
    pairs = [
        ("domain", report.domain.describe()),
        ("T", format_rational(report.T)),
        ("ell", str(report.ell)),
        ("p_ell", str(report.p_ell)),
        ("admissible", _bool(report.admissible)),
        ("admissibility_bound", format_rational(report.admissibility_bound)),
    ]
    if report.admissible:
        window = ("[]" if report.torsion_window is None
                  else f"[{report.torsion_window[0]}, {report.torsion_window[1]}]")
        pairs.extend([
            ("min_degree", str(report.min_degree)),
            ("torsion_window", window),
            ("free_rank", str(report.free_rank)),
            ("torsion_free", _bool(bool(report.torsion_free))),
            ("bouquet_corners",
             "{" + ", ".join(str(c) for c in report.bouquet_corners) + "}"),
        ])
        for z, e in report.eta_exponents:
            z_str = "(" + ", ".join(format_rational(x) for x in z) + ")"
            pairs.append((f"eta_exponent{z_str}", f"u^{e}"))
    if fmt == FORMAT_CSV:
        return _csv(["field", "value"], [[k, v] for k, v in pairs])
    header = ["command: structure"] + [f"{k}: {v}" for k, v in pairs]
    return _table(header, (), (), report.notes)


def render_obstruction_report(report: ObstructionReport, fmt: str) -> str:
    pairs = [
        ("source", report.source.describe()),
        ("target", report.target.describe()),
        ("k_max", str(report.k_max)),
        ("comparison", report.comparison),
        ("verdict", report.verdict),
    ]
    if report.obstructed:
        pairs.extend([
            ("first_k", str(report.first_k)),
            ("source_value", format_rational(report.source_value)),
            ("target_value", format_rational(report.target_value)),
        ])
    if fmt == FORMAT_CSV:
        return _csv(["field", "value"], [[k, v] for k, v in pairs])
    header = ["command: obstruct"] + [f"{k}: {v}" for k, v in pairs]
    return _table(header, (), (), report.notes)


def render_squeezing_report(report: SqueezingReport, fmt: str) -> str:
    pairs = [
        ("pi_r2", format_rational(report.r2)),
        ("pi_R2", format_rational(report.R2)),
        ("dimension", str(report.dimension)),
        ("verdict", report.verdict),
        ("integer_witness", str(report.integer_witness)
         if report.integer_witness is not None else "-"),
    ]
    if fmt == FORMAT_CSV:
        return _csv(["field", "value"], [[k, v] for k, v in pairs])
    header = ["command: obstruct --ekp"] + [f"{k}: {v}" for k, v in pairs]
    return _table(header, (), (), report.notes)


def render_spectrum(payload: dict, fmt: str) -> str:
    pairs = [
        ("M", str(payload["M"])),
        ("ell", str(payload["ell"])),
        ("z", payload["z"]),
        ("matrix_dim", str(payload["matrix_dim"])),
        ("index_count", str(payload["index_count"])),
        ("fixed_index_count", str(payload["fixed_index_count"])),
        ("oracle_agreement", _bool(payload["oracle_agreement"])),
        ("eigenvalue_min", repr(payload["eigenvalue_min"])),
        ("eigenvalue_max", repr(payload["eigenvalue_max"])),
    ]
    if fmt == FORMAT_CSV:
        return _csv(["field", "value"], [[k, v] for k, v in pairs])
    header = ["command: spectrum"] + [f"{k}: {v}" for k, v in pairs]
    return _table(header, (), (), ())
