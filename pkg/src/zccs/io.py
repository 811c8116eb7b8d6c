"""File formats: canonical JSON code-set files, report files, CSV export.

Code-set files are written in a canonical layout (fixed key order, one code
per line, trailing newline) so that serialize -> parse -> serialize is
byte-identical.  They contain integers only; phases are stored directly and
never converted to floating point.  Reports are plain JSON for human and
machine consumption and carry no such guarantee.
"""

from __future__ import annotations

import json
from pathlib import Path

from .constructions import CodeSet
from .correlation import CorrelationReport
from .gbf import PhaseSequence

FORMAT_VERSION = 1


class CodeSetFormatError(Exception):
    """The file exists but does not parse as a code-set document."""


def code_set_to_document(code_set: CodeSet) -> dict:
    prov = code_set.provenance or {}
    metadata = {
        "q": code_set.q,
        "M": code_set.set_size,
        "N": code_set.code_size,
        "L": code_set.length,
        "Z": code_set.zcz,
        "construction": prov.get("construction"),
        "bit_order": prov.get("bit_order"),
        "parameters": prov.get("parameters"),
    }
    codes = [[list(seq.phases) for seq in code] for code in code_set.codes]
    return {"format_version": FORMAT_VERSION, "metadata": metadata, "codes": codes}


def code_set_from_document(doc) -> CodeSet:
    if not isinstance(doc, dict):
        raise CodeSetFormatError("top level must be an object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise CodeSetFormatError(f"unsupported format version {doc.get('format_version')!r}")
    meta = doc.get("metadata")
    if not isinstance(meta, dict):
        raise CodeSetFormatError("missing metadata object")
    dims = {}
    for key in ("q", "M", "N", "L", "Z"):
        value = meta.get(key)
        if not isinstance(value, int) or isinstance(value, bool):
            raise CodeSetFormatError(f"metadata field {key} must be an integer")
        dims[key] = value
    codes_doc = doc.get("codes")
    if not isinstance(codes_doc, list):
        raise CodeSetFormatError("missing codes array")
    codes = []
    for ci, code in enumerate(codes_doc):
        if not isinstance(code, list):
            raise CodeSetFormatError(f"code {ci} must be an array of sequences")
        rows = []
        for ri, row in enumerate(code):
            if not isinstance(row, list) or not all(
                isinstance(p, int) and not isinstance(p, bool) for p in row
            ):
                raise CodeSetFormatError(f"code {ci} row {ri} must be an array of integers")
            try:
                rows.append(PhaseSequence(dims["q"], tuple(row)))
            except ValueError as exc:
                raise CodeSetFormatError(f"code {ci} row {ri}: {exc}") from exc
        codes.append(tuple(rows))
    provenance = None
    if meta.get("construction") is not None:
        provenance = {
            "construction": meta.get("construction"),
            "bit_order": meta.get("bit_order"),
            "parameters": meta.get("parameters"),
        }
    try:
        return CodeSet(
            q=dims["q"],
            set_size=dims["M"],
            code_size=dims["N"],
            length=dims["L"],
            zcz=dims["Z"],
            codes=tuple(codes),
            provenance=provenance,
        )
    except ValueError as exc:
        raise CodeSetFormatError(str(exc)) from exc


def dumps_code_set(code_set: CodeSet) -> str:
    """Canonical text form: metadata indented, one code per line."""
    doc = code_set_to_document(code_set)
    meta_block = json.dumps(doc["metadata"], indent=2).replace("\n", "\n  ")
    lines = [
        "{",
        f'  "format_version": {doc["format_version"]},',
        f'  "metadata": {meta_block},',
        '  "codes": [',
    ]
    rows = [json.dumps(code, separators=(",", ":")) for code in doc["codes"]]
    for idx, row in enumerate(rows):
        lines.append("    " + row + ("," if idx < len(rows) - 1 else ""))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def save_code_set(code_set: CodeSet, path) -> None:
    Path(path).write_text(dumps_code_set(code_set), encoding="utf-8")


def loads_code_set(text: str) -> CodeSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeSetFormatError(f"not valid JSON: {exc}") from exc
    return code_set_from_document(doc)


def load_code_set(path) -> CodeSet:
    return loads_code_set(Path(path).read_text(encoding="utf-8"))


def report_to_document(report: CorrelationReport) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "summary": {
            "q": report.q,
            "M": report.set_size,
            "N": report.code_size,
            "L": report.length,
            "z_checked": report.z_checked,
            "exact": report.exact,
            "tolerance": report.tolerance,
            "expected_peak": report.expected_peak,
            "measured_zcz": report.measured_zcz,
            "zccs_ok": report.zccs_ok,
            "optimal": report.optimal,
            "violation_count": len(report.violations),
        },
        "peaks": [[v.real, v.imag] for v in report.peaks],
        "violations": [
            {"i": v.i, "j": v.j, "tau": v.tau, "value": [v.value.real, v.value.imag]}
            for v in report.violations
        ],
    }


def save_report(report: CorrelationReport, path) -> None:
    Path(path).write_text(
        json.dumps(report_to_document(report), indent=2) + "\n", encoding="utf-8"
    )


def export_csv(code_set: CodeSet, path) -> None:
    """Comment header, then one line per sequence, code-major order.

    Binary sets export as +-1 values; other moduli export raw phases.
    """
    prov = code_set.provenance or {}
    lines = [
        f"# q={code_set.q}",
        f"# M={code_set.set_size}",
        f"# N={code_set.code_size}",
        f"# L={code_set.length}",
        f"# Z={code_set.zcz}",
        f"# values={'signs' if code_set.q == 2 else 'phases'}",
    ]
    if prov.get("construction"):
        lines.append(f"# construction={prov['construction']}")
        lines.append(f"# bit_order={prov['bit_order']}")
    for code in code_set.codes:
        for seq in code:
            if code_set.q == 2:
                lines.append(",".join(str(1 - 2 * p) for p in seq.phases))
            else:
                lines.append(",".join(str(p) for p in seq.phases))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def import_csv(path) -> CodeSet:
    """Inverse of export_csv up to provenance, which CSV does not carry."""
    meta: dict[str, str] = {}
    rows: list[list[int]] = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            if "=" in body:
                key, _, value = body.partition("=")
                meta[key.strip()] = value.strip()
            continue
        try:
            rows.append([int(x) for x in stripped.split(",")])
        except ValueError as exc:
            raise CodeSetFormatError(f"line {lineno}: non-integer entry") from exc
    try:
        q = int(meta["q"])
        m, n, length, zone = (int(meta[k]) for k in ("M", "N", "L", "Z"))
        values = meta.get("values", "signs" if q == 2 else "phases")
    except (KeyError, ValueError) as exc:
        raise CodeSetFormatError(f"incomplete or invalid header: {exc}") from exc
    if len(rows) != m * n:
        raise CodeSetFormatError(f"expected {m * n} data rows, found {len(rows)}")
    phases_rows = []
    for idx, row in enumerate(rows):
        if len(row) != length:
            raise CodeSetFormatError(f"data row {idx} has {len(row)} entries, expected {length}")
        if values == "signs":
            if any(v not in (1, -1) for v in row):
                raise CodeSetFormatError(f"data row {idx} has entries other than +-1")
            phases_rows.append([(1 - v) // 2 for v in row])
        else:
            phases_rows.append(row)
    try:
        codes = tuple(
            tuple(PhaseSequence(q, tuple(phases_rows[ci * n + ri])) for ri in range(n))
            for ci in range(m)
        )
        return CodeSet(
            q=q, set_size=m, code_size=n, length=length, zcz=zone, codes=codes, provenance=None
        )
    except ValueError as exc:
        raise CodeSetFormatError(str(exc)) from exc
