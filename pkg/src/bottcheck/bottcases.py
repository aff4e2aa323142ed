"""Case registry and verdict engine for Bott-vanishing obstructions.

Each record names a weak Fano geometry and carries whatever numerics the
classification literature pins down; evaluation routes to the matching
obstruction evaluator and quantifies over the unknown Hodge number
h >= 0.  Parameters the literature leaves open stay symbolic in the
reported obstruction, so a record is never silently specialized.
"""

from __future__ import annotations

import configparser
import io
import json
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Tuple

from .exact import Affine
from .theorems import (
    DivisorCaseInput,
    PlaneBundleInput,
    ThreefoldNumerics,
    thm1_closed,
    thm1_derived,
    thm2_chain,
    thm2_closed,
    thm3_Q,
    thm3_value,
)

GEOMETRIES = (
    "delPezzoFib6",
    "delPezzoFib8-small",
    "delPezzoFib8-divisorial",
    "conicBundle",
    "p1BundleOverPlane",
    "table8",
    "table9",
    "table75no1",
)

_THM1_GEOMETRIES = ("delPezzoFib6", "conicBundle", "table8", "table9", "table75no1")
_THM2_GEOMETRIES = ("delPezzoFib8-small", "delPezzoFib8-divisorial")

FAILS_BY_NEGATIVE_CHI = "FAILS_BY_NEGATIVE_CHI"
NEEDS_H0_CHECK = "NEEDS_H0_CHECK"
INCONCLUSIVE = "INCONCLUSIVE"


class RegistryError(ValueError):
    """A registry record is malformed; carries record id and field."""

    def __init__(self, record_id: str, field: str, message: str):
        self.record_id = record_id
        self.field = field
        super().__init__(f"record {record_id!r}, field {field!r}: {message}")


@dataclass(frozen=True)
class CaseRecord:
    id: str
    geometry: str
    h: Optional[Fraction] = None
    c13: Optional[Fraction] = None
    c12H: Optional[Fraction] = None
    c1H2: Optional[Fraction] = None
    c2H: Optional[Fraction] = None
    H3: Optional[Fraction] = None
    d: Optional[int] = None
    a: Optional[Tuple[int, int, int, int]] = None
    k: Optional[int] = None
    c1: Optional[int] = None
    c2: Optional[int] = None
    provenance: str = ""


@dataclass(frozen=True)
class Verdict:
    obstruction: Affine
    conclusion: str
    note: str = ""


def _conclude(obstruction: Affine) -> str:
    if obstruction.is_constant():
        if obstruction.const == 0:
            return NEEDS_H0_CHECK
        return FAILS_BY_NEGATIVE_CHI if obstruction.const > 0 else INCONCLUSIVE
    # Positive for every h >= 0 iff h is the only free symbol, its
    # coefficient is nonnegative, and the constant part is positive.
    if obstruction.symbols() == ("h",):
        if obstruction.coeff("h") >= 0 and obstruction.const > 0:
            return FAILS_BY_NEGATIVE_CHI
    return INCONCLUSIVE


def _as_affine(value) -> Affine:
    return value if isinstance(value, Affine) else Affine(value)


def _sym_or(value, name: str):
    return Affine.sym(name) if value is None else Fraction(value)


def _evaluate_thm1(c: CaseRecord) -> Verdict:
    if c.geometry == "delPezzoFib6":
        subs = {"c12H": 6, "c1H2": 0, "c2H": 6, "H3": 0}
        note = "general fibre numerics of a degree-6 del Pezzo fibration"
    elif c.geometry == "conicBundle":
        if c.d is None:
            d = Affine.sym("d")
        else:
            if c.d <= 0:
                raise RegistryError(c.id, "d", "discriminant degree must be > 0")
            d = Fraction(c.d)
        subs = {"c12H": 12 - _as_affine(d), "c1H2": 2, "c2H": _as_affine(d) + 6, "H3": 0}
        note = "conic-bundle numerics from the discriminant degree d"
    else:
        subs = {}
        note = ""
    n = ThreefoldNumerics(h=c.h, c13=c.c13, c12H=c.c12H, c1H2=c.c1H2, c2H=c.c2H, H3=c.H3)
    closed = _as_affine(thm1_closed(n)).subs(subs)
    derived = _as_affine(thm1_derived(n)).subs(subs)
    if closed != derived:
        raise ArithmeticError(
            f"record {c.id!r}: closed and derived obstruction disagree"
        )
    return Verdict(_as_affine(closed), _conclude(_as_affine(closed)), note)


def _evaluate_thm2(c: CaseRecord) -> Verdict:
    k = _sym_or(c.k, "k")
    if c.a is None:
        obstruction = 2 * Affine.sym("sum_a") + 4 * _as_affine(k)
        note = "twists a0..a3 are user input (external classification tables)"
    else:
        inp = DivisorCaseInput(tuple(c.a), int(c.k), None) if c.k is not None else None
        if inp is None:
            obstruction = _as_affine(2 * sum(c.a)) + 4 * _as_affine(k)
            note = "k is user input"
        else:
            chain = thm2_chain(inp)
            closed = thm2_closed(inp)
            if chain != closed:
                raise ArithmeticError(
                    f"record {c.id!r}: chain and closed obstruction disagree"
                )
            obstruction = _as_affine(closed)
            note = ""
    obstruction = _as_affine(obstruction)
    return Verdict(obstruction, _conclude(obstruction), note)


def _evaluate_thm3(c: CaseRecord) -> Verdict:
    inp = PlaneBundleInput(int(c.c1), int(c.c2))
    value = thm3_value(inp)
    q = thm3_Q(inp).Q
    if q(-1) != value:
        raise ArithmeticError(
            f"record {c.id!r}: Q(-1) and closed obstruction disagree"
        )
    note = ""
    if value == 0:
        note = "h^0 follow-up required; split approximants via thm3_h0_split"
    return Verdict(_as_affine(value), _conclude(_as_affine(value)), note)


def evaluate_case(c: CaseRecord) -> Verdict:
    """Route a case to its evaluator and classify the obstruction.

    Deterministic and independent of any registry context; parameters
    the record leaves unset appear as symbols in the obstruction.
    """
    if c.geometry not in GEOMETRIES:
        raise RegistryError(c.id, "geometry", f"unknown geometry {c.geometry!r}")
    if c.geometry in _THM1_GEOMETRIES:
        return _evaluate_thm1(c)
    if c.geometry in _THM2_GEOMETRIES:
        return _evaluate_thm2(c)
    if c.c1 is None or c.c2 is None:
        missing = [f for f in ("c1", "c2") if getattr(c, f) is None]
        raise RegistryError(c.id, ",".join(missing), "required for a plane bundle")
    return _evaluate_thm3(c)


def builtin_registry() -> tuple:
    """The shipped cases: one per obstruction clause whose numerics the
    classification literature pins down, plus user-completable templates."""
    return (
        CaseRecord(
            id="dp6",
            geometry="delPezzoFib6",
            provenance="degree-6 del Pezzo fibration over the line; "
            "h and c1^3 per family from Fukuoka's classification table",
        ),
        CaseRecord(
            id="dp8-div-i",
            geometry="delPezzoFib8-divisorial",
            k=0,
            provenance="degree-8 del Pezzo fibration, divisorial anticanonical "
            "contraction; Takeuchi (4.3.3) = Jahnke-Peternell-Radloff Table 7.1 "
            "No. 14; twists a0..a3 are user input",
        ),
        CaseRecord(
            id="dp8-div-ii",
            geometry="delPezzoFib8-divisorial",
            k=0,
            provenance="degree-8 del Pezzo fibration, divisorial anticanonical "
            "contraction; Takeuchi (4.3.6) = JPR Table 7.1 No. 15; twists are "
            "user input",
        ),
        CaseRecord(
            id="dp8-div-iii",
            geometry="delPezzoFib8-divisorial",
            k=-1,
            provenance="degree-8 del Pezzo fibration, divisorial anticanonical "
            "contraction; Takeuchi (4.3.7) = JPR Table 7.1 No. 9; twists are "
            "user input",
        ),
        CaseRecord(
            id="dp8-div-iv",
            geometry="delPezzoFib8-divisorial",
            k=2,
            provenance="degree-8 del Pezzo fibration, divisorial anticanonical "
            "contraction; Takeuchi Table 1 No. 11 = JPR Table 7.1 No. 12; "
            "twists are user input",
        ),
        CaseRecord(
            id="conic",
            geometry="conicBundle",
            provenance="conic bundle over the plane, discriminant degree d and "
            "per-family h, c1^3 are user input (JPR tables)",
        ),
        CaseRecord(
            id="p1bundle-33",
            geometry="p1BundleOverPlane",
            c1=3,
            c2=3,
            provenance="line-bundle-fibration cases with E nef but not ample, "
            "(c1, c2) = (3, 3) after twisting; Jahnke-Peternell Table A.3 "
            "No. 2-4",
        ),
        CaseRecord(
            id="table8-no1",
            geometry="table8",
            c13=Fraction(4),
            c12H=Fraction(6),
            c1H2=Fraction(6),
            c2H=Fraction(24),
            H3=Fraction(6),
            provenance="Cutrone-Marshburn Table 8, No. 1",
        ),
        CaseRecord(
            id="table8-no2",
            geometry="table8",
            c13=Fraction(2),
            c12H=Fraction(4),
            c1H2=Fraction(4),
            c2H=Fraction(24),
            H3=Fraction(4),
            provenance="Cutrone-Marshburn Table 8, No. 2",
        ),
        CaseRecord(
            id="table9",
            geometry="table9",
            c13=Fraction(2),
            c12H=Fraction(5),
            c1H2=Fraction(10),
            c2H=Fraction(45),
            H3=Fraction(20),
            provenance="Cutrone-Marshburn Table 9",
        ),
        CaseRecord(
            id="table75-no1",
            geometry="table75no1",
            provenance="Jahnke-Peternell-Radloff Table 7.5 No. 1; evaluation "
            "path identical to the Table 8 cases, numerics are user input",
        ),
    )


# --- registry file format --------------------------------------------------

_REGISTRY_FIELDS = (
    "geometry", "h", "c13", "c12H", "c1H2", "c2H", "H3",
    "d", "a", "k", "c1", "c2", "provenance",
)

_REQUIRED_BY_GEOMETRY = {
    "conicBundle": ("d",),
    "delPezzoFib8-small": ("k",),
    "delPezzoFib8-divisorial": ("k",),
    "p1BundleOverPlane": ("c1", "c2"),
}


def _parse_record(section: str, items: dict) -> CaseRecord:
    kwargs = {"id": section}
    for key, value in items.items():
        if key not in _REGISTRY_FIELDS:
            raise RegistryError(section, key, "unknown field")
        value = value.strip()
        try:
            if key == "geometry" or key == "provenance":
                kwargs[key] = value
            elif key == "a":
                parts = tuple(int(v.strip()) for v in value.split(","))
                kwargs[key] = parts
            elif key in ("d", "k", "c1", "c2"):
                kwargs[key] = int(value)
            else:
                kwargs[key] = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise RegistryError(section, key, f"cannot parse {value!r}") from exc
    record = CaseRecord(**kwargs)
    _validate(record)
    return record


def _validate(c: CaseRecord):
    if c.geometry not in GEOMETRIES:
        raise RegistryError(c.id, "geometry", f"unknown geometry {c.geometry!r}")
    for field in _REQUIRED_BY_GEOMETRY.get(c.geometry, ()):
        if getattr(c, field) is None:
            raise RegistryError(c.id, field, "required for this geometry")
    if c.d is not None and c.geometry != "conicBundle":
        raise RegistryError(c.id, "d", "only conic bundles carry a discriminant")
    if c.a is not None:
        if len(c.a) != 4:
            raise RegistryError(c.id, "a", "need exactly 4 twists")
        if len(set(c.a)) == 4:
            raise RegistryError(c.id, "a", "twists must not be all distinct")


def load_registry(path) -> list:
    """Parse a registry file (key-value blocks, one section per record)."""
    parser = configparser.ConfigParser()
    parser.optionxform = str
    with open(path, "r", encoding="utf-8") as fh:
        parser.read_file(fh)
    return [
        _parse_record(section, dict(parser.items(section)))
        for section in parser.sections()
    ]


def serialize_registry(records) -> str:
    parser = configparser.ConfigParser()
    parser.optionxform = str
    for rec in records:
        parser.add_section(rec.id)
        for field in _REGISTRY_FIELDS:
            value = getattr(rec, field)
            if value is None or value == "":
                continue
            if field == "a":
                parser.set(rec.id, field, ",".join(str(v) for v in value))
            else:
                parser.set(rec.id, field, str(value))
    out = io.StringIO()
    parser.write(out)
    return out.getvalue()


# --- reporting -------------------------------------------------------------


def report_rows(cases) -> list:
    """One row per case, ordered by id: id, geometry, obstruction,
    conclusion, provenance."""
    rows = []
    for rec in sorted(cases, key=lambda r: r.id):
        verdict = evaluate_case(rec)
        rows.append(
            {
                "id": rec.id,
                "geometry": rec.geometry,
                "obstruction": verdict.obstruction.render(),
                "conclusion": verdict.conclusion,
                "provenance": rec.provenance,
            }
        )
    return rows


def report_text(cases) -> str:
    rows = report_rows(cases)
    if not rows:
        return ""
    headers = ("id", "geometry", "obstruction", "conclusion", "provenance")
    widths = {
        h: max(len(h), *(len(r[h]) for r in rows)) for h in headers
    }
    lines = [
        "  ".join(h.ljust(widths[h]) for h in headers),
        "  ".join("-" * widths[h] for h in headers),
    ]
    for r in rows:
        lines.append("  ".join(r[h].ljust(widths[h]) for h in headers))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def report_json(cases) -> str:
    return json.dumps(report_rows(cases), indent=2) + "\n"


def with_twists(record: CaseRecord, a) -> CaseRecord:
    """Convenience for completing a template record with user twists."""
    return replace(record, a=tuple(a))


__all__ = [
    "CaseRecord",
    "Verdict",
    "GEOMETRIES",
    "FAILS_BY_NEGATIVE_CHI",
    "NEEDS_H0_CHECK",
    "INCONCLUSIVE",
    "RegistryError",
    "evaluate_case",
    "builtin_registry",
    "load_registry",
    "serialize_registry",
    "report_rows",
    "report_text",
    "report_json",
    "with_twists",
]
