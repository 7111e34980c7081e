"""Per-genus census reports and their JSON, markdown and CSV renderings."""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources

from .bounds import BoundsRecord, CurveTriple, bounds_record, castelnuovo_pi
from .components import FamilyCandidate, StatusKind, candidates_for
from .enumeration import InvariantViolation

SCHEMA_VERSION = "census-v1"

VERDICT_KINDS = ("Empty", "Irreducible", "Reducible", "Open")


@dataclass(frozen=True)
class Verdict:
    kind: str
    citation: str
    count: int | None = None
    source: str = "reported"

    def __post_init__(self) -> None:
        if self.kind not in VERDICT_KINDS:
            raise ValueError(f"unknown verdict {self.kind!r}")
        if (self.kind == "Reducible") != (self.count is not None):
            raise ValueError("only Reducible verdicts carry a component count")
        if not self.citation:
            raise ValueError("a verdict needs a citation")

    def __str__(self) -> str:
        return f"Reducible({self.count})" if self.kind == "Reducible" else self.kind

    def to_dict(self) -> dict:
        return {"kind": self.kind, "count": self.count, "citation": self.citation, "source": self.source}

    @classmethod
    def from_dict(cls, data: dict) -> Verdict:
        return cls(data["kind"], data["citation"], data.get("count"), data.get("source", "reported"))


# Imported irreducibility results for curves of degree 16 in P^5.
_VERDICTS_16_5: dict[int, Verdict] = {
    21: Verdict("Reducible", "imported theorem (g=21): two components, plane octics on the Veronese surface and 4-gonal curves on scrolls", 2),
    20: Verdict("Irreducible", "imported theorem (g=20): irreducible, general member on a rational normal scroll"),
    19: Verdict("Empty", "imported theorem (g=19): no smooth curves"),
    18: Verdict("Reducible", "imported theorem (g=18): three components, on scrolls, del Pezzo surfaces and elliptic cones", 3),
    17: Verdict("Reducible", "imported theorem (g=17): reducible with at least two components", 2),
    16: Verdict("Open", "open: families listed but no component determined (g=16)"),
    15: Verdict("Open", "open: families listed but no component determined (g=15)"),
    14: Verdict("Irreducible", "imported theorem (g=14): irreducible of dimension chi, general gonality 8"),
    13: Verdict("Irreducible", "imported theorem (g=13): irreducible of the expected dimension chi"),
    12: Verdict("Irreducible", "imported theorem (g=12): irreducible, dominating M_12"),
    11: Verdict("Irreducible", "imported corollary (g=11): irreducible dominating M_g for every g <= 11"),
}

_NOTES_16_5: dict[int, tuple[str, ...]] = {
    21: ("general member of the scroll component is a (4,8) curve on a smooth quadric embedded by O(1,2)",),
    18: (
        "the elliptic-cone component is separated from the del Pezzo one by an admissible-covers argument; not computed",
        "del Pezzo curves in (9;3^3,2) are hexagonal, with three g^1_6 and a g^1_7",
    ),
    17: (
        "del Pezzo search range 8 <= a <= 11 also admits a=9 and a=11 classes; they form a second Cremona orbit "
        "{(9;4,3,2,2),(10;5,3,3,3),(11;5,4,4,4)} for which no class is displayed in the imported result",
        "surfaces of degree 4 carry no such curves: scroll, cone and Veronese solvers are empty",
    ),
    16: (
        "del Pezzo family has the expected dimension chi (excess 0)",
        "a further family on P^2_7 embedded by (4;2,1^6) has dimension chi + 1",
    ),
    15: (
        "example: (9;3^3,2^4) on P^2_7 embedded by (4;2,1^6)",
        "its residual g^3_12 maps to a (6,6) curve on a quadric with two triple points and four nodes; not enough for a component",
    ),
    14: ("gonality 8 via a cited multiplicity theorem; lines through a node cut a g^1_8",),
}

_DENSE_NOTE = "d >= 2g-7 and g + r <= d: a known general result gives an irreducible family dominating M_g"


def verdict_for(t: CurveTriple, candidates: list[FamilyCandidate]) -> Verdict:
    d, g, r = t.as_tuple()
    if g > castelnuovo_pi(d, r):
        return Verdict("Empty", "computed: genus above the Castelnuovo bound", source="computed")
    if (d, r) == (16, 5) and g in _VERDICTS_16_5:
        return _VERDICTS_16_5[g]
    # outside the cited table only computed candidates are reported
    return Verdict("Open", "computed candidates only; no imported verdict", source="computed")


def _computed_notes(candidates: list[FamilyCandidate]) -> list[str]:
    notes = []
    for c in candidates:
        if c.reported_dim is not None and c.reported_dim != c.dim:
            notes.append(f"{c.label}: dimension computed {c.dim}, reported {c.reported_dim}")
    return notes


@dataclass(frozen=True)
class GenusReport:
    triple: CurveTriple
    bounds: BoundsRecord
    candidates: tuple[FamilyCandidate, ...]
    verdict: Verdict
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.verdict.kind == "Empty":
            live = [c.label for c in self.candidates if c.status.kind is not StatusKind.EXCLUDED]
            if live:
                raise InvariantViolation(f"verdict Empty but candidates {live} are not excluded")

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "triple": {"d": self.triple.d, "g": self.triple.g, "r": self.triple.r},
            "bounds": self.bounds.to_dict(),
            "candidates": [c.to_dict() for c in self.candidates],
            "verdict": self.verdict.to_dict(),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict) -> GenusReport:
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"expected schema {SCHEMA_VERSION}, got {data.get('schema')!r}")
        t = data["triple"]
        return cls(
            triple=CurveTriple(t["d"], t["g"], t["r"]),
            bounds=BoundsRecord.from_dict(data["bounds"]),
            candidates=tuple(FamilyCandidate.from_dict(c) for c in data["candidates"]),
            verdict=Verdict.from_dict(data["verdict"]),
            notes=tuple(data["notes"]),
        )


def genus_report(d: int, g: int, r: int) -> GenusReport:
    t = CurveTriple(d, g, r)
    cands = candidates_for(d, g, r)
    notes = list(_NOTES_16_5.get(g, ())) if (d, r) == (16, 5) else []
    notes += [n for n in _computed_notes(cands) if n not in notes]
    if verdict_for(t, cands).kind == "Open" and r >= 3 and d >= 2 * g - 7 and g + r <= d:
        notes.append(_DENSE_NOTE)
    return GenusReport(t, bounds_record(t), tuple(cands), verdict_for(t, cands), tuple(notes))


def census(d: int, r: int, genera: range, workers: int = 1) -> list[GenusReport]:
    """Reports for each genus, in increasing genus regardless of ``workers``."""
    top = castelnuovo_pi(d, r) + 1
    if genera.start < 0 or genera.stop - 1 > top or len(genera) == 0:
        raise ValueError(f"genus range must lie within 0..{top}")
    gs = list(genera)
    if workers <= 1:
        return [genus_report(d, g, r) for g in gs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda g: genus_report(d, g, r), gs))


# ---------------------------------------------------------------- rendering


def load_schema() -> dict:
    return json.loads(resources.files(__package__).joinpath("census-v1.schema.json").read_text())


def validate(doc: dict) -> None:
    import jsonschema

    jsonschema.validate(doc, load_schema())


def census_document(reports: list[GenusReport]) -> dict:
    return {"schema": SCHEMA_VERSION, "reports": [r.to_dict() for r in reports]}


def render_json(reports: list[GenusReport]) -> str:
    return json.dumps(census_document(reports), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_json(text: str) -> list[GenusReport]:
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA_VERSION:
        raise ValueError("not a census-v1 document")
    return [GenusReport.from_dict(r) for r in doc["reports"]]


TABLE_COLUMNS = ("g", "regime", "candidates", "chi", "excess", "verdict", "citation")


def _candidate_cell(c: FamilyCandidate) -> str:
    dim = f"{c.dim}" if c.reported_dim is None else f"{c.dim} (computed) / {c.reported_dim} (reported)"
    return f"{c.label}: {dim} [{c.status}]"


def table_rows(reports: list[GenusReport]) -> list[dict[str, str]]:
    rows = []
    for rep in reports:
        shown = [c for c in rep.candidates if c.status.kind is not StatusKind.EXCLUDED]
        rows.append({
            "g": str(rep.triple.g),
            "regime": rep.bounds.genus_regime.value,
            "candidates": "; ".join(_candidate_cell(c) for c in shown) or "-",
            "chi": str(rep.bounds.chi),
            "excess": "; ".join(f"{c.label}: {c.excess:+d}" for c in shown) or "-",
            "verdict": str(rep.verdict),
            "citation": rep.verdict.citation,
        })
    return rows


def render_markdown(reports: list[GenusReport]) -> str:
    out = io.StringIO()
    if reports:
        t = reports[0].triple
        out.write(f"# Census of curves of degree {t.d} in P^{t.r}\n\n")
    out.write("| " + " | ".join(TABLE_COLUMNS) + " |\n")
    out.write("|" + "---|" * len(TABLE_COLUMNS) + "\n")
    for row in table_rows(reports):
        out.write("| " + " | ".join(row[c].replace("|", "\\|") for c in TABLE_COLUMNS) + " |\n")
    for rep in reports:
        b = rep.bounds
        out.write(f"\n## g = {rep.triple.g}\n\n")
        out.write(
            f"- bounds: rho={b.rho} lambda={b.lam} chi={b.chi} pi={b.pi} pi1={b.pi1} ({b.pi1_regime})\n"
        )
        for c in rep.candidates:
            out.write(f"- {c.label}: {_candidate_numbers(c)} [{c.status}]\n")
        for n in rep.notes:
            out.write(f"- note: {n}\n")
    return out.getvalue()


def _candidate_numbers(c: FamilyCandidate) -> str:
    parts = [f"dim={c.dim}", f"chi={c.chi}", f"lambda={c.lam}", f"excess={c.excess:+d}", f"linear_series_dim={c.linear_series_dim}"]
    if c.reported_dim is not None:
        parts.append(f"reported_dim={c.reported_dim}")
    for name in ("gonality_upper", "moduli_image_dim", "codim", "fiber_extra"):
        value = getattr(c, name)
        if value is not None:
            parts.append(f"{name}={value}")
    parts.extend(f"route {name}={dim}" for name, dim in c.routes)
    return " ".join(parts)


def render_csv(reports: list[GenusReport]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    w.writeheader()
    for row in table_rows(reports):
        w.writerow(row)
    return buf.getvalue()


RENDERERS = {"json": render_json, "md": render_markdown, "csv": render_csv}
