"""Catalog of enumerated geometries with derived fields, JSON persistence for
catalogs and circle configurations, and the search queries used to locate
geometries by structure or isomorphism."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from circlegeom.dimension import convex_dimension, meet_irreducibles
from circlegeom.disks import Circle, Configuration
from circlegeom.implications import generate_basis
from circlegeom.representation import (
    ObstructionCertificate,
    VERIFIED,
    detect_obstructions,
    verify_full,
)
from circlegeom.sets import (
    ConvexGeometry,
    GroundSet,
    canonical_form,
    enumerate_geometries,
    subset_decode,
    subset_elements,
)

STATUS_OPEN = "open"
STATUS_VERIFIED = "verified"
STATUS_IMPOSSIBLE = "impossible"

_COORD_DIGITS = 12  # significant digits kept when writing circle coordinates


@dataclass
class CatalogRecord:
    """One geometry with its derived structure and representability status."""

    id: str
    n: int
    family_mask: int
    closed_sets: list[str]
    basis: list[tuple[str, str]]
    meet_irreducibles: list[str]
    cdim: int
    unique_atom: bool
    unique_coatom: bool
    status: str = STATUS_OPEN
    certificate: ObstructionCertificate | None = None
    representation: Configuration | None = None

    @property
    def ground(self) -> GroundSet:
        return GroundSet(self.n)

    @property
    def geometry(self) -> ConvexGeometry:
        return ConvexGeometry(self.ground, self.family_mask)


def build_record(ground: GroundSet, family_mask: int, record_id: str) -> CatalogRecord:
    """Compute every derived field of a catalog record from its family mask."""
    g = ConvexGeometry(ground, family_mask)
    basis = generate_basis(g)
    irr = meet_irreducibles(g)
    members = g.members
    singletons = sum(1 for m in members if m.bit_count() == 1)
    coatoms = sum(1 for m in members if m.bit_count() == ground.n - 1)
    certs = detect_obstructions(g)
    return CatalogRecord(
        id=record_id,
        n=ground.n,
        family_mask=family_mask,
        closed_sets=[subset_decode(m, ground) for m in members],
        basis=[
            (subset_decode(r.premise, ground), subset_decode(r.conclusion, ground))
            for r in basis.rules
        ],
        meet_irreducibles=[subset_decode(m, ground) for m in irr],
        cdim=convex_dimension(g),
        unique_atom=singletons == 1,
        unique_coatom=coatoms == 1,
        status=STATUS_IMPOSSIBLE if certs else STATUS_OPEN,
        certificate=certs[0] if certs else None,
    )


def build_catalog(ground: GroundSet) -> list[CatalogRecord]:
    """Records for every non-isomorphic geometry on the ground set, with ids
    G{n}-{k} assigned in the deterministic enumeration order."""
    return [
        build_record(ground, mask, f"G{ground.n}-{k}")
        for k, mask in enumerate(enumerate_geometries(ground), start=1)
    ]


def attach_representation(record: CatalogRecord, conf: Configuration) -> CatalogRecord:
    """Return a copy of the record carrying a verified representation.

    Refuses configurations that do not verify against the record's family
    under the identity labeling."""
    if record.status == STATUS_IMPOSSIBLE:
        raise ValueError(f"{record.id} carries an obstruction certificate")
    report = verify_full(record.geometry, conf)
    if report.verdict != VERIFIED:
        raise ValueError(f"configuration does not verify against {record.id}: {report.verdict}")
    out = CatalogRecord(**{**record.__dict__})
    out.representation = conf
    out.status = STATUS_VERIFIED
    return out


def search(
    records: Sequence[CatalogRecord],
    *,
    unique_atom: bool | None = None,
    unique_coatom: bool | None = None,
    cdim: int | None = None,
    iso_to: int | None = None,
    status: str | None = None,
) -> list[str]:
    """Ids of records matching every given filter, in catalog order.

    iso_to matches on isomorphism: the query mask is canonicalized and
    compared with the records' (already canonical) family masks."""
    out = []
    canon_by_n: dict[int, int | None] = {}
    for rec in records:
        if unique_atom is not None and rec.unique_atom != unique_atom:
            continue
        if unique_coatom is not None and rec.unique_coatom != unique_coatom:
            continue
        if cdim is not None and rec.cdim != cdim:
            continue
        if status is not None and rec.status != status:
            continue
        if iso_to is not None:
            if rec.n not in canon_by_n:
                try:
                    canon_by_n[rec.n] = canonical_form(iso_to, rec.ground)
                except ValueError:
                    canon_by_n[rec.n] = None  # mask too wide for this n
            if rec.family_mask != canon_by_n[rec.n]:
                continue
        out.append(rec.id)
    return out


def _round_coord(v: float) -> float:
    return float(f"{v:.{_COORD_DIGITS}g}")


def configuration_to_json(conf: Configuration) -> dict:
    ground = conf.ground
    return {
        "n": ground.n,
        "labels": list(ground.labels),
        "circles": [
            {
                "label": ground.label(i),
                "x": _round_coord(c.x),
                "y": _round_coord(c.y),
                "r": _round_coord(c.r),
            }
            for i, c in enumerate(conf.circles)
        ],
    }


def configuration_from_json(data: dict) -> Configuration:
    try:
        n = int(data["n"])
        entries = {item["label"]: item for item in data["circles"]}
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed configuration object: {exc}") from exc
    ground = GroundSet(n)
    if sorted(entries) != list(ground.labels):
        raise ValueError(
            f"configuration must have exactly one circle per label {ground.labels!r}"
        )
    circles = tuple(
        Circle(float(entries[lab]["x"]), float(entries[lab]["y"]), float(entries[lab]["r"]))
        for lab in ground.labels
    )
    return Configuration(ground, circles)


def save_configuration(conf: Configuration, path: str | Path) -> None:
    Path(path).write_text(json.dumps(configuration_to_json(conf), indent=2) + "\n")


def load_configuration(path: str | Path) -> Configuration:
    return configuration_from_json(json.loads(Path(path).read_text()))


def _certificate_to_json(cert: ObstructionCertificate, ground: GroundSet) -> dict:
    return {
        "pattern": cert.pattern,
        "elements": [ground.label(i) for i in cert.elements],
        "implications": [
            [subset_decode(premise, ground), ground.label(u)]
            for premise, u in cert.implications
        ],
    }


def _certificate_from_json(data: dict, ground: GroundSet) -> ObstructionCertificate:
    from circlegeom.sets import subset_encode

    return ObstructionCertificate(
        pattern=data["pattern"],
        elements=tuple(ground.index(lab) for lab in data["elements"]),
        implications=tuple(
            (subset_encode(premise, ground), ground.index(u))
            for premise, u in data["implications"]
        ),
    )


def record_to_json(rec: CatalogRecord) -> dict:
    out = {
        "id": rec.id,
        "n": rec.n,
        "family_mask": rec.family_mask,
        "closed_sets": rec.closed_sets,
        "basis": [list(rule) for rule in rec.basis],
        "meet_irreducibles": rec.meet_irreducibles,
        "cdim": rec.cdim,
        "unique_atom": rec.unique_atom,
        "unique_coatom": rec.unique_coatom,
        "status": rec.status,
        "certificate": (
            _certificate_to_json(rec.certificate, rec.ground) if rec.certificate else None
        ),
        "representation": (
            configuration_to_json(rec.representation) if rec.representation else None
        ),
    }
    return out


def record_from_json(data: dict) -> CatalogRecord:
    ground = GroundSet(int(data["n"]))
    return CatalogRecord(
        id=data["id"],
        n=int(data["n"]),
        family_mask=int(data["family_mask"]),
        closed_sets=list(data["closed_sets"]),
        basis=[(p, c) for p, c in data["basis"]],
        meet_irreducibles=list(data["meet_irreducibles"]),
        cdim=int(data["cdim"]),
        unique_atom=bool(data["unique_atom"]),
        unique_coatom=bool(data["unique_coatom"]),
        status=data["status"],
        certificate=(
            _certificate_from_json(data["certificate"], ground)
            if data.get("certificate")
            else None
        ),
        representation=(
            configuration_from_json(data["representation"])
            if data.get("representation")
            else None
        ),
    )


def write_catalog(records: Iterable[CatalogRecord], out: TextIO) -> None:
    """One JSON object per line."""
    for rec in records:
        out.write(json.dumps(record_to_json(rec)) + "\n")


def save_catalog(records: Iterable[CatalogRecord], path: str | Path) -> None:
    with open(path, "w") as fh:
        write_catalog(records, fh)


def load_catalog(path: str | Path) -> list[CatalogRecord]:
    records = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                records.append(record_from_json(json.loads(line)))
    return records
