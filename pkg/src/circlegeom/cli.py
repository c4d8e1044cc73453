"""Command-line interface: catalog enumeration and queries, configuration
verification, obstruction scans, derived representations, TikZ export, and
the local HTTP service.

Exit codes: 0 on success, 2 when a verification does not pass, 1 on errors.
"""

from __future__ import annotations

import argparse
import re
import sys

from circlegeom.catalog import (
    CatalogRecord,
    build_catalog,
    load_catalog,
    load_configuration,
    save_configuration,
    search,
    write_catalog,
)
from circlegeom.implications import generate_basis
from circlegeom.representation import (
    VERIFIED,
    derive_representation,
    detect_obstructions,
    verify_by_propositions,
    verify_full,
)
from circlegeom.sets import ConvexGeometry, GroundSet, subset_decode, subset_elements
from circlegeom.tikz import export_tikz

_ID_RE = re.compile(r"^G(\d+)-(\d+)$")


def _records_for(n: int, catalog_path: str | None) -> list[CatalogRecord]:
    if catalog_path:
        return [rec for rec in load_catalog(catalog_path) if rec.n == n]
    if n == 5:
        print(
            "note: building the 5-element catalog from scratch; "
            "pass --catalog FILE to reuse a saved one",
            file=sys.stderr,
        )
    return build_catalog(GroundSet(n))


def _record_by_id(record_id: str, catalog_path: str | None) -> CatalogRecord:
    m = _ID_RE.match(record_id)
    if not m:
        raise ValueError(f"malformed geometry id {record_id!r} (expected e.g. G4-7)")
    records = _records_for(int(m.group(1)), catalog_path)
    for rec in records:
        if rec.id == record_id:
            return rec
    raise ValueError(f"no geometry {record_id} in the catalog")


def _geometry_arg(value: str, n: int, catalog_path: str | None) -> ConvexGeometry:
    """A geometry given either as a catalog id or as a decimal family mask."""
    if _ID_RE.match(value):
        rec = _record_by_id(value, catalog_path)
        if rec.n != n:
            raise ValueError(f"{value} is on {rec.n} elements, expected {n}")
        return rec.geometry
    return ConvexGeometry(GroundSet(n), int(value))


def _fmt_subset(label_string: str) -> str:
    return label_string if label_string else "{}"


def _print_record(rec: CatalogRecord) -> None:
    print(f"id: {rec.id}")
    print(f"n: {rec.n}")
    print(f"family_mask: {rec.family_mask}")
    print("closed sets: " + " ".join(_fmt_subset(s) for s in rec.closed_sets))
    if rec.basis:
        print(
            "implications: "
            + "; ".join(f"{p} -> {c}" for p, c in rec.basis)
        )
    else:
        print("implications: (none)")
    print(
        "meet-irreducibles: "
        + " ".join(_fmt_subset(s) for s in rec.meet_irreducibles)
    )
    print(f"cdim: {rec.cdim}")
    print(f"unique atom: {'yes' if rec.unique_atom else 'no'}")
    print(f"unique coatom: {'yes' if rec.unique_coatom else 'no'}")
    print(f"status: {rec.status}")
    if rec.certificate:
        cert = rec.certificate
        ground = rec.ground
        imps = ", ".join(
            f"{subset_decode(p, ground)} -> {ground.label(u)}"
            for p, u in cert.implications
        )
        elems = "".join(ground.label(i) for i in cert.elements)
        print(f"certificate: {cert.pattern} on ({elems}): {imps}")


def _cmd_enumerate(args) -> int:
    records = build_catalog(GroundSet(args.n))
    if args.output:
        with open(args.output, "w") as fh:
            write_catalog(records, fh)
        print(f"wrote {len(records)} records to {args.output}")
    else:
        write_catalog(records, sys.stdout)
    return 0


def _cmd_describe(args) -> int:
    if args.id:
        rec = _record_by_id(args.id, args.catalog)
    else:
        if args.n is None:
            raise ValueError("--mask needs -n to fix the ground set size")
        from circlegeom.catalog import build_record

        ground = GroundSet(args.n)
        rec = build_record(ground, int(args.mask), f"mask:{args.mask}")
    _print_record(rec)
    return 0


def _cmd_verify(args) -> int:
    conf = load_configuration(args.circles)
    geometry = _geometry_arg(args.geometry, conf.ground.n, args.catalog)
    if args.by_propositions:
        report = verify_by_propositions(geometry, generate_basis(geometry), conf)
    else:
        report = verify_full(geometry, conf)
    ground = conf.ground
    print(f"verdict: {report.verdict}")
    print(
        "induced closed sets: "
        + " ".join(_fmt_subset(subset_decode(m, ground)) for m in subset_elements(report.induced))
    )
    for rule in report.violated_implications:
        print(
            f"violated implication: {subset_decode(rule.premise, ground)} -> "
            f"{subset_decode(rule.conclusion, ground)}"
        )
    for m in report.non_closed_meet_irreducibles:
        print(f"meet-irreducible not closed: {_fmt_subset(subset_decode(m, ground))}")
    for pair in report.marginal_pairs:
        print(
            f"marginal: element {ground.label(pair.element)} vs "
            f"{_fmt_subset(subset_decode(pair.subset, ground))} (margin {pair.margin:.3g})"
        )
    return 0 if report.verdict == VERIFIED else 2


def _cmd_obstructions(args) -> int:
    records = _records_for(args.n, args.catalog)
    hits = 0
    for rec in records:
        certs = detect_obstructions(rec.geometry)
        if not certs:
            continue
        hits += 1
        ground = rec.ground
        for cert in certs:
            imps = ", ".join(
                f"{subset_decode(p, ground)} -> {ground.label(u)}"
                for p, u in cert.implications
            )
            print(f"{rec.id}: {cert.pattern}: {imps}")
    print(f"{hits} of {len(records)} geometries carry obstruction certificates")
    return 0


def _cmd_derive(args) -> int:
    conf = load_configuration(getattr(args, "from"))
    target = _geometry_arg(args.target, conf.ground.n + 1, args.catalog)
    derived = derive_representation(conf, target, args.strategy)
    if args.output:
        save_configuration(derived, args.output)
        print(f"wrote candidate configuration to {args.output}")
    else:
        import json

        from circlegeom.catalog import configuration_to_json

        print(json.dumps(configuration_to_json(derived), indent=2))
    return 0


def _cmd_search(args) -> int:
    records = _records_for(args.n, args.catalog)
    ids = search(
        records,
        unique_atom=True if args.unique_atom else None,
        unique_coatom=True if args.unique_coatom else None,
        cdim=args.cdim,
        iso_to=int(args.iso_to) if args.iso_to is not None else None,
        status=args.status,
    )
    for record_id in ids:
        print(record_id)
    return 0


def _cmd_tikz(args) -> int:
    conf = load_configuration(args.circles)
    text = export_tikz(conf, args.width)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_serve(args) -> int:
    records: list[CatalogRecord] = []
    if args.catalog:
        for path in args.catalog:
            records.extend(load_catalog(path))
    for n in args.build_n:
        records.extend(build_catalog(GroundSet(n)))
    if not records:
        for n in (1, 2, 3, 4):
            records.extend(build_catalog(GroundSet(n)))
    from circlegeom.service import serve

    serve(records, port=args.port, frontend_dir=args.frontend)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circlegeom",
        description="Convex geometries on small ground sets and their circle representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="enumerate all geometries for a ground set size")
    p.add_argument("-n", type=int, required=True, help="ground set size (1..5)")
    p.add_argument("-o", "--output", help="catalog file to write (JSON lines)")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("describe", help="show one geometry's derived structure")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--id", help="catalog id, e.g. G4-7")
    group.add_argument("--mask", help="family mask as a decimal integer")
    p.add_argument("-n", type=int, help="ground set size (required with --mask)")
    p.add_argument("--catalog", help="catalog file to resolve ids from")
    p.set_defaults(func=_cmd_describe)

    p = sub.add_parser("verify", help="verify a circle configuration against a geometry")
    p.add_argument("--geometry", required=True, help="catalog id or decimal family mask")
    p.add_argument("--circles", required=True, help="configuration file")
    p.add_argument("--by-propositions", action="store_true", help="use the two practical checks")
    p.add_argument("--catalog", help="catalog file to resolve ids from")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("obstructions", help="scan a catalog for obstruction certificates")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--catalog", help="catalog file to reuse")
    p.set_defaults(func=_cmd_obstructions)

    p = sub.add_parser("derive", help="extend a configuration by one circle")
    p.add_argument("--from", required=True, help="source configuration file")
    p.add_argument("--target", required=True, help="target geometry (id or mask)")
    p.add_argument(
        "--strategy",
        required=True,
        help="atom | coatom | double:<el> | nest:<el>",
    )
    p.add_argument("--catalog", help="catalog file to resolve ids from")
    p.add_argument("-o", "--output", help="file for the candidate configuration")
    p.set_defaults(func=_cmd_derive)

    p = sub.add_parser("search", help="list geometry ids matching filters")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--catalog", help="catalog file to reuse")
    p.add_argument("--unique-atom", action="store_true")
    p.add_argument("--unique-coatom", action="store_true")
    p.add_argument("--cdim", type=int)
    p.add_argument("--iso-to", help="family mask; matches up to relabeling")
    p.add_argument("--status", choices=["open", "verified", "impossible"])
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("tikz", help="export a configuration as TikZ")
    p.add_argument("--circles", required=True, help="configuration file")
    p.add_argument("--width", type=float, default=8.0, help="target width in cm")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=_cmd_tikz)

    p = sub.add_parser("serve", help="run the local HTTP service")
    p.add_argument("--port", type=int, default=8437)
    p.add_argument("--catalog", action="append", default=[], help="catalog file(s) to load")
    p.add_argument(
        "--build-n",
        action="append",
        type=int,
        default=[],
        help="ground set size(s) to enumerate at startup",
    )
    p.add_argument("--frontend", help="directory of static UI files to serve")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:  # noqa: BLE001 - single reporting point for CLI errors
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
