import pytest

from circlegeom import (
    ConvexGeometry,
    GroundSet,
    apply_permutation,
    attach_representation,
    build_catalog,
    build_record,
    convex_dimension,
    detect_obstructions,
    generate_basis,
    load_catalog,
    load_configuration,
    meet_irreducibles,
    save_catalog,
    save_configuration,
    search,
    subset_decode,
)
from circlegeom.catalog import record_from_json, record_to_json

G2 = GroundSet(2)
G3 = GroundSet(3)


@pytest.fixture(scope="module")
def catalog3():
    return build_catalog(G3)


def test_build_catalog_ids_and_order(catalog3):
    assert [rec.id for rec in catalog3] == [f"G3-{k}" for k in range(1, 7)]
    sizes = [len(rec.closed_sets) for rec in catalog3]
    assert sizes == sorted(sizes)


def test_chain_record_fields(catalog3):
    rec = catalog3[0]
    assert rec.family_mask == 139
    assert rec.closed_sets == ["", "a", "ab", "abc"]
    assert rec.basis == [("b", "a"), ("c", "ab")]
    assert rec.meet_irreducibles == ["", "a", "ab"]
    assert rec.cdim == 1
    assert rec.unique_atom and rec.unique_coatom
    assert rec.status == "open"
    assert rec.certificate is None


def test_derived_fields_recompute(catalog3):
    for rec in catalog3:
        g = rec.geometry
        ground = rec.ground
        basis = generate_basis(g)
        assert rec.basis == [
            (subset_decode(r.premise, ground), subset_decode(r.conclusion, ground))
            for r in basis.rules
        ]
        assert rec.meet_irreducibles == [
            subset_decode(m, ground) for m in meet_irreducibles(g)
        ]
        assert rec.cdim == convex_dimension(g)
        assert (rec.status == "impossible") == bool(detect_obstructions(g))
        assert (rec.certificate is not None) == (rec.status == "impossible")


def test_catalog_roundtrip(tmp_path, catalog3):
    path = tmp_path / "cat3.jsonl"
    save_catalog(catalog3, path)
    loaded = load_catalog(path)
    assert loaded == catalog3


def test_record_json_roundtrip_with_certificate():
    rec = build_record(G3, 139, "X-1")
    data = record_to_json(rec)
    assert record_from_json(data) == rec


def test_search_queries(catalog3):
    assert search(catalog3, cdim=1) == ["G3-1"]
    assert search(catalog3, status="open") == [rec.id for rec in catalog3]
    assert search(catalog3, status="impossible") == []
    atoms = search(catalog3, unique_atom=True)
    for rec in catalog3:
        singletons = [s for s in rec.closed_sets if len(s) == 1]
        assert (rec.id in atoms) == (len(singletons) == 1)


def test_search_is_conjunctive(catalog3):
    both = search(catalog3, unique_atom=True, cdim=1)
    assert both == ["G3-1"]
    assert search(catalog3, cdim=1, status="impossible") == []


def test_search_iso_to_matches_relabelings(catalog3):
    for rec in catalog3:
        for perm in ((1, 0, 2), (2, 1, 0), (1, 2, 0)):
            moved = apply_permutation(rec.family_mask, perm, G3)
            assert search(catalog3, iso_to=moved) == [rec.id]


def test_attach_representation(fixture_configurations, tmp_path):
    catalog2 = build_catalog(G2)
    chain_rec = next(rec for rec in catalog2 if rec.family_mask == 11)
    conf = fixture_configurations["chain2"]
    verified = attach_representation(chain_rec, conf)
    assert verified.status == "verified"
    assert verified.representation == conf
    path = tmp_path / "cat2.jsonl"
    save_catalog([verified], path)
    assert load_catalog(path) == [verified]
    other = next(rec for rec in catalog2 if rec.family_mask == 15)
    with pytest.raises(ValueError):
        attach_representation(other, conf)


def test_configuration_roundtrip(tmp_path, fixture_configurations):
    for name, conf in fixture_configurations.items():
        path = tmp_path / f"{name}.json"
        save_configuration(conf, path)
        assert load_configuration(path) == conf


def test_configuration_file_validation(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"n": 2, "labels": ["a"], "circles": [{"label": "a", "x": 0, "y": 0, "r": 1}]}')
    with pytest.raises(ValueError):
        load_configuration(path)
