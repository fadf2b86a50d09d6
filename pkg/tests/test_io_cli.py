"""Serialization round trips, schema validation, and CLI behavior."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from opcat import io_json as io
from opcat.cli import main
from opcat.errors import StructureError
from opcat.fixtures import (boolean_poset_moncat, cyclic_moncat, k2cat,
                            standard_simplex, walking_arrow_2cat)
from opcat.freemon import phi0, phi_tr3, presentations_equivalent
from opcat.grothendieck import canonical_fibration
from opcat.operadic import bouquets, para, terminal_odot, to_simplicial
from opcat.operads import operad_from_2cat, operad_from_moncat
from opcat.simplicial import identity_map, truncate
from opcat.twocat import duskin_nerve


def _fibration():
    return canonical_fibration(bouquets(2),
                               operad_from_2cat(walking_arrow_2cat()))


CORPUS = {
    "simplicial-set/simplex2": lambda: standard_simplex(2),
    "simplicial-set/arrow-nerve": lambda: duskin_nerve(walking_arrow_2cat()),
    "simplicial-map/identity": lambda: identity_map(standard_simplex(3)),
    "two-category/k2": k2cat,
    "monoidal-category/bool": boolean_poset_moncat,
    "operadic-category/para-z2": lambda: para(cyclic_moncat(2)),
    "operadic-functor/projection": lambda: _fibration().projection,
    "operad/arrow": lambda: operad_from_2cat(walking_arrow_2cat()),
    "operad/z3": lambda: operad_from_moncat(cyclic_moncat(3)),
    "split-fibration/bq2-arrow": _fibration,
    "presentation/phi0-3": lambda: phi0(3),
    "presentation/bouquet": lambda: phi_tr3(
        truncate(to_simplicial(bouquets(2)), 3)),
}


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_roundtrip_is_identity_and_byte_stable(name, tmp_path):
    obj = CORPUS[name]()
    kind = name.split("/")[0]
    assert io.kind_of(obj) == kind
    path = tmp_path / "x.json"
    text = io.save(obj, path)
    back = io.load(path, expect=kind)
    assert back == obj
    assert io.dumps(back) == text
    assert io.validate_structure(back).ok


def test_kind_of_rejects_unknown_types():
    with pytest.raises(StructureError, match="no JSON form"):
        io.kind_of(42)


def test_loads_error_taxonomy():
    with pytest.raises(StructureError, match="invalid JSON"):
        io.loads("{broken")
    with pytest.raises(StructureError, match="envelope schema"):
        io.loads('{"kind": "nope", "version": 1, "body": {}}')
    with pytest.raises(StructureError, match="envelope schema"):
        io.loads('{"kind": "simplicial-set", "version": 2, "body": {}}')
    with pytest.raises(StructureError, match="simplicial-set schema"):
        io.loads('{"kind": "simplicial-set", "version": 1, "body": {}}')
    with pytest.raises(StructureError, match="expected kind operad"):
        io.loads(io.dumps(phi0(3)), expect="operad")


def test_decode_rejects_bodies_the_constructors_reject():
    doc = json.loads(io.dumps(standard_simplex(2)))
    doc["body"]["cells"] = doc["body"]["cells"][:-1]
    with pytest.raises(StructureError):
        io.loads(json.dumps(doc))
    doc = json.loads(io.dumps(_fibration()))
    doc["body"]["lifts"].append(doc["body"]["lifts"][0])
    with pytest.raises(StructureError, match="duplicate lift"):
        io.loads(json.dumps(doc))


def _broken_moncat():
    doc = json.loads(io.dumps(cyclic_moncat(2)))
    doc["body"]["tensor_obj"][0][1] = 0
    return io.loads(json.dumps(doc))


def test_workspace_tags_invalid_entries_with_their_reports():
    ws = io.Workspace()
    good = ws.add("good", k2cat())
    bad = ws.add("bad", _broken_moncat())
    assert good.ok and ws.ok("good")
    assert not bad.ok and not ws.ok("bad")
    assert ws.report("bad") is bad
    assert ws.get("good") == k2cat()
    assert ws.names() == ["bad", "good"]


def test_schema_copies_are_byte_identical():
    repo = Path(__file__).resolve().parents[1]
    package = repo / "src" / "opcat" / "schemas"
    published = repo / "schemas"
    names = sorted(p.name for p in package.glob("*.schema.json"))
    assert names == sorted(p.name for p in published.glob("*.schema.json"))
    assert len(names) == 10
    for name in names:
        assert (package / name).read_bytes() == (published / name).read_bytes()


# --------------------------------------------------------------------------
# command-line interface


@pytest.fixture()
def runner(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return CliRunner()


def _invoke(runner, *args):
    return runner.invoke(main, list(args))


def _example(runner, name):
    result = _invoke(runner, "examples", name)
    assert result.exit_code == 0, result.output + result.stderr
    return f"{name}.json"


def test_cli_validate_exit_codes(runner, tmp_path):
    path = _example(runner, "odot")
    assert _invoke(runner, "validate", path).exit_code == 0
    assert _invoke(runner, "validate", path, "--kind", "operad").exit_code == 2
    (tmp_path / "broken.json").write_text("{broken")
    assert _invoke(runner, "validate", "broken.json").exit_code == 2
    mon = _example(runner, "moncatZ2")
    doc = json.loads((tmp_path / mon).read_text())
    doc["body"]["tensor_obj"][0][1] = 0
    (tmp_path / "bad.json").write_text(json.dumps(doc))
    result = _invoke(runner, "validate", "bad.json")
    assert result.exit_code == 1
    assert "violation" in result.output and "tensor" in result.output


def test_cli_nerve_of_terminal_two_category_has_singleton_levels(runner):
    path = _example(runner, "terminal2cat")
    result = _invoke(runner, "nerve", path, "--out", "n.json")
    assert result.exit_code == 0
    assert "levels: 1 1 1 1" in result.output
    N = io.load("n.json", expect="simplicial-set")
    assert N.cells == (1, 1, 1, 1)


def test_cli_groth_then_extract_reproduces_the_operad_bytes(runner, tmp_path):
    base = _example(runner, "odot")
    operad = _example(runner, "operadZ2")
    result = _invoke(runner, "groth", base, operad, "--out", "fib.json")
    assert result.exit_code == 0
    assert "total levels: 1 2 4 8 16" in result.output
    assert "valid" in result.output
    result = _invoke(runner, "extract", "fib.json", "--out", "back.json")
    assert result.exit_code == 0
    assert (tmp_path / "back.json").read_bytes() == \
        (tmp_path / operad).read_bytes()


def test_cli_adjoint_reports_matching_counts(runner):
    sset = _example(runner, "simplex2")
    mon = _example(runner, "moncatZ2")
    result = _invoke(runner, "adjoint", sset, mon)
    assert result.exit_code == 0
    assert "counts 4 = 4, bijection certified" in result.output


def test_cli_adjoint_bound_decides_or_reports_undecided(runner, tmp_path):
    sset = _example(runner, "simplex3")
    mon = _example(runner, "moncatZ2")
    result = _invoke(runner, "adjoint", sset, mon,
                     "--bound", "5", "--out", "p.json")
    assert result.exit_code == 0
    assert "counts 8 = 8, bijection certified" in result.output
    assert "relation sides decided equal within bound 5" in result.output
    assert presentations_equivalent(
        io.load("p.json", expect="presentation"), phi0(3))
    result = _invoke(runner, "adjoint", sset, mon, "--bound", "4")
    assert result.exit_code == 0
    assert "undecided at bound 4" in result.output


def test_cli_dec_certifies_the_comparison_map(runner):
    path = _example(runner, "walking_arrow")
    result = _invoke(runner, "dec", path, "--out", "m.json")
    assert result.exit_code == 0
    assert "levels: 3 4 5 6" in result.output
    assert "valid" in result.output
    m = io.load("m.json", expect="simplicial-map")
    assert m.source.cells == (3, 4, 5, 6)


def test_cli_para_builds_a_valid_operadic_category(runner):
    path = _example(runner, "moncatZ3")
    result = _invoke(runner, "para", path, "--out", "p.json")
    assert result.exit_code == 0
    assert "levels: 1 3 9 27 81" in result.output
    P = io.load("p.json", expect="operadic-category")
    assert io.validate_structure(P).ok


def test_cli_roundtrip_certifies_both_directions(runner):
    base = _example(runner, "bouquets2")
    operad = _example(runner, "operadArrow")
    result = _invoke(runner, "roundtrip", base, operad)
    assert result.exit_code == 0
    assert "operad round trip: certified" in result.output
    assert "fibration round trip: certified" in result.output


def test_cli_examples_lists_catalog_and_rejects_unknown_names(runner):
    result = _invoke(runner, "examples")
    assert result.exit_code == 0
    assert "odot" in result.stderr and "paraZ2" in result.stderr
    result = _invoke(runner, "examples", "nonsense")
    assert result.exit_code == 2
    assert "unknown example" in result.stderr
    assert "bouquets2" in result.stderr


def test_cli_outputs_are_deterministic(runner, tmp_path):
    first = (tmp_path / _example(runner, "paraZ2")).read_bytes()
    (tmp_path / "paraZ2.json").unlink()
    assert (tmp_path / _example(runner, "paraZ2")).read_bytes() == first
    base = _example(runner, "bouquets2")
    operad = _example(runner, "operadArrow")
    for out in ("a.json", "b.json"):
        assert _invoke(runner, "groth", base, operad,
                       "--out", out).exit_code == 0
    assert (tmp_path / "a.json").read_bytes() == \
        (tmp_path / "b.json").read_bytes()


def test_cli_every_example_writes_a_loadable_valid_structure(runner):
    from opcat.cli import _EXAMPLES
    for name in sorted(_EXAMPLES):
        path = _example(runner, name)
        obj = io.load(path)
        assert io.validate_structure(obj).ok, name
