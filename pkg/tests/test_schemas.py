import json
import shutil

import pytest

from prerigid import schemas
from prerigid.errors import SchemaError

ROOT = schemas.fixture_root()


def test_every_bundled_fixture_validates():
    docs = schemas.scan()
    assert len(docs) >= 15
    assert all(doc["schema_version"] == schemas.SCHEMA_VERSION for _, doc in docs)
    assert all(doc["kind"] in schemas.SCHEMAS for _, doc in docs)


def test_negative_fixtures_validate_structurally():
    docs = schemas.scan(ROOT / "negative")
    assert {d["kind"] for _, d in docs} >= {"pomonoid", "braiding", "bialgebra", "proto_inverses"}


def test_missing_field_points_at_document_root(tmp_path):
    doc = json.loads((ROOT / "z2.json").read_text())
    del doc["leq"]
    f = tmp_path / "broken.json"
    f.write_text(json.dumps(doc))
    with pytest.raises(SchemaError) as err:
        schemas.load_pomonoid(f)
    assert err.value.location.endswith("broken.json#/")
    assert "'leq' is a required property" in err.value.message


def test_wrong_type_has_json_pointer(tmp_path):
    doc = json.loads((ROOT / "z2.json").read_text())
    doc["mult"][1][0] = "x"
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(doc))
    with pytest.raises(SchemaError) as err:
        schemas.load_pomonoid(f)
    assert err.value.location.endswith("#/mult/1/0")


def test_unit_out_of_range(tmp_path):
    doc = json.loads((ROOT / "z2.json").read_text())
    doc["unit"] = 5
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(doc))
    with pytest.raises(SchemaError) as err:
        schemas.load_pomonoid(f)
    assert err.value.location.endswith("#/unit")


def test_syntax_error_reports_line_and_column(tmp_path):
    f = tmp_path / "syntax.json"
    f.write_text('{\n  "schema_version": "1",\n  "kind": \n}')
    with pytest.raises(SchemaError) as err:
        schemas.load_document(f)
    assert err.value.location.endswith("syntax.json:4:1")


def test_wrong_version_rejected(tmp_path):
    doc = json.loads((ROOT / "z2.json").read_text())
    doc["schema_version"] = "2"
    f = tmp_path / "v2.json"
    f.write_text(json.dumps(doc))
    with pytest.raises(SchemaError) as err:
        schemas.load_document(f)
    assert err.value.location.endswith("#/schema_version")


def test_kind_mismatch(tmp_path):
    with pytest.raises(SchemaError) as err:
        schemas.load_lexicon("z2.json")
    assert err.value.location.endswith("#/kind")


def test_unreadable_file():
    with pytest.raises(SchemaError):
        schemas.load_document("does_not_exist.json")


def test_lexicon_unknown_atom(tmp_path):
    doc = json.loads((ROOT / "lexicon_english.json").read_text())
    doc["words"]["John"] = [["q", 0]]
    f = tmp_path / "lex.json"
    f.write_text(json.dumps(doc))
    with pytest.raises(SchemaError) as err:
        schemas.load_lexicon(f)
    assert err.value.location.endswith("#/words/John/0/0")


def test_diagram_shape_checked(tmp_path):
    doc = json.loads((ROOT / "diagram_arrow.json").read_text())
    doc["functor"]["maps"]["f"] = [[1]]
    f = tmp_path / "arrow.json"
    f.write_text(json.dumps(doc))
    with pytest.raises(SchemaError):
        schemas.load_diagram(f)


def test_env_var_overrides_root(tmp_path, monkeypatch):
    shutil.copy(ROOT / "z3.json", tmp_path / "z3.json")
    monkeypatch.setenv("PRERIGID_FIXTURES", str(tmp_path))
    assert schemas.fixture_root() == tmp_path
    assert [p.name for p, _ in schemas.scan()] == ["z3.json"]
    assert schemas.load_pomonoid("z3.json").size == 3


def test_missing_root_is_schema_error(tmp_path):
    with pytest.raises(SchemaError):
        schemas.scan(tmp_path / "nowhere")


def test_typed_loaders():
    assert schemas.load_lexicon("lexicon_english.json").sentence == ("s", 0)
    lex = schemas.load_finite_lexicon("finite_chain.json")
    assert lex.pomonoid.size == 4 and len(lex.examples) == 4
    fams = schemas.load_families("families.json")
    assert len(fams) == 4
    p, rs, ls = schemas.load_proto_inverses("negative/proto_inverses_corrupt.json")
    assert len(rs) == len(ls) == p.size


def test_fixtures_prefix_reaches_subdirectories(monkeypatch):
    monkeypatch.delenv("PRERIGID_FIXTURES", raising=False)
    p = schemas.resolve("fixtures/negative/braiding_corrupt.json")
    assert p.exists() and p.parent.name == "negative"
