"""JSON fixture schemas and loaders.

Every fixture carries ``schema_version`` ("1") and a ``kind``. Structural
problems are reported as :class:`SchemaError` with a ``file#/json/pointer``
location; shape checks that JSON Schema cannot express (square tables,
matrix sizes) are done by the loaders with the same kind of location.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema

from .errors import SchemaError, ValidationError
from .linalg import Matrix

SCHEMA_VERSION = "1"

_name = {"type": "string", "minLength": 1}
_index = {"type": "integer", "minimum": 0}
_rational = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}]}
_matrix = {"type": "array", "items": {"type": "array", "items": _rational}}
_vector = {"type": "array", "items": _rational}
_term = {"type": "array", "prefixItems": [_name, {"type": "integer"}], "minItems": 2, "maxItems": 2}


def _doc(kind: str, props: dict, required: list[str]) -> dict:
    return {
        "type": "object",
        "properties": {"schema_version": {"const": SCHEMA_VERSION}, "kind": {"const": kind},
                       "description": {"type": "string"}, **props},
        "required": ["schema_version", "kind", *required],
        "additionalProperties": False,
    }


_examples = {"type": "array", "items": {
    "type": "object",
    "properties": {"words": {"type": "array", "items": _name}, "accepted": {"type": "boolean"}},
    "required": ["words", "accepted"], "additionalProperties": False}}

SCHEMAS: dict[str, dict] = {
    "pomonoid": _doc("pomonoid", {
        "elements": {"type": "array", "items": _name, "minItems": 1, "uniqueItems": True},
        "leq": {"type": "array", "items": {"type": "array", "items": {"type": "boolean"}}},
        "mult": {"type": "array", "items": {"type": "array", "items": _index}},
        "unit": _index,
    }, ["elements", "leq", "mult", "unit"]),
    "lexicon": _doc("lexicon", {
        "atoms": {"type": "array", "items": _name, "uniqueItems": True},
        "words": {"type": "object", "additionalProperties": {"type": "array", "items": _term}},
        "sentence": _term,
        "window": {"type": "array", "prefixItems": [{"type": "integer"}, {"type": "integer"}],
                   "minItems": 2, "maxItems": 2},
        "examples": _examples,
    }, ["atoms", "words", "sentence"]),
    "finite_lexicon": _doc("finite_lexicon", {
        "pomonoid": _name,
        "words": {"type": "object", "additionalProperties": _name},
        "sentence": _name,
        "examples": _examples,
    }, ["pomonoid", "words", "sentence"]),
    "diagram": _doc("diagram", {
        "name": _name,
        "objects": {"type": "array", "items": _name, "minItems": 1, "uniqueItems": True},
        "homs": {"type": "array", "items": {
            "type": "object",
            "properties": {"name": _name, "source": _name, "target": _name},
            "required": ["name", "source", "target"], "additionalProperties": False}},
        "composites": {"type": "array", "items": {"type": "array", "items": _name,
                                                   "minItems": 3, "maxItems": 3}},
        "functor": {"type": "object", "properties": {
            "dims": {"type": "object", "additionalProperties": _index},
            "maps": {"type": "object", "additionalProperties": _matrix}},
            "required": ["dims", "maps"], "additionalProperties": False},
    }, ["objects", "homs", "functor"]),
    "graded": _doc("graded", {
        "monoid": {"type": "string", "pattern": r"^(N|Z[1-9][0-9]*)$"},
        "objects": {"type": "array", "items": {
            "type": "object",
            "properties": {"support": {"type": "array", "items": {
                "type": "array", "prefixItems": [_index, _index], "minItems": 2, "maxItems": 2}}},
            "required": ["support"], "additionalProperties": False}},
    }, ["monoid", "objects"]),
    "bialgebra": _doc("bialgebra", {
        "dim": _index, "m": _matrix, "u": _vector, "delta": _matrix, "epsilon": _vector,
    }, ["dim", "m", "u", "delta", "epsilon"]),
    "families": _doc("families", {
        "base": {"const": "FinVect"},
        "families": {"type": "array", "items": {
            "type": "object",
            "properties": {"index": {"type": "array", "items": _name, "uniqueItems": True},
                           "fibers": {"type": "object", "additionalProperties": _index}},
            "required": ["index", "fibers"], "additionalProperties": False}},
    }, ["base", "families"]),
    "proto_inverses": _doc("proto_inverses", {
        "pomonoid": _name,
        "right_star": {"type": "array", "items": _name},
        "left_star": {"type": "array", "items": _name},
    }, ["pomonoid", "right_star", "left_star"]),
    "braiding": _doc("braiding", {
        "rule": {"enum": ["twist", "identity", "scaled"]},
    }, ["rule"]),
}

_ENVELOPE = {
    "type": "object",
    "properties": {"schema_version": {"const": SCHEMA_VERSION}, "kind": {"enum": sorted(SCHEMAS)}},
    "required": ["schema_version", "kind"],
}


def fixture_root() -> Path:
    """Directory holding the fixtures; ``PRERIGID_FIXTURES`` overrides the bundled set."""
    env = os.environ.get("PRERIGID_FIXTURES")
    if env:
        return Path(env)
    return Path(str(resources.files("prerigid") / "fixtures"))


def _pointer(path) -> str:
    return "/" + "/".join(str(p) for p in path)


def _fail(where: str, path, message: str):
    raise SchemaError(f"{where}#{_pointer(path)}", message)


def validate_document(doc: Any, where: str = "<document>", kind: str | None = None) -> dict:
    for schema in (_ENVELOPE, None):
        schema = schema or SCHEMAS[doc["kind"]]
        errors = sorted(jsonschema.Draft202012Validator(schema).iter_errors(doc),
                        key=lambda e: (list(e.absolute_path), e.message))
        if errors:
            err = jsonschema.exceptions.best_match(errors)
            _fail(where, err.absolute_path, err.message)
    if kind is not None and doc["kind"] != kind:
        _fail(where, ["kind"], f"expected a {kind!r} fixture, got {doc['kind']!r}")
    return doc


def resolve(path: str | Path) -> Path:
    p = Path(path)
    if p.exists() or p.is_absolute():
        return p
    root = fixture_root()
    candidates = [root / p]
    if p.parts[0] == "fixtures" and len(p.parts) > 1:
        # "fixtures/negative/x.json" names a file under the root itself
        candidates.append(root.joinpath(*p.parts[1:]))
    candidates.append(root / p.name)
    for candidate in candidates:
        if candidate.exists():
            return candidate
    return p


def load_document(path: str | Path, kind: str | None = None) -> dict:
    p = resolve(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise SchemaError(str(p), f"cannot read fixture: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{p}:{exc.lineno}:{exc.colno}", f"invalid JSON: {exc.msg}") from None
    return validate_document(doc, str(p), kind)


def _matrix_of(rows, nrows: int, ncols: int, where: str, path) -> Matrix:
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        _fail(where, path, f"expected a {nrows}x{ncols} matrix")
    return Matrix.from_rows(rows, ncols)


# typed loaders


def pomonoid_from_doc(doc: dict, where: str = "<document>"):
    from .grammar import Pomonoid

    n = len(doc["elements"])
    for key in ("leq", "mult"):
        table = doc[key]
        if len(table) != n or any(len(r) != n for r in table):
            _fail(where, [key], f"expected an {n}x{n} table")
    for i, row in enumerate(doc["mult"]):
        for j, x in enumerate(row):
            if x >= n:
                _fail(where, ["mult", i, j], f"index {x} out of range")
    if doc["unit"] >= n:
        _fail(where, ["unit"], f"index {doc['unit']} out of range")
    return Pomonoid.build(doc["elements"], doc["leq"], doc["mult"], doc["unit"])


def load_pomonoid(path):
    doc = load_document(path, "pomonoid")
    return pomonoid_from_doc(doc, str(resolve(path)))


@dataclass(frozen=True)
class Lexicon:
    atoms: tuple
    words: dict
    sentence: tuple
    window: tuple
    examples: tuple

    def types(self, sentence) -> list:
        missing = [w for w in sentence if w not in self.words]
        if missing:
            raise ValidationError(f"words not in the lexicon: {missing}")
        return [self.words[w] for w in sentence]


def lexicon_from_doc(doc: dict, where: str = "<document>") -> Lexicon:
    atoms = set(doc["atoms"])
    for w, ty in doc["words"].items():
        for k, (a, _) in enumerate(ty):
            if a not in atoms:
                _fail(where, ["words", w, k, 0], f"unknown atom {a!r}")
    if doc["sentence"][0] not in atoms:
        _fail(where, ["sentence", 0], f"unknown atom {doc['sentence'][0]!r}")
    words = {w: tuple((a, e) for a, e in ty) for w, ty in doc["words"].items()}
    examples = tuple((tuple(x["words"]), x["accepted"]) for x in doc.get("examples", []))
    for k, (ws, _) in enumerate(examples):
        for w in ws:
            if w not in words:
                _fail(where, ["examples", k, "words"], f"unknown word {w!r}")
    return Lexicon(tuple(doc["atoms"]), words, tuple(doc["sentence"]),
                   tuple(doc.get("window", (-2, 2))), examples)


def load_lexicon(path) -> Lexicon:
    return lexicon_from_doc(load_document(path, "lexicon"), str(resolve(path)))


@dataclass(frozen=True)
class FiniteLexicon:
    pomonoid: Any
    words: dict  # word -> element index
    sentence: int
    examples: tuple


def load_finite_lexicon(path) -> FiniteLexicon:
    where = str(resolve(path))
    doc = load_document(path, "finite_lexicon")
    base = resolve(path).parent / doc["pomonoid"]
    p = load_pomonoid(base if base.exists() else doc["pomonoid"])
    idx = {name: i for i, name in enumerate(p.elements)}
    for w, e in doc["words"].items():
        if e not in idx:
            _fail(where, ["words", w], f"unknown element {e!r}")
    if doc["sentence"] not in idx:
        _fail(where, ["sentence"], f"unknown element {doc['sentence']!r}")
    examples = tuple((tuple(x["words"]), x["accepted"]) for x in doc.get("examples", []))
    for k, (ws, _) in enumerate(examples):
        for w in ws:
            if w not in doc["words"]:
                _fail(where, ["examples", k, "words"], f"unknown word {w!r}")
    return FiniteLexicon(p, {w: idx[e] for w, e in doc["words"].items()}, idx[doc["sentence"]], examples)


def diagram_from_doc(doc: dict, where: str = "<document>"):
    """(index category, functor) from a diagram fixture."""
    from .constructions.functorcat import IndexCategory, diagram

    objects = tuple(doc["objects"])
    arrows = tuple((h["name"], h["source"], h["target"]) for h in doc["homs"])
    for k, (_, s, t) in enumerate(arrows):
        for end, key in ((s, "source"), (t, "target")):
            if end not in objects:
                _fail(where, ["homs", k, key], f"unknown object {end!r}")
    table = tuple(((g, f), h) for g, f, h in doc.get("composites", []))
    name = doc.get("name", "diagram")
    index = IndexCategory(name, objects, arrows, table)
    try:
        index.validate()
    except ValidationError as exc:
        _fail(where, ["composites"], str(exc))
    F = doc["functor"]
    dims = F["dims"]
    for x in objects:
        if x not in dims:
            _fail(where, ["functor", "dims"], f"no dimension for object {x!r}")
    maps = {}
    for a, s, t in arrows:
        if a not in F["maps"]:
            _fail(where, ["functor", "maps"], f"no matrix for arrow {a!r}")
        maps[a] = _matrix_of(F["maps"][a], dims[t], dims[s], where, ["functor", "maps", a])
    try:
        functor = diagram(index, dims, maps)
    except ValidationError as exc:
        _fail(where, ["functor"], str(exc))
    return index, functor


def load_diagram(path):
    return diagram_from_doc(load_document(path, "diagram"), str(resolve(path)))


def graded_from_doc(doc: dict, where: str = "<document>"):
    """(graded category, objects) from a graded fixture."""
    from .instances import NATURALS, cyclic_group, graded_category, GradedObject, FINVECT

    tag = doc["monoid"]
    monoid = NATURALS if tag == "N" else cyclic_group(int(tag[1:]))
    objects = []
    for k, obj in enumerate(doc["objects"]):
        for j, (g, _) in enumerate(obj["support"]):
            if tag != "N" and g >= int(tag[1:]):
                _fail(where, ["objects", k, "support", j, 0], f"degree {g} is not in {tag}")
        try:
            objects.append(GradedObject.from_support([tuple(x) for x in obj["support"]]))
        except ValidationError as exc:
            _fail(where, ["objects", k, "support"], str(exc))
    return graded_category(FINVECT, monoid), objects


def load_graded(path):
    return graded_from_doc(load_document(path, "graded"), str(resolve(path)))


def bialgebra_from_doc(doc: dict, where: str = "<document>"):
    from .lifting.examples import bialgebra_from_json

    n = doc["dim"]
    _matrix_of(doc["m"], n, n * n, where, ["m"])
    _matrix_of(doc["delta"], n * n, n, where, ["delta"])
    for key in ("u", "epsilon"):
        if len(doc[key]) != n:
            _fail(where, [key], f"expected a vector of length {n}")
    return bialgebra_from_json(doc)


def load_bialgebra(path):
    return bialgebra_from_doc(load_document(path, "bialgebra"), str(resolve(path)))


def families_from_doc(doc: dict, where: str = "<document>") -> list:
    from .constructions import FamObject

    out = []
    for k, fam in enumerate(doc["families"]):
        if set(fam["fibers"]) != set(fam["index"]):
            _fail(where, ["families", k, "fibers"], "fibers must be given for exactly the index labels")
        out.append(FamObject.of({lab: fam["fibers"][lab] for lab in fam["index"]}))
    return out


def load_families(path) -> list:
    return families_from_doc(load_document(path, "families"), str(resolve(path)))


def load_proto_inverses(path):
    """(pomonoid, right_star, left_star) with the tables as element indices."""
    where = str(resolve(path))
    doc = load_document(path, "proto_inverses")
    base = resolve(path).parent / doc["pomonoid"]
    if not base.exists():
        base = resolve(base.name)
    p = load_pomonoid(base)
    idx = {name: i for i, name in enumerate(p.elements)}
    tables = []
    for key in ("right_star", "left_star"):
        if len(doc[key]) != p.size:
            _fail(where, [key], f"expected {p.size} entries")
        for j, e in enumerate(doc[key]):
            if e not in idx:
                _fail(where, [key, j], f"unknown element {e!r}")
        tables.append(tuple(idx[e] for e in doc[key]))
    return p, tables[0], tables[1]


def scan(root: Path | None = None) -> list[tuple[Path, dict]]:
    """Validate every fixture under ``root`` (non-recursive), sorted by name."""
    root = root or fixture_root()
    if not root.is_dir():
        raise SchemaError(str(root), "fixture directory not found")
    return [(p, load_document(p)) for p in sorted(root.glob("*.json"))]


def load_braiding(path):
    """A candidate braiding on FinVect, as a function (X, Y) -> morphism."""
    from .instances import FINVECT

    rule = load_document(path, "braiding")["rule"]
    if rule == "twist":
        return FINVECT.braid
    if rule == "identity":
        return lambda X, Y: FINVECT.morphism(X * Y, Y * X, Matrix.identity(X * Y))
    return lambda X, Y: FINVECT.scale(2, FINVECT.braid(X, Y))
