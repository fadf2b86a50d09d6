"""Deterministic JSON serialization with schema validation.

Every structure travels in a single envelope ``{"kind": ..., "version":
1, "body": ...}``.  Bodies hold integer tables (plus letter and
generator names for presentations) in ascending index order, so the
same structure always serializes to the same bytes and
``load(save(x)) == x`` holds cellwise for every supported kind.

Supported kinds: ``simplicial-set``, ``simplicial-map``,
``two-category``, ``monoidal-category``, ``operadic-category``,
``operadic-functor``, ``operad``, ``split-fibration`` and
``presentation``.  Loading validates the document against the JSON
Schemas shipped with the package (also published under ``/schemas``)
and then rebuilds the structure through its constructor, so every
shape error surfaces as :class:`~opcat.errors.StructureError`.

Saving a presentation drops its simplicial origin (the cell indexing
attached by :func:`opcat.freemon.phi_tr3`); only the letters,
generators and relations are stored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

import jsonschema

from .errors import StructureError
from .freemon import MonGenerator, MonPresentation, Term
from .grothendieck import SplitFibration, check_split_fibration
from .operadic import (OperadicFunctor, UnaryOperadic2Cat, validate_operadic,
                       validate_operadic_functor)
from .operads import CategoricalOperad, validate_operad
from .report import ValidationReport
from .simplicial import (SSetMap, TruncatedSimplicialSet, validate_simplicial,
                         validate_ssetmap)
from .twocat import (Finite2Category, FiniteCategory, StrictMonCat,
                     validate_2category, validate_moncat)

__all__ = ["KINDS", "Workspace", "dumps", "envelope", "kind_of", "load",
           "loads", "save", "validate_structure"]


def _t(x):
    """Deep-convert JSON arrays to the tuples the dataclasses store."""
    if isinstance(x, list):
        return tuple(_t(v) for v in x)
    return x


# --------------------------------------------------------------------------
# per-kind encoders (structure -> body) and decoders (body -> structure)


def _enc_sset(X: TruncatedSimplicialSet) -> dict:
    return {"max_level": X.max_level, "cells": X.cells,
            "face": X.face, "degen": X.degen}


def _dec_sset(b: dict) -> TruncatedSimplicialSet:
    return TruncatedSimplicialSet(b["max_level"], _t(b["cells"]),
                                  _t(b["face"]), _t(b["degen"]))


def _enc_ssetmap(m: SSetMap) -> dict:
    return {"source": _enc_sset(m.source), "target": _enc_sset(m.target),
            "levels": m.levels}


def _dec_ssetmap(b: dict) -> SSetMap:
    return SSetMap(_dec_sset(b["source"]), _dec_sset(b["target"]),
                   _t(b["levels"]))


def _enc_cat(C: FiniteCategory) -> dict:
    return {"n_objects": C.n_objects, "mor_src": C.mor_src,
            "mor_tgt": C.mor_tgt, "identity": C.identity, "comp": C.comp}


def _dec_cat(b: dict) -> FiniteCategory:
    return FiniteCategory(b["n_objects"], _t(b["mor_src"]), _t(b["mor_tgt"]),
                          _t(b["identity"]), _t(b["comp"]))


def _enc_2cat(K: Finite2Category) -> dict:
    return {"n_objects": K.n_objects,
            "one_src": K.one_src, "one_tgt": K.one_tgt,
            "two_src": K.two_src, "two_tgt": K.two_tgt,
            "id1": K.id1, "id2": K.id2,
            "comp1": K.comp1, "vcomp": K.vcomp, "hcomp2": K.hcomp2}


def _dec_2cat(b: dict) -> Finite2Category:
    return Finite2Category(b["n_objects"],
                           _t(b["one_src"]), _t(b["one_tgt"]),
                           _t(b["two_src"]), _t(b["two_tgt"]),
                           _t(b["id1"]), _t(b["id2"]),
                           _t(b["comp1"]), _t(b["vcomp"]), _t(b["hcomp2"]))


def _enc_moncat(M: StrictMonCat) -> dict:
    return {"category": _enc_cat(M.cat), "unit_obj": M.unit_obj,
            "tensor_obj": M.tensor_obj, "tensor_mor": M.tensor_mor}


def _dec_moncat(b: dict) -> StrictMonCat:
    return StrictMonCat(_dec_cat(b["category"]), b["unit_obj"],
                        _t(b["tensor_obj"]), _t(b["tensor_mor"]))


def _enc_operadic(O: UnaryOperadic2Cat) -> dict:
    return {"two_category": _enc_2cat(O.C),
            "phi": [O.phi0, O.phi1, O.phi2, O.phi3],
            "u": [O.u_neg1, O.u0, O.u1, O.u2]}


def _dec_operadic(b: dict) -> UnaryOperadic2Cat:
    phi = [_t(a) for a in b["phi"]]
    u = [_t(a) for a in b["u"]]
    if len(phi) != 4 or len(u) != 4:
        raise StructureError("phi and u must list four tables each")
    return UnaryOperadic2Cat(_dec_2cat(b["two_category"]), *phi, *u)


def _enc_functor(F: OperadicFunctor) -> dict:
    return {"source": _enc_operadic(F.source),
            "target": _enc_operadic(F.target), "levels": F.levels}


def _dec_functor(b: dict) -> OperadicFunctor:
    levels = _t(b["levels"])
    if len(levels) != 5:
        raise StructureError("an operadic functor has five level maps")
    return OperadicFunctor(_dec_operadic(b["source"]),
                           _dec_operadic(b["target"]), levels)


def _enc_operad(P: CategoricalOperad) -> dict:
    return {"base": _enc_operadic(P.base),
            "fibers": [_enc_cat(C) for C in P.fibers],
            "mult_obj": P.mult_obj, "mult_mor": P.mult_mor,
            "units": P.units}


def _dec_operad(b: dict) -> CategoricalOperad:
    return CategoricalOperad(_dec_operadic(b["base"]),
                             tuple(_dec_cat(c) for c in b["fibers"]),
                             _t(b["mult_obj"]), _t(b["mult_mor"]),
                             _t(b["units"]))


def _enc_fibration(F: SplitFibration) -> dict:
    lifts = sorted([a, b, g, cell] for (a, b, g), cell in F.lifts.items())
    return {"projection": _enc_functor(F.projection), "lifts": lifts}


def _dec_fibration(b: dict) -> SplitFibration:
    lifts = {}
    for a, bb, g, cell in b["lifts"]:
        key = (a, bb, g)
        if key in lifts:
            raise StructureError(f"duplicate lift entry for {key}")
        lifts[key] = cell
    return SplitFibration(_dec_functor(b["projection"]), lifts)


def _enc_term(t: Term) -> dict:
    if t.letter is not None:
        return {"letter": t.letter}
    children = [_enc_term(c) for c in t.children]
    if t.gen is not None:
        return {"gen": t.gen, "children": children}
    return {"children": children}


def _dec_term(b: dict) -> Term:
    if "letter" in b:
        return Term(letter=b["letter"])
    children = tuple(_dec_term(c) for c in b["children"])
    if "gen" in b:
        return Term(gen=b["gen"], children=children)
    return Term(children=children)


def _enc_presentation(P: MonPresentation) -> dict:
    return {"letters": P.letters,
            "gens": [{"name": g.name, "inputs": g.inputs,
                      "output": g.output} for g in P.gens],
            "relations": [[_enc_term(t) for t in rel]
                          for rel in P.relations]}


def _dec_presentation(b: dict) -> MonPresentation:
    gens = tuple(MonGenerator(g["name"], _t(g["inputs"]), _t(g["output"]))
                 for g in b["gens"])
    relations = tuple(tuple(_dec_term(t) for t in rel)
                      for rel in b["relations"])
    return MonPresentation(tuple(b["letters"]), gens, relations)


def _validate_presentation(P: MonPresentation) -> ValidationReport:
    # the constructor already checked typing; loading implies validity
    return ValidationReport("presentation")


KINDS = {
    "simplicial-set": (TruncatedSimplicialSet, _enc_sset, _dec_sset,
                       validate_simplicial),
    "simplicial-map": (SSetMap, _enc_ssetmap, _dec_ssetmap,
                       validate_ssetmap),
    "two-category": (Finite2Category, _enc_2cat, _dec_2cat,
                     validate_2category),
    "monoidal-category": (StrictMonCat, _enc_moncat, _dec_moncat,
                          validate_moncat),
    "operadic-category": (UnaryOperadic2Cat, _enc_operadic, _dec_operadic,
                          validate_operadic),
    "operadic-functor": (OperadicFunctor, _enc_functor, _dec_functor,
                         validate_operadic_functor),
    "operad": (CategoricalOperad, _enc_operad, _dec_operad,
               validate_operad),
    "split-fibration": (SplitFibration, _enc_fibration, _dec_fibration,
                        check_split_fibration),
    "presentation": (MonPresentation, _enc_presentation, _dec_presentation,
                     _validate_presentation),
}


def kind_of(obj) -> str:
    """The envelope kind a structure serializes as."""
    for kind, (cls, _enc, _dec, _val) in KINDS.items():
        if isinstance(obj, cls):
            return kind
    raise StructureError(f"no JSON form for {type(obj).__name__}")


def validate_structure(obj) -> ValidationReport:
    """Run a structure's validator (dispatched on its kind)."""
    return KINDS[kind_of(obj)][3](obj)


# --------------------------------------------------------------------------
# envelope plumbing


@lru_cache(maxsize=None)
def _schema(name: str) -> dict:
    path = resources.files("opcat") / "schemas" / f"{name}.schema.json"
    return json.loads(path.read_text())


def _check_schema(instance, name: str) -> None:
    validator = jsonschema.Draft202012Validator(_schema(name))
    error = jsonschema.exceptions.best_match(validator.iter_errors(instance))
    if error is not None:
        raise StructureError(f"{name} schema: {error.message}")


def envelope(obj) -> dict:
    kind = kind_of(obj)
    return {"kind": kind, "version": 1, "body": KINDS[kind][1](obj)}


def dumps(obj) -> str:
    """Canonical JSON text for a structure (stable key order, trailing
    newline); equal structures produce identical bytes."""
    return json.dumps(envelope(obj), indent=2, sort_keys=True) + "\n"


def save(obj, path) -> str:
    """Write a structure to ``path``; returns the text written."""
    text = dumps(obj)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text


def loads(text: str, expect: str | None = None):
    """Rebuild a structure from envelope JSON text.

    Raises :class:`~opcat.errors.StructureError` for malformed JSON,
    schema violations, a kind other than ``expect``, or bodies the
    constructors reject.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"invalid JSON: {exc}") from exc
    _check_schema(doc, "envelope")
    kind = doc["kind"]
    if expect is not None and kind != expect:
        raise StructureError(f"expected kind {expect}, found {kind}")
    _check_schema(doc["body"], kind)
    return KINDS[kind][2](doc["body"])


def load(path, expect: str | None = None):
    """Read and rebuild a structure file (see :func:`loads`)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise StructureError(f"cannot read {path}: {exc}") from exc
    return loads(text, expect)


@dataclass
class Workspace:
    """Named structures, each stored with its validation report.

    Every entry has either passed its validator or is tagged invalid
    with the report that says why.
    """

    entries: dict = field(default_factory=dict)

    def add(self, name: str, obj) -> ValidationReport:
        report = validate_structure(obj)
        self.entries[name] = (obj, report)
        return report

    def load(self, name: str, path, expect: str | None = None):
        obj = load(path, expect)
        self.add(name, obj)
        return obj

    def get(self, name: str):
        return self.entries[name][0]

    def report(self, name: str) -> ValidationReport:
        return self.entries[name][1]

    def ok(self, name: str) -> bool:
        return self.entries[name][1].ok

    def names(self) -> list:
        return sorted(self.entries)
