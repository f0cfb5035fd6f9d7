"""Versioned JSON formats: ring-definition documents, verdict records with
replayable witnesses, and the corpus manifest.

The structured format is the stable machine contract (schema_version "1",
sorted keys, compact separators, byte-identical for identical inputs); the
textual renderings elsewhere are human-oriented and unstable.  Verdict
records embed the full ring tables so a witness can be replayed with no
other inputs.
"""

from __future__ import annotations

import dataclasses
import json

from . import corpus as corpus_mod
from .deciders import (
    ELEMENT_PROPERTIES,
    Envelope,
    PropertyId,
    Verdict,
    Witness,
)
from .skewpoly import _parse_terms, _render_terms
from .rings import (
    Endomorphism,
    FiniteRing,
    RingError,
    frobenius,
    make_direct_product,
    make_galois_field,
    make_ideal,
    make_quotient,
    make_table_ring,
    make_trivial_extension,
    make_zmod,
    regular_bimodule,
    table_endomorphism,
)

SCHEMA_VERSION = "1"

BUILTIN_ENDOMORPHISMS = (
    "identity",
    "negation",
    "swap",
    "negate_second_component",
    "frobenius",
)


class FormatError(RingError):
    """A document does not conform to the schema."""


def _require_keys(doc: dict, required: set[str], optional: set[str], where: str) -> None:
    keys = set(doc)
    missing = required - keys
    if missing:
        raise FormatError(f"{where}: missing field(s) {sorted(missing)}")
    unknown = keys - required - optional
    if unknown:
        raise FormatError(f"{where}: unknown field(s) {sorted(unknown)}")


def _build_kind(doc: dict, where: str, size_cap: int):
    kind = doc.get("kind")
    if kind == "zmod":
        _require_keys(doc, {"kind", "n"}, set(), where)
        return make_zmod(int(doc["n"]), size_cap)
    if kind == "product":
        _require_keys(doc, {"kind", "factors"}, set(), where)
        factors = doc["factors"]
        if not isinstance(factors, list) or len(factors) != 2:
            raise FormatError(f"{where}: 'factors' must be a list of two ring documents")
        r1 = _build_kind(factors[0], where + ".factors[0]", size_cap)
        r2 = _build_kind(factors[1], where + ".factors[1]", size_cap)
        return make_direct_product(r1, r2, size_cap)
    if kind == "trivial_extension":
        _require_keys(doc, {"kind", "base"}, set(), where)
        base = _build_kind(doc["base"], where + ".base", size_cap)
        return make_trivial_extension(base, regular_bimodule(base), size_cap)
    if kind == "quotient":
        _require_keys(doc, {"kind", "base", "ideal"}, set(), where)
        base = _build_kind(doc["base"], where + ".base", size_cap)
        ideal = make_ideal(base, doc["ideal"])
        quot, _ = make_quotient(base, ideal)
        return quot
    if kind == "table":
        _require_keys(doc, {"kind", "add_table", "mul_table"}, {"labels"}, where)
        return make_table_ring(
            doc["add_table"], doc["mul_table"], doc.get("labels"), size_cap=size_cap
        )
    if kind == "galois_field":
        _require_keys(doc, {"kind", "p", "k"}, set(), where)
        return make_galois_field(int(doc["p"]), int(doc["k"]), size_cap)
    raise FormatError(f"{where}: unknown kind {kind!r}")


def _builtin_endomorphism(
    ring: FiniteRing, name: str, doc: dict, size_cap: int
) -> Endomorphism:
    n = ring.size
    if name == "identity":
        return table_endomorphism(ring, range(n), "identity")
    if name == "negation":
        return table_endomorphism(ring, ring.neg_table, "negation")
    if name == "frobenius":
        return frobenius(ring)
    if name == "swap":
        if doc.get("kind") != "product":
            raise FormatError("'swap' needs a product ring")
        f1, f2 = doc["factors"]
        if f1 != f2:
            raise FormatError("'swap' needs two identical factors")
        m = round(n**0.5)
        if m * m != n:
            raise FormatError("'swap' needs a square carrier")
        return table_endomorphism(
            ring, [(i % m) * m + i // m for i in range(n)], "swap"
        )
    if name == "negate_second_component":
        if doc.get("kind") == "product":
            sub = _build_kind(doc["factors"][1], "factors[1]", size_cap)
        elif doc.get("kind") == "trivial_extension":
            sub = _build_kind(doc["base"], "base", size_cap)
        else:
            raise FormatError(
                "'negate_second_component' needs a product or trivial extension"
            )
        m = sub.size
        images = [(i // m) * m + sub.neg_table[i % m] for i in range(n)]
        return table_endomorphism(ring, images, "negate_second_component")
    raise FormatError(f"unknown builtin endomorphism {name!r}")


def parse_ring_definition(
    doc: dict, size_cap: int = 256
) -> tuple[FiniteRing, Endomorphism | None]:
    """Build (ring, optional endomorphism) from a definition document."""
    if not isinstance(doc, dict):
        raise FormatError("ring definition must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise FormatError(
            f"unsupported schema_version {doc.get('schema_version')!r}, expected {SCHEMA_VERSION!r}"
        )
    body = {k: v for k, v in doc.items() if k not in ("schema_version", "endomorphism", "label")}
    ring = _build_kind(body, "ring", size_cap)
    if "label" in doc:
        ring = dataclasses.replace(ring, label=str(doc["label"]))
    endo = None
    if "endomorphism" in doc:
        spec = doc["endomorphism"]
        if not isinstance(spec, dict):
            raise FormatError("'endomorphism' must be an object")
        _require_keys(spec, set(), {"images", "builtin", "label"}, "endomorphism")
        if ("images" in spec) == ("builtin" in spec):
            raise FormatError("'endomorphism' needs exactly one of 'images'/'builtin'")
        if "images" in spec:
            endo = table_endomorphism(
                ring, spec["images"], str(spec.get("label", "endo"))
            )
        else:
            endo = _builtin_endomorphism(ring, spec["builtin"], body, size_cap)
            if "label" in spec:
                endo = dataclasses.replace(endo, label=str(spec["label"]))
    return ring, endo


def load_ring_definition(path, size_cap: int = 256):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        raise FormatError(f"cannot read ring definition: {err}") from err
    return parse_ring_definition(doc, size_cap)


# --------------------------------------------------------------------------
# verdict records

def _envelope_to_json(env: Envelope) -> dict:
    out: dict = {}
    if env.exhaustive:
        out["exhaustive"] = True
    if env.degree is not None:
        out["degree"] = env.degree
    if env.window is not None:
        out["window"] = list(env.window)
    if env.truncation is not None:
        out["truncation"] = env.truncation
    if env.min_exp is not None:
        out["min_exp"] = env.min_exp
    return out


def _envelope_from_json(doc: dict) -> Envelope:
    return Envelope(
        degree=doc.get("degree"),
        window=None if doc.get("window") is None else tuple(doc["window"]),
        truncation=doc.get("truncation"),
        min_exp=doc.get("min_exp"),
        exhaustive=bool(doc.get("exhaustive", False)),
    )


def _witness_to_json(w: Witness, ring: FiniteRing) -> dict:
    out: dict = {"kind": w.kind}
    if w.p_coeffs is not None:
        out["p"] = {"coeffs": list(w.p_coeffs), "min_exp": w.p_min}
        out["q"] = {"coeffs": list(w.q_coeffs), "min_exp": w.q_min}
        out["p_text"] = _render_terms(ring, tuple(w.p_coeffs), w.p_min)
        out["q_text"] = _render_terms(ring, tuple(w.q_coeffs), w.q_min)
    if w.order is not None:
        out["order"] = w.order
    if w.pair is not None:
        out["pair"] = list(w.pair)
    if w.monomial is not None:
        out["monomial"] = {"r": w.monomial[0], "exponent": w.monomial[1]}
    if w.offending is not None:
        out["offending"] = {
            "index": w.offending,
            "label": ring.element_labels[w.offending]
            if 0 <= w.offending < ring.size
            else None,
        }
    if w.elements is not None:
        out["elements"] = list(w.elements)
    if w.values is not None:
        out["values"] = list(w.values)
    return out


def _witness_from_json(doc: dict) -> Witness:
    try:
        mono = doc.get("monomial")
        return Witness(
            kind=doc["kind"],
            p_coeffs=tuple(doc["p"]["coeffs"]) if "p" in doc else None,
            p_min=doc.get("p", {}).get("min_exp", 0),
            q_coeffs=tuple(doc["q"]["coeffs"]) if "q" in doc else None,
            q_min=doc.get("q", {}).get("min_exp", 0),
            order=doc.get("order"),
            pair=None if doc.get("pair") is None else tuple(doc["pair"]),
            monomial=None if mono is None else (mono["r"], mono["exponent"]),
            offending=doc.get("offending", {}).get("index")
            if isinstance(doc.get("offending"), dict)
            else doc.get("offending"),
            elements=None if doc.get("elements") is None else tuple(doc["elements"]),
            values=None if doc.get("values") is None else tuple(doc["values"]),
        )
    except (KeyError, TypeError) as err:
        raise FormatError(f"malformed witness record: {err}") from err


def verdict_to_record(
    verdict: Verdict, ring: FiniteRing, endo: Endomorphism | None
) -> dict:
    """Self-contained record: embeds the full tables for independent replay."""
    rec = {
        "schema_version": SCHEMA_VERSION,
        "kind": "verdict",
        "property": verdict.prop.value,
        "envelope": _envelope_to_json(verdict.envelope),
        "outcome": "holds" if verdict.holds else "fails",
        "ring": {
            "label": ring.label,
            "size": ring.size,
            "add_table": [list(row) for row in ring.add_table],
            "mul_table": [list(row) for row in ring.mul_table],
            "element_labels": list(ring.element_labels),
        },
        "endomorphism": None
        if endo is None
        else {"label": endo.label, "images": list(endo.images)},
        "witness": None
        if verdict.witness is None
        else _witness_to_json(verdict.witness, ring),
    }
    return rec


def record_to_json(rec: dict) -> str:
    return json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n"


def parse_verdict_record(
    doc: dict,
) -> tuple[FiniteRing, Endomorphism | None, PropertyId, Envelope, Witness | None, bool]:
    """Rebuild (ring, endo, property, envelope, witness, holds) from a record."""
    if not isinstance(doc, dict) or doc.get("kind") != "verdict":
        raise FormatError("not a verdict record")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise FormatError(f"unsupported schema_version {doc.get('schema_version')!r}")
    try:
        prop = PropertyId(doc["property"])
    except (KeyError, ValueError) as err:
        raise FormatError(f"unknown property: {err}") from err
    rdoc = doc.get("ring")
    if not isinstance(rdoc, dict):
        raise FormatError("verdict record lacks the ring tables")
    ring = make_table_ring(
        rdoc["add_table"],
        rdoc["mul_table"],
        rdoc.get("element_labels"),
        label=str(rdoc.get("label", "ring")),
    )
    endo = None
    edoc = doc.get("endomorphism")
    if edoc is not None:
        endo = table_endomorphism(ring, edoc["images"], str(edoc.get("label", "endo")))
    env = _envelope_from_json(doc.get("envelope", {}))
    holds = doc.get("outcome") == "holds"
    witness = None
    if doc.get("witness") is not None:
        witness = _witness_from_json(doc["witness"])
        _check_witness_ranges(witness, ring.size)
    if not holds and witness is None:
        raise FormatError("failing verdict without a witness")
    return ring, endo, prop, env, witness, holds


def _check_witness_ranges(w: Witness, size: int) -> None:
    indices = list(w.p_coeffs or ()) + list(w.q_coeffs or ())
    indices += list(w.elements or ()) + list(w.values or ())
    if w.monomial is not None:
        indices.append(w.monomial[0])
    if w.offending is not None:
        indices.append(w.offending)
    for idx in indices:
        if not isinstance(idx, int) or not 0 <= idx < size:
            raise FormatError(f"witness references element index {idx} outside 0..{size - 1}")


def witness_text_consistent(ring: FiniteRing, wdoc: dict) -> bool:
    """Whether the textual renderings in a witness record parse back to the
    recorded coefficient indices (the text format is accepted for replay)."""
    for key in ("p", "q"):
        text = wdoc.get(f"{key}_text")
        if text is None:
            continue
        sub = wdoc.get(key) or {}
        coeffs = sub.get("coeffs", ())
        mn = sub.get("min_exp", 0)
        expected = {
            mn + i: c for i, c in enumerate(coeffs) if c != ring.zero
        }
        try:
            if _parse_terms(ring, text) != expected:
                return False
        except RingError:
            return False
    return True


# --------------------------------------------------------------------------
# corpus manifest

def _expectation_to_json(exp: corpus_mod.Expectation, ring: FiniteRing) -> dict:
    return {
        "property": exp.prop.value,
        "envelope": _envelope_to_json(exp.envelope),
        "outcome": "holds" if exp.holds else "fails",
        "provenance": exp.provenance,
        "confirm_witness": None
        if exp.confirm_witness is None
        else _witness_to_json(exp.confirm_witness, ring),
    }


def corpus_manifest() -> dict:
    """The built-in corpus as one serializable document."""
    entries = []
    for entry in corpus_mod.all_entries():
        definition = dict(entry.definition)
        definition["schema_version"] = SCHEMA_VERSION
        entries.append(
            {
                "name": entry.name,
                "description": entry.description,
                "exploratory": entry.exploratory,
                "definition": definition,
                "expectations": [
                    _expectation_to_json(exp, entry.ring) for exp in entry.expected
                ],
            }
        )
    return {"schema_version": SCHEMA_VERSION, "kind": "corpus", "entries": entries}


def parse_manifest_entry(doc: dict) -> corpus_mod.CorpusEntry:
    _require_keys(
        doc,
        {"name", "definition", "expectations"},
        {"description", "exploratory"},
        "corpus entry",
    )
    ring, endo = parse_ring_definition(doc["definition"])
    if endo is None:
        raise FormatError(f"corpus entry {doc['name']!r} lacks an endomorphism")
    expected = []
    for edoc in doc["expectations"]:
        _require_keys(
            edoc,
            {"property", "envelope", "outcome", "provenance"},
            {"confirm_witness"},
            "expectation",
        )
        expected.append(
            corpus_mod.Expectation(
                prop=PropertyId(edoc["property"]),
                envelope=_envelope_from_json(edoc["envelope"]),
                holds=edoc["outcome"] == "holds",
                provenance=edoc["provenance"],
                confirm_witness=None
                if edoc.get("confirm_witness") is None
                else _witness_from_json(edoc["confirm_witness"]),
            )
        )
    return corpus_mod.CorpusEntry(
        name=str(doc["name"]),
        description=str(doc.get("description", "")),
        ring=ring,
        endo=endo,
        definition=doc["definition"],
        expected=tuple(expected),
        exploratory=bool(doc.get("exploratory", False)),
    )


def load_manifest(path) -> list[corpus_mod.CorpusEntry]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        raise FormatError(f"cannot read corpus manifest: {err}") from err
    if doc.get("kind") != "corpus" or doc.get("schema_version") != SCHEMA_VERSION:
        raise FormatError("not a corpus manifest")
    return [parse_manifest_entry(e) for e in doc["entries"]]
