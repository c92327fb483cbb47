"""Reading knowledge-base JSON files.

Top-level keys: ``signature``, ``domain``, ``constant_map``, ``relations``,
``primary_sentences`` and optionally ``candidate_pool`` and ``comment``.
Every relation must list ``known_in``, ``known_out`` and ``unknown`` so that
together they partition D^n exactly.
"""

from __future__ import annotations

import json

from .formula import Signature, SignatureError, free_vars
from .parser import parse_formula
from .structures import (
    STATUSES, KnowledgeBase, PartialRelation, PartialStructure, PoolEntry,
    StructureError,
)

MALFORMED = "malformed"
INVARIANT = "invariant-violation"
NONSENSE = "formal-nonsense"


class KBError(ValueError):
    """A knowledge-base file was rejected.

    ``kind`` is one of ``malformed``, ``invariant-violation`` or
    ``formal-nonsense``; ``location`` is a JSON path such as
    ``primary_sentences[1]``.
    """

    def __init__(self, kind, message, location=None, predicate=None, tuple=None, position=None):
        where = f"{location}: " if location else ""
        super().__init__(f"{kind}: {where}{message}")
        self.kind = kind
        self.location = location
        self.predicate = predicate
        self.tuple = tuple
        self.position = position


def _need(obj, key, typ, where):
    if key not in obj:
        raise KBError(MALFORMED, f"missing key {key!r}", where)
    value = obj[key]
    if not isinstance(value, typ) or (typ is int and isinstance(value, bool)):
        raise KBError(MALFORMED, f"{key!r} must be {typ.__name__}", where)
    return value


def _tuples(raw, where):
    if not isinstance(raw, list):
        raise KBError(MALFORMED, "must be a list of tuples", where)
    out = []
    for i, t in enumerate(raw):
        if not isinstance(t, list) or not all(isinstance(e, str) for e in t):
            raise KBError(MALFORMED, "each tuple must be a list of element names", f"{where}[{i}]")
        out.append(tuple(t))
    if len(set(out)) != len(out):
        dup = next(t for t in out if out.count(t) > 1)
        raise KBError(MALFORMED, f"tuple {list(dup)} listed twice", where)
    return frozenset(out)


def _sentence(text, sig, where):
    if not isinstance(text, str):
        raise KBError(MALFORMED, "sentence must be a string", where)
    outcome = parse_formula(text, sig)
    if not outcome.ok:
        raise KBError(NONSENSE, f"{text!r} is not a formula: {outcome.reason} "
                                f"(at character {outcome.position})",
                      where, position=outcome.position)
    free = free_vars(outcome.formula)
    if free:
        raise KBError(INVARIANT, f"{text!r} is not a sentence: free variables {sorted(free)}", where)
    return outcome.formula


def parse_kb(text: str) -> KnowledgeBase:
    """Parse and fully validate a knowledge-base document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise KBError(MALFORMED, f"invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})") from None
    if not isinstance(doc, dict):
        raise KBError(MALFORMED, "top level must be an object")
    allowed = {"signature", "domain", "constant_map", "relations",
               "primary_sentences", "candidate_pool", "comment"}
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise KBError(MALFORMED, f"unknown top-level keys {unknown}")

    raw_sig = _need(doc, "signature", dict, None)
    preds = _need(raw_sig, "predicates", dict, "signature")
    consts = raw_sig.get("constants", [])
    equality = raw_sig.get("equality", False)
    if not isinstance(consts, list) or not isinstance(equality, bool):
        raise KBError(MALFORMED, "constants must be a list and equality a boolean", "signature")
    try:
        sig = Signature(preds, tuple(consts), equality)
    except SignatureError as e:
        raise KBError(INVARIANT, str(e), "signature") from None

    domain = _need(doc, "domain", list, None)
    if not all(isinstance(e, str) for e in domain):
        raise KBError(MALFORMED, "domain elements must be strings", "domain")
    cmap = doc.get("constant_map", {})
    if not isinstance(cmap, dict) or not all(isinstance(v, str) for v in cmap.values()):
        raise KBError(MALFORMED, "constant_map must map names to element names", "constant_map")

    raw_rels = _need(doc, "relations", dict, None)
    rels = {}
    for name in sig.predicates:
        where = f"relations.{name}"
        if name not in raw_rels:
            raise KBError(INVARIANT, f"no relation given for predicate {name!r}", where, predicate=name)
        raw = raw_rels[name]
        if not isinstance(raw, dict):
            raise KBError(MALFORMED, "relation must be an object", where)
        extra = sorted(set(raw) - {"known_in", "known_out", "unknown"})
        if extra:
            raise KBError(MALFORMED, f"unknown keys {extra}", where)
        parts = [_tuples(raw.get(key, []), f"{where}.{key}")
                 for key in ("known_in", "known_out", "unknown")]
        rels[name] = PartialRelation(sig.predicates[name], *parts)
    stray = sorted(set(raw_rels) - set(sig.predicates))
    if stray:
        raise KBError(INVARIANT, f"relations for undeclared predicates {stray}", "relations")

    structure = PartialStructure(tuple(domain), rels, cmap)
    try:
        structure.validate(sig)
    except StructureError as e:
        where = f"relations.{e.predicate}" if e.predicate else None
        raise KBError(INVARIANT, str(e), where, predicate=e.predicate, tuple=e.tuple) from None

    raw_p = _need(doc, "primary_sentences", list, None)
    primary = tuple(_sentence(t, sig, f"primary_sentences[{i}]") for i, t in enumerate(raw_p))

    raw_pool = doc.get("candidate_pool", [])
    if not isinstance(raw_pool, list):
        raise KBError(MALFORMED, "candidate_pool must be a list", "candidate_pool")
    pool = []
    for i, entry in enumerate(raw_pool):
        where = f"candidate_pool[{i}]"
        if not isinstance(entry, dict):
            raise KBError(MALFORMED, "pool entry must be an object", where)
        extra = sorted(set(entry) - {"sentence", "relevant", "status", "comment"})
        if extra:
            raise KBError(MALFORMED, f"unknown keys {extra}", where)
        text = _need(entry, "sentence", str, where)
        relevant = _need(entry, "relevant", bool, where)
        status = _need(entry, "status", str, where)
        if status not in STATUSES:
            raise KBError(MALFORMED, f"status must be one of {list(STATUSES)}", where)
        pool.append(PoolEntry(_sentence(text, sig, f"{where}.sentence"), text, relevant, status))

    return KnowledgeBase(sig, structure, primary, tuple(pool), tuple(raw_p))


def load_kb(path) -> KnowledgeBase:
    with open(path, encoding="utf-8") as fh:
        return parse_kb(fh.read())


def dump_kb(kb: KnowledgeBase) -> str:
    """Serialise ``kb`` back to the file format (canonical key order)."""
    from .parser import print_formula

    index = {e: i for i, e in enumerate(kb.structure.domain)}

    def ordered(ts):
        return [list(t) for t in sorted(ts, key=lambda t: [index[e] for e in t])]

    doc = {
        "signature": {"predicates": dict(kb.signature.predicates),
                      "constants": list(kb.signature.constants),
                      "equality": kb.signature.equality},
        "domain": list(kb.structure.domain),
        "constant_map": dict(kb.structure.constant_map),
        "relations": {name: {"known_in": ordered(r.known_in),
                             "known_out": ordered(r.known_out),
                             "unknown": ordered(r.undetermined)}
                      for name, r in kb.structure.relations.items()},
        "primary_sentences": [print_formula(f) for f in kb.primary_sentences],
        "candidate_pool": [{"sentence": print_formula(e.sentence), "relevant": e.relevant,
                            "status": e.status} for e in kb.candidate_pool],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False)
