"""Partial relations, partial/total structures and knowledge bases.

A total structure is not a separate class: it is any :class:`PartialStructure`
for which :func:`is_total` holds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .formula import Signature

STATUSES = ("true", "quasi-true", "assumed-true", "untrusted")
TRUSTED_STATUSES = frozenset(STATUSES[:3])


class StructureError(ValueError):
    """An invariant of a relation, structure or knowledge base is violated.

    ``predicate`` and ``tuple`` name the offending cell when there is one.
    """

    def __init__(self, message, predicate=None, tuple=None):
        super().__init__(message)
        self.predicate = predicate
        self.tuple = tuple


def all_tuples(domain: Sequence[str], arity: int):
    """D^n in lexicographic domain order."""
    return itertools.product(domain, repeat=arity)


def _cell_name(name, t):
    return f"{name}({', '.join(map(str, t))})"


@dataclass(frozen=True)
class PartialRelation:
    arity: int
    known_in: frozenset
    known_out: frozenset
    undetermined: frozenset = frozenset()

    @property
    def is_total(self):
        return not self.undetermined

    def validate(self, domain, name="<relation>"):
        """Check disjointness and exhaustiveness over ``domain``."""
        self._check_parts(domain, name)
        covered = len(self.known_in) + len(self.known_out) + len(self.undetermined)
        if covered != len(domain) ** self.arity:
            for t in all_tuples(domain, self.arity):
                if t not in self.known_in and t not in self.known_out \
                        and t not in self.undetermined:
                    raise StructureError(
                        f"{_cell_name(name, t)} is in none of known_in, known_out, unknown",
                        name, t)
        return self

    def _check_parts(self, domain, name):
        index = {e: i for i, e in enumerate(domain)}
        parts = (("known_in", self.known_in), ("known_out", self.known_out),
                 ("unknown", self.undetermined))
        for label, part in parts:
            for t in sorted(part, key=lambda t: _key(t, index)):
                if len(t) != self.arity:
                    raise StructureError(
                        f"{_cell_name(name, t)} in {label} has length {len(t)}, "
                        f"expected {self.arity}", name, t)
                for e in t:
                    if e not in index:
                        raise StructureError(
                            f"{_cell_name(name, t)} in {label} uses {e!r}, "
                            f"which is not in the domain", name, t)
        for (la, a), (lb, b) in itertools.combinations(parts, 2):
            common = a & b
            if common:
                t = min(common, key=lambda t: _key(t, index))
                raise StructureError(
                    f"{_cell_name(name, t)} is in both {la} and {lb}", name, t)


def _key(t, index):
    return [index.get(e, len(index)) for e in t], len(t)


def make_partial_relation(arity, known_in, known_out, domain, fill="default-out", name="<relation>"):
    """Build and validate a partial relation.

    ``fill`` decides where tuples listed in neither ``known_in`` nor
    ``known_out`` go: ``"default-out"``, ``"default-unknown"``, or an explicit
    iterable of undetermined tuples, in which case the three lists must
    already partition D^arity.
    """
    if not isinstance(arity, int) or arity < 0:
        raise StructureError(f"{name}: bad arity {arity!r}", name)
    k_in = frozenset(tuple(t) for t in known_in)
    k_out = frozenset(tuple(t) for t in known_out)
    if isinstance(fill, str):
        if fill not in ("default-out", "default-unknown"):
            raise ValueError(f"unknown fill mode {fill!r}")
        PartialRelation(arity, k_in, k_out)._check_parts(domain, name)
        rest = frozenset(t for t in all_tuples(domain, arity)
                         if t not in k_in and t not in k_out)
        if fill == "default-out":
            rel = PartialRelation(arity, k_in, k_out | rest)
        else:
            rel = PartialRelation(arity, k_in, k_out, rest)
    else:
        rel = PartialRelation(arity, k_in, k_out, frozenset(tuple(t) for t in fill))
    return rel.validate(domain, name)


@dataclass(frozen=True)
class PartialStructure:
    domain: tuple
    relations: Mapping[str, PartialRelation]
    constant_map: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "relations", dict(self.relations))
        object.__setattr__(self, "constant_map", dict(self.constant_map))

    def validate(self, sig: Signature | None = None):
        if not self.domain:
            raise StructureError("domain must be nonempty")
        if len(set(self.domain)) != len(self.domain):
            raise StructureError("domain elements must be distinct")
        for name, rel in self.relations.items():
            rel.validate(self.domain, name)
        elems = set(self.domain)
        for c, e in self.constant_map.items():
            if e not in elems:
                raise StructureError(f"constant {c!r} denotes {e!r}, which is not in the domain")
        if sig is not None:
            if list(self.relations) != list(sig.predicates):
                missing = [p for p in sig.predicates if p not in self.relations]
                extra = [p for p in self.relations if p not in sig.predicates]
                if missing or extra:
                    raise StructureError(
                        f"relations do not match the signature (missing {missing}, extra {extra})")
                raise StructureError("relations must follow signature declaration order")
            for p, arity in sig.predicates.items():
                if self.relations[p].arity != arity:
                    raise StructureError(
                        f"{p}: relation arity {self.relations[p].arity} but signature says {arity}", p)
            missing = [c for c in sig.constants if c not in self.constant_map]
            if missing:
                raise StructureError(f"constants without a denotation: {missing}")
            extra = [c for c in self.constant_map if c not in sig.constants]
            if extra:
                raise StructureError(f"constant_map names undeclared constants: {extra}")
        return self

    def __hash__(self):
        return hash((self.domain, tuple(sorted(self.relations.items(), key=lambda kv: kv[0]))))


def is_total(s: PartialStructure) -> bool:
    return all(rel.is_total for rel in s.relations.values())


def undetermined_cells(s: PartialStructure):
    """Every undetermined (predicate, tuple) cell.

    Predicates come in declaration order, tuples in lexicographic domain order.
    """
    index = {e: i for i, e in enumerate(s.domain)}
    cells = []
    for name, rel in s.relations.items():
        for t in sorted(rel.undetermined, key=lambda t: [index[e] for e in t]):
            cells.append((name, t))
    return cells


def resolve(s: PartialStructure, decisions) -> PartialStructure:
    """Move each ``(predicate, tuple) -> bool`` decision out of R3.

    Cells left out of ``decisions`` stay undetermined.
    """
    moved_in = {}
    moved_out = {}
    for (pred, t), value in decisions.items():
        (moved_in if value else moved_out).setdefault(pred, set()).add(t)
    rels = {}
    for name, rel in s.relations.items():
        ins = moved_in.get(name, ())
        outs = moved_out.get(name, ())
        if not ins and not outs:
            rels[name] = rel
            continue
        rels[name] = PartialRelation(
            rel.arity,
            rel.known_in | frozenset(ins),
            rel.known_out | frozenset(outs),
            rel.undetermined - frozenset(ins) - frozenset(outs),
        )
    return PartialStructure(s.domain, rels, s.constant_map)


@dataclass(frozen=True)
class PoolEntry:
    """One available piece of evidence: a sentence plus user-supplied tags."""
    sentence: object
    text: str
    relevant: bool
    status: str

    def __post_init__(self):
        if self.status not in STATUSES:
            raise StructureError(f"pool status must be one of {list(STATUSES)}, got {self.status!r}")


@dataclass(frozen=True)
class KnowledgeBase:
    signature: Signature
    structure: PartialStructure
    primary_sentences: tuple = ()
    candidate_pool: tuple = ()
    primary_texts: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "primary_sentences", tuple(self.primary_sentences))
        object.__setattr__(self, "candidate_pool", tuple(self.candidate_pool))
        texts = tuple(self.primary_texts)
        if not texts:
            from .parser import print_formula
            texts = tuple(print_formula(f) for f in self.primary_sentences)
        object.__setattr__(self, "primary_texts", texts)

    def with_primary(self, sentences) -> "KnowledgeBase":
        """Same structure and pool, different primary sentences."""
        return KnowledgeBase(self.signature, self.structure, tuple(sentences), self.candidate_pool)

    def __hash__(self):
        return hash((self.signature, self.primary_sentences))


def build_kb(signature: Signature, structure: PartialStructure,
             primary: Iterable = (), pool: Iterable[PoolEntry] = ()) -> KnowledgeBase:
    """Validate everything and assemble a knowledge base."""
    from .formula import check_well_formed, free_vars

    structure.validate(signature)
    primary = tuple(primary)
    pool = tuple(pool)
    for where, f in [(f"primary_sentences[{i}]", f) for i, f in enumerate(primary)] + \
                    [(f"candidate_pool[{i}]", e.sentence) for i, e in enumerate(pool)]:
        v = check_well_formed(f, signature)
        if v is not None:
            raise StructureError(f"{where}: {v}")
        if free_vars(f):
            raise StructureError(f"{where}: not a sentence (free {sorted(free_vars(f))})")
    return KnowledgeBase(signature, structure, primary, pool)
