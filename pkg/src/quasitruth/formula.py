"""Signatures, terms and first-order formula ASTs.

All node types are frozen dataclasses, so structural equality is plain ``==``
and formulas can be shared freely between evaluators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Union

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
KEYWORDS = frozenset({"forall", "exists"})


class SignatureError(ValueError):
    pass


@dataclass(frozen=True)
class Signature:
    predicates: Mapping[str, int]
    constants: tuple = ()
    equality: bool = False

    def __post_init__(self):
        preds = dict(self.predicates)
        consts = tuple(self.constants)
        for name, arity in preds.items():
            _check_name(name, "predicate")
            if not isinstance(arity, int) or isinstance(arity, bool) or arity < 0:
                raise SignatureError(f"predicate {name!r} has invalid arity {arity!r}")
        seen = set()
        for name in consts:
            _check_name(name, "constant")
            if name in seen:
                raise SignatureError(f"constant {name!r} declared twice")
            seen.add(name)
        clash = seen & preds.keys()
        if clash:
            raise SignatureError(f"names used as both predicate and constant: {sorted(clash)}")
        object.__setattr__(self, "predicates", preds)
        object.__setattr__(self, "constants", consts)

    def __hash__(self):
        return hash((tuple(self.predicates.items()), self.constants, self.equality))


def _check_name(name, what):
    if not isinstance(name, str) or not IDENT_RE.match(name):
        raise SignatureError(f"invalid {what} name {name!r}")
    if name in KEYWORDS:
        raise SignatureError(f"{what} name {name!r} is a reserved word")


# -- terms ------------------------------------------------------------------

@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Var:
    name: str


Term = Union[Const, Var]


# -- formulas ---------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    predicate: str
    args: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Equals:
    left: Term
    right: Term


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class ForAll:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


Formula = Union[Atom, Equals, Not, And, Or, Implies, Iff, ForAll, Exists]
BINARY = (And, Or, Implies, Iff)
QUANTIFIERS = (ForAll, Exists)


def free_vars(f) -> frozenset:
    """Variables occurring free in ``f``."""
    if isinstance(f, Atom):
        return frozenset(t.name for t in f.args if isinstance(t, Var))
    if isinstance(f, Equals):
        return frozenset(t.name for t in (f.left, f.right) if isinstance(t, Var))
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, BINARY):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, QUANTIFIERS):
        return free_vars(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


def is_sentence(f) -> bool:
    return not free_vars(f)


def universal_closure(f):
    """Close ``f`` with universal quantifiers, outermost variable first in
    lexicographic order. Sentences come back unchanged."""
    for name in sorted(free_vars(f), reverse=True):
        f = ForAll(name, f)
    return f


# -- well-formedness ----------------------------------------------------------

ARITY_MISMATCH = "arity-mismatch"
UNKNOWN_PREDICATE = "unknown-predicate"
UNKNOWN_CONSTANT = "unknown-constant"
EQUALITY_DISABLED = "equality-disabled"


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    node: object = field(default=None, compare=False)

    def __str__(self):
        return f"{self.kind}: {self.message}"


def check_well_formed(f, sig: Signature):
    """Return ``None`` if ``f`` is well formed over ``sig``, else the first
    :class:`Violation` in leftmost-innermost (post-order) order."""
    for node in _postorder(f):
        v = _check_node(node, sig)
        if v is not None:
            return v
    return None


def _postorder(f):
    if isinstance(f, (Const, Var)):
        yield f
    elif isinstance(f, Atom):
        yield from f.args
        yield f
    elif isinstance(f, Equals):
        yield f.left
        yield f.right
        yield f
    elif isinstance(f, Not):
        yield from _postorder(f.body)
        yield f
    elif isinstance(f, BINARY):
        yield from _postorder(f.left)
        yield from _postorder(f.right)
        yield f
    elif isinstance(f, QUANTIFIERS):
        yield from _postorder(f.body)
        yield f
    else:
        raise TypeError(f"not a formula: {f!r}")


def _check_node(node, sig):
    if isinstance(node, Const):
        if node.name not in sig.constants:
            return Violation(UNKNOWN_CONSTANT, f"constant {node.name!r} is not declared", node)
    elif isinstance(node, Atom):
        arity = sig.predicates.get(node.predicate)
        if arity is None:
            return Violation(UNKNOWN_PREDICATE, f"predicate {node.predicate!r} is not declared", node)
        if arity != len(node.args):
            return Violation(
                ARITY_MISMATCH,
                f"{node.predicate} takes {arity} argument(s), got {len(node.args)}",
                node,
            )
    elif isinstance(node, Equals):
        if not sig.equality:
            return Violation(EQUALITY_DISABLED, "'=' is not part of this language", node)
    return None
