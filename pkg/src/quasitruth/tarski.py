"""Classical satisfaction and truth in total structures."""

from __future__ import annotations

from .formula import (
    And, Atom, Const, Equals, Exists, ForAll, Iff, Implies, Not, Or, Var,
    universal_closure,
)
from .structures import PartialStructure, is_total


class EvaluationError(ValueError):
    pass


def _denote(t, b, env):
    if isinstance(t, Const):
        try:
            return b.constant_map[t.name]
        except KeyError:
            raise EvaluationError(f"constant {t.name!r} has no denotation") from None
    try:
        return env[t.name]
    except KeyError:
        raise EvaluationError(f"variable {t.name!r} is unbound") from None


def satisfies(b: PartialStructure, env, f) -> bool:
    """Does ``env`` satisfy ``f`` in the total structure ``b``?

    Quantifiers extend the environment rather than substituting, so bound
    variables can never be captured.
    """
    if isinstance(f, Atom):
        t = tuple(_denote(a, b, env) for a in f.args)
        rel = b.relations[f.predicate]
        if t in rel.known_in:
            return True
        if t in rel.undetermined:
            raise EvaluationError(f"{f.predicate}{list(t)} is undetermined; structure is not total")
        return False
    if isinstance(f, Equals):
        return _denote(f.left, b, env) == _denote(f.right, b, env)
    if isinstance(f, Not):
        return not satisfies(b, env, f.body)
    if isinstance(f, And):
        return satisfies(b, env, f.left) and satisfies(b, env, f.right)
    if isinstance(f, Or):
        return satisfies(b, env, f.left) or satisfies(b, env, f.right)
    if isinstance(f, Implies):
        return not satisfies(b, env, f.left) or satisfies(b, env, f.right)
    if isinstance(f, Iff):
        return satisfies(b, env, f.left) == satisfies(b, env, f.right)
    if isinstance(f, ForAll):
        return all(satisfies(b, {**env, f.var: e}, f.body) for e in b.domain)
    if isinstance(f, Exists):
        return any(satisfies(b, {**env, f.var: e}, f.body) for e in b.domain)
    if isinstance(f, Var):
        raise TypeError("a term is not a formula")
    raise TypeError(f"not a formula: {f!r}")


def is_true(b: PartialStructure, f) -> bool:
    """Truth of ``f`` in ``b``; open formulas are read as their universal closure."""
    if not is_total(b):
        raise EvaluationError("truth is only defined on total structures")
    return satisfies(b, {}, universal_closure(f))
