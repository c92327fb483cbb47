"""Grounding sentences over a partial structure into cell programs.

Quantifiers are unrolled over the finite domain and every atom over a known
tuple is replaced by its truth value, leaving a propositional formula whose
only variables are the structure's undetermined cells. That formula is
flattened to a postfix program of ints for the search kernel:

* ``i >= 0``  push the value of cell ``i``
* ``NOT`` / ``AND`` / ``OR`` / ``IMP`` / ``IFF``  the usual stack operators
* ``FALSE`` / ``TRUE``  push a constant
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

from .formula import (
    And, Atom, Const, Equals, Exists, ForAll, Iff, Implies, Not, Or,
    universal_closure,
)

NOT, AND, OR, IMP, IFF, FALSE, TRUE = -1, -2, -3, -4, -5, -6, -7


def ground(f, structure, cell_index, env=None):
    """Ground ``f`` to a simplified propositional tree.

    Leaves are ``True``/``False`` or ``("cell", i)``; inner nodes are
    ``("not", x)``, ``("and", xs)``, ``("or", xs)``, ``("imp", a, b)`` and
    ``("iff", a, b)``.
    """
    env = env or {}

    def den(t):
        return structure.constant_map[t.name] if isinstance(t, Const) else env[t.name]

    if isinstance(f, Atom):
        t = tuple(den(a) for a in f.args)
        rel = structure.relations[f.predicate]
        if t in rel.known_in:
            return True
        if t in rel.known_out:
            return False
        return ("cell", cell_index[(f.predicate, t)])
    if isinstance(f, Equals):
        return den(f.left) == den(f.right)
    if isinstance(f, Not):
        return _not(ground(f.body, structure, cell_index, env))
    if isinstance(f, And):
        return _and([ground(f.left, structure, cell_index, env),
                     ground(f.right, structure, cell_index, env)])
    if isinstance(f, Or):
        return _or([ground(f.left, structure, cell_index, env),
                    ground(f.right, structure, cell_index, env)])
    if isinstance(f, Implies):
        return _imp(ground(f.left, structure, cell_index, env),
                    ground(f.right, structure, cell_index, env))
    if isinstance(f, Iff):
        return _iff(ground(f.left, structure, cell_index, env),
                    ground(f.right, structure, cell_index, env))
    if isinstance(f, ForAll):
        parts = []
        for e in structure.domain:
            g = ground(f.body, structure, cell_index, {**env, f.var: e})
            if g is False:
                return False
            parts.append(g)
        return _and(parts)
    if isinstance(f, Exists):
        parts = []
        for e in structure.domain:
            g = ground(f.body, structure, cell_index, {**env, f.var: e})
            if g is True:
                return True
            parts.append(g)
        return _or(parts)
    raise TypeError(f"not a formula: {f!r}")


def _not(x):
    if isinstance(x, bool):
        return not x
    if x[0] == "not":
        return x[1]
    return ("not", x)


def _and(xs):
    out = []
    for x in xs:
        if x is False:
            return False
        if x is True:
            continue
        if x[0] == "and":
            out.extend(x[1])
        else:
            out.append(x)
    if not out:
        return True
    return out[0] if len(out) == 1 else ("and", out)


def _or(xs):
    out = []
    for x in xs:
        if x is True:
            return True
        if x is False:
            continue
        if x[0] == "or":
            out.extend(x[1])
        else:
            out.append(x)
    if not out:
        return False
    return out[0] if len(out) == 1 else ("or", out)


def _imp(a, b):
    if a is False or b is True:
        return True
    if a is True:
        return b
    if b is False:
        return _not(a)
    return ("imp", a, b)


def _iff(a, b):
    if isinstance(a, bool):
        return b if a else _not(b)
    if isinstance(b, bool):
        return a if b else _not(a)
    return ("iff", a, b)


def cells_of(g):
    """The set of cell indices a grounded tree depends on."""
    found = set()
    stack = [g]
    while stack:
        x = stack.pop()
        if isinstance(x, bool):
            continue
        tag = x[0]
        if tag == "cell":
            found.add(x[1])
        elif tag == "not":
            stack.append(x[1])
        elif tag in ("and", "or"):
            stack.extend(x[1])
        else:
            stack.append(x[1])
            stack.append(x[2])
    return found


def emit(g, out=None):
    """Append the postfix program for grounded tree ``g`` to ``out``."""
    if out is None:
        out = []
    stack = [(g, False)]
    while stack:
        x, done = stack.pop()
        if isinstance(x, bool):
            out.append(TRUE if x else FALSE)
            continue
        tag = x[0]
        if tag == "cell":
            out.append(x[1])
        elif done:
            if tag == "not":
                out.append(NOT)
            elif tag in ("and", "or"):
                out.extend([AND if tag == "and" else OR] * (len(x[1]) - 1))
            else:
                out.append(IMP if tag == "imp" else IFF)
        else:
            stack.append((x, True))
            kids = [x[1]] if tag == "not" else (x[1] if tag in ("and", "or") else [x[1], x[2]])
            # pushed in reverse so children are emitted left to right
            for kid in reversed(kids):
                stack.append((kid, False))
    return out


@dataclass
class Program:
    """One grounded sentence: postfix code and the cells it reads."""
    code: list
    cells: frozenset

    @property
    def trigger(self):
        # the search decides cells from the highest index down, so a program
        # becomes decidable once its lowest cell is set
        return min(self.cells) if self.cells else None


def compile_sentence(f, structure, cell_index) -> Program:
    g = ground(universal_closure(f), structure, cell_index)
    return Program(emit(g), frozenset(cells_of(g)))


@dataclass
class ProgramSet:
    """Programs packed into flat int arrays and bucketed by trigger level.

    ``level_progs[level_ptr[c]:level_ptr[c + 1]]`` are the programs checked at
    the search node where cells ``c .. k-1`` are decided (``c == k`` is the
    root, where constant programs live).
    """
    k: int
    code: array
    starts: array
    ends: array
    level_ptr: array
    level_progs: array
    min_trigger: int

    @classmethod
    def pack(cls, programs, k):
        code = array("i")
        starts = array("i")
        ends = array("i")
        buckets = [[] for _ in range(k + 1)]
        for n, p in enumerate(programs):
            starts.append(len(code))
            code.extend(p.code)
            ends.append(len(code))
            t = p.trigger
            buckets[k if t is None else t].append(n)
        level_ptr = array("i", [0])
        level_progs = array("i")
        for b in buckets:
            level_progs.extend(b)
            level_ptr.append(len(level_progs))
        triggers = [k if p.trigger is None else p.trigger for p in programs]
        return cls(k, code, starts, ends, level_ptr, level_progs, min(triggers, default=k))
