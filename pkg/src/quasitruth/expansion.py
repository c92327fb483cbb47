"""Total expansions of partial structures and the search for A-normal ones.

An expansion resolves every undetermined cell to in or out. Expansions are
numbered by binary counting over :func:`undetermined_cells`: cell ``j`` is
bit ``j`` of the index, out = 0, in = 1. Searches return the first
qualifying expansion in that order, so witnesses are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernel
from .grounding import ProgramSet, compile_sentence
from .structures import (
    KnowledgeBase, PartialStructure, StructureError, is_total, resolve,
    undetermined_cells,
)
from .tarski import is_true

DEFAULT_BUDGET = 1 << 20
MAX_ENUMERATION_CELLS = 62
UNLIMITED = 1 << 62


class TooManyCells(ValueError):
    pass


class SearchBudget:
    """Cap on candidate expansions visited, shared by every search it is passed to.

    One unit is one terminal search node: a subtree pruned because some
    sentence is already false, or a subtree in which every sentence is
    already true.
    """

    def __init__(self, max_expansions_visited=DEFAULT_BUDGET):
        if int(max_expansions_visited) <= 0:
            raise ValueError("budget must be positive")
        self.limit = int(max_expansions_visited)
        self.used = 0

    @classmethod
    def unlimited(cls):
        return cls(UNLIMITED)

    @property
    def remaining(self):
        return self.limit - self.used

    def charge(self, n):
        self.used += n

    def __repr__(self):
        return f"SearchBudget(used={self.used}, limit={self.limit})"


def as_budget(budget) -> SearchBudget:
    if budget is None:
        return SearchBudget()
    if isinstance(budget, SearchBudget):
        return budget
    return SearchBudget(budget)


@dataclass(frozen=True)
class Found:
    witness: PartialStructure
    visited: int = 0


@dataclass(frozen=True)
class NotFound:
    visited: int = 0


@dataclass(frozen=True)
class Undetermined:
    visited: int = 0
    reason: str = "search budget exhausted"


def enumerate_expansions(s: PartialStructure):
    """Yield all 2^k total expansions of ``s`` in canonical order."""
    cells = undetermined_cells(s)
    k = len(cells)
    if k > MAX_ENUMERATION_CELLS:
        raise TooManyCells(f"{k} undetermined cells; enumeration is capped at "
                           f"{MAX_ENUMERATION_CELLS}, use the search functions")
    for i in range(1 << k):
        yield resolve(s, {cell: bool(i >> j & 1) for j, cell in enumerate(cells)})


def is_expansion(s: PartialStructure, b: PartialStructure) -> bool:
    """Is ``b`` a total structure agreeing with ``s`` wherever ``s`` is known?"""
    if tuple(b.domain) != tuple(s.domain):
        raise StructureError("domains differ")
    if dict(b.constant_map) != dict(s.constant_map):
        raise StructureError("constants are interpreted differently")
    if list(b.relations) != list(s.relations):
        raise StructureError("relation symbols differ")
    if not is_total(b):
        return False
    for name, rel in s.relations.items():
        other = b.relations[name]
        if other.arity != rel.arity:
            raise StructureError(f"{name}: arities differ")
        if not (rel.known_in <= other.known_in and rel.known_out <= other.known_out):
            return False
    return True


def is_a_normal(kb: KnowledgeBase, b: PartialStructure) -> bool:
    return is_expansion(kb.structure, b) and all(is_true(b, f) for f in kb.primary_sentences)


def _programs(kb, extra, cells):
    index = {cell: i for i, cell in enumerate(cells)}
    sentences = list(kb.primary_sentences) + list(extra)
    return ProgramSet.pack([compile_sentence(f, kb.structure, index) for f in sentences],
                           len(cells))


def find_a_normal(kb: KnowledgeBase, constraint=None, budget=None, backend=None):
    """First A-normal expansion (in canonical order) where ``constraint`` also holds.

    Returns :class:`Found`, :class:`NotFound`, or :class:`Undetermined` when
    ``budget`` runs out first.
    """
    budget = as_budget(budget)
    cells = undetermined_cells(kb.structure)
    ps = _programs(kb, [] if constraint is None else [constraint], cells)
    status, used, _, vals, _ = kernel.run(ps, True, budget.remaining, backend=backend)
    budget.charge(used)
    if status == kernel.EXHAUSTED:
        return Undetermined(used)
    if status == kernel.FOUND:
        witness = resolve(kb.structure, {cell: bool(vals[j]) for j, cell in enumerate(cells)})
        return Found(witness, used)
    return NotFound(used)


def count_a_normal(kb: KnowledgeBase, budget=None, backend=None):
    """Exact number of A-normal expansions, or :class:`Undetermined`."""
    budget = as_budget(budget)
    cells = undetermined_cells(kb.structure)
    status, used, total, _, _ = kernel.run(_programs(kb, [], cells), False,
                                           budget.remaining, backend=backend)
    budget.charge(used)
    if status == kernel.EXHAUSTED:
        return Undetermined(used)
    return total


def list_a_normal(kb: KnowledgeBase, budget=None, backend=None):
    """All A-normal expansions in canonical order, or :class:`Undetermined`.

    Each is returned as its cell decisions, a list of ``((predicate, tuple),
    bool)`` in cell order.
    """
    budget = as_budget(budget)
    cells = undetermined_cells(kb.structure)
    status, used, _, _, nodes = kernel.run(_programs(kb, [], cells), False,
                                           budget.remaining, collect=True, backend=backend)
    budget.charge(used)
    if status == kernel.EXHAUSTED:
        return Undetermined(used)
    out = []
    for c, high in nodes:
        # a success node fixes cells c..k-1 and leaves 0..c-1 free
        for low in range(1 << c):
            bits = [bool(low >> j & 1) for j in range(c)] + [bool(v) for v in high]
            out.append(list(zip(cells, bits)))
    return out
