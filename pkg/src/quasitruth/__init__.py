"""Quasi-truth over finite partial structures, with formal and pragmatic nonsense."""

from .expansion import (
    Found, NotFound, SearchBudget, TooManyCells, Undetermined, count_a_normal,
    enumerate_expansions, find_a_normal, is_a_normal, list_a_normal,
)
from .formula import (
    And, Atom, Const, Equals, Exists, ForAll, Iff, Implies, Not, Or, Signature,
    Var, check_well_formed, free_vars, universal_closure,
)
from .kbfile import KBError, dump_kb, load_kb, parse_kb
from .kernel import BACKEND
from .parser import FormalNonsense, Parsed, parse_formula, print_formula
from .pragmatics import (
    AuditReport, Verdict, audit_primary, classify, necessarily_excluded,
    necessarily_included,
)
from .structures import (
    KnowledgeBase, PartialRelation, PartialStructure, PoolEntry, StructureError,
    build_kb, is_total, make_partial_relation, undetermined_cells,
)
from .tarski import is_true, satisfies

__version__ = "0.1.0"
