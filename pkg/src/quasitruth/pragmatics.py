"""Auditing the primary sentences and the six-way sentence classification."""

from __future__ import annotations

from dataclasses import dataclass, field

from .expansion import Found, NotFound, Undetermined, as_budget, find_a_normal
from .formula import universal_closure
from .parser import parse_formula
from .structures import TRUSTED_STATUSES, KnowledgeBase, PoolEntry, is_total
from .tarski import is_true

LITERAL = "literal"
STRICT = "strict"
MODES = (LITERAL, STRICT)

TRUE = "TRUE"
FALSE = "FALSE"
QUASI_TRUE = "QUASI-TRUE"
QUASI_FALSE = "QUASI-FALSE"
FORMAL_NONSENSE = "FORMAL-NONSENSE"
PRAGMATIC_NONSENSE = "PRAGMATIC-NONSENSE"

WELL_BUILT = "WellBuilt"
NOT_WELL_BUILT = "NotWellBuilt"


def necessarily_included(entry: PoolEntry) -> bool:
    return entry.relevant and entry.status in TRUSTED_STATUSES


def _included(kb):
    seen = []
    for entry in kb.candidate_pool:
        if necessarily_included(entry) and entry.sentence not in [e.sentence for e in seen]:
            seen.append(entry)
    return seen


def exclusion_reason(s, kb: KnowledgeBase, budget=None):
    """Why ``s`` must be kept out of the primary sentences.

    Returns the first necessarily included pool entry that no expansion of
    the structure can make true together with ``s``, ``None`` if there is
    none, or :class:`Undetermined` if the budget ran out before that could
    be settled.
    """
    budget = as_budget(budget)
    undetermined = None
    for entry in _included(kb):
        probe = kb.with_primary([s, entry.sentence])
        result = find_a_normal(probe, None, budget)
        if isinstance(result, NotFound):
            return entry
        if isinstance(result, Undetermined):
            undetermined = result
    return undetermined


def necessarily_excluded(s, kb: KnowledgeBase, budget=None):
    """``True``/``False``, or :class:`Undetermined` on budget exhaustion."""
    reason = exclusion_reason(s, kb, budget)
    if isinstance(reason, Undetermined):
        return reason
    return reason is not None


@dataclass
class AuditReport:
    verdict: str
    mode: str
    missing: list = field(default_factory=list)
    forbidden: list = field(default_factory=list)
    strict_extras: list = field(default_factory=list)
    undetermined: list = field(default_factory=list)

    @property
    def well_built(self):
        return self.verdict == WELL_BUILT

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "mode": self.mode,
            "missing": list(self.missing),
            "forbidden": [dict(f) for f in self.forbidden],
            "strict_extras": list(self.strict_extras),
            "undetermined": list(self.undetermined),
        }


def audit_primary(kb: KnowledgeBase, mode=LITERAL, budget=None) -> AuditReport:
    """Check that the primary sentences are well built.

    ``missing``: necessarily included pool sentences absent from them.
    ``forbidden``: members that must be excluded, with the included sentence
    each one contradicts. In strict mode every member must itself be
    necessarily included; the others go to ``strict_extras``. Members whose
    exclusion could not be settled within the budget are listed under
    ``undetermined`` and do not make the report NotWellBuilt on their own.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    budget = as_budget(budget)
    primary = list(kb.primary_sentences)
    texts = list(kb.primary_texts)
    included = _included(kb)

    missing = [e.text for e in included if e.sentence not in primary]
    forbidden = []
    undetermined = []
    seen = []
    for f, text in zip(primary, texts):
        if f in seen:
            continue
        seen.append(f)
        reason = exclusion_reason(f, kb, budget)
        if isinstance(reason, Undetermined):
            undetermined.append(text)
        elif reason is not None:
            forbidden.append({"sentence": text, "contradicts": reason.text})
    extras = []
    if mode == STRICT:
        included_sentences = [e.sentence for e in included]
        extras = [t for f, t in zip(primary, texts) if f not in included_sentences]
    bad = missing or forbidden or extras
    return AuditReport(NOT_WELL_BUILT if bad else WELL_BUILT, mode,
                       missing, forbidden, extras, undetermined)


@dataclass
class Verdict:
    """Outcome of :func:`classify`, with whatever evidence backs it."""
    kind: str
    reason: str = ""
    witness: object = None
    audit: AuditReport | None = None
    position: int | None = None
    undetermined: bool = False
    no_a_normal: bool = False
    excluded_by: str | None = None
    formula: object = None

    @property
    def exit_code(self):
        if self.undetermined:
            return 4
        return {TRUE: 0, QUASI_TRUE: 0, FALSE: 1, QUASI_FALSE: 1,
                FORMAL_NONSENSE: 3, PRAGMATIC_NONSENSE: 5}[self.kind]


def classify(kb: KnowledgeBase, text: str, mode=LITERAL, budget=None) -> Verdict:
    """Classify ``text`` against ``kb``.

    Steps, first match wins: not a formula -> FORMAL-NONSENSE; total structure
    satisfying the primary sentences -> TRUE/FALSE; primary sentences not well
    built -> PRAGMATIC-NONSENSE; sentence must be excluded -> PRAGMATIC-NONSENSE;
    existence of an A-normal structure not settled within budget ->
    FORMAL-NONSENSE (undetermined); otherwise QUASI-TRUE with a witness or
    QUASI-FALSE.
    """
    budget = as_budget(budget)
    outcome = parse_formula(text, kb.signature)
    if not outcome.ok:
        return Verdict(FORMAL_NONSENSE, outcome.reason, position=outcome.position)
    s = universal_closure(outcome.formula)

    b = kb.structure
    if is_total(b) and all(is_true(b, f) for f in kb.primary_sentences):
        value = is_true(b, s)
        return Verdict(TRUE if value else FALSE, "evaluated in the total structure", formula=s)

    report = audit_primary(kb, mode, budget)
    if not report.well_built:
        return Verdict(PRAGMATIC_NONSENSE, "primary sentences are not well built",
                       audit=report, formula=s)
    if report.undetermined:
        return Verdict(FORMAL_NONSENSE, "could not settle whether primary sentences "
                       "must be excluded within the search budget",
                       audit=report, undetermined=True, formula=s)

    reason = exclusion_reason(s, kb, budget)
    if isinstance(reason, Undetermined):
        return Verdict(FORMAL_NONSENSE, "could not settle whether the sentence must be "
                       "excluded within the search budget", audit=report,
                       undetermined=True, formula=s)
    if reason is not None:
        return Verdict(PRAGMATIC_NONSENSE, "adding the sentence would break the primary "
                       "sentences", audit=report, excluded_by=reason.text, formula=s)

    existence = find_a_normal(kb, None, budget)
    if isinstance(existence, Undetermined):
        return Verdict(FORMAL_NONSENSE, "existence of an A-normal structure could not be "
                       "determined within the search budget", audit=report,
                       undetermined=True, formula=s)
    if isinstance(existence, NotFound):
        return Verdict(QUASI_FALSE, "no A-normal expansion exists", audit=report,
                       no_a_normal=True, formula=s)

    result = find_a_normal(kb, s, budget)
    if isinstance(result, Undetermined):
        return Verdict(FORMAL_NONSENSE, "search budget exhausted before the sentence "
                       "could be settled", audit=report, undetermined=True, formula=s)
    if isinstance(result, Found):
        return Verdict(QUASI_TRUE, "true in an A-normal expansion", witness=result.witness,
                       audit=report, formula=s)
    return Verdict(QUASI_FALSE, "false in every A-normal expansion", audit=report, formula=s)
