import pytest

from quasitruth.expansion import SearchBudget, Undetermined
from quasitruth.formula import Atom, Not
from quasitruth.parser import parse_formula
from quasitruth.pragmatics import (
    FORMAL_NONSENSE, NOT_WELL_BUILT, PRAGMATIC_NONSENSE, QUASI_FALSE, QUASI_TRUE,
    STRICT, TRUE, FALSE, WELL_BUILT, audit_primary, classify, necessarily_excluded,
    necessarily_included,
)
from quasitruth.structures import KnowledgeBase, PoolEntry, resolve

ALPHA = Atom("alpha")


def entry(relevant, status, sentence=ALPHA):
    return PoolEntry(sentence, "alpha", relevant, status)


@pytest.mark.parametrize("relevant, status, expected", [
    (True, "true", True),
    (True, "quasi-true", True),
    (True, "assumed-true", True),
    (False, "true", False),
    (True, "untrusted", False),
])
def test_necessarily_included(relevant, status, expected):
    assert necessarily_included(entry(relevant, status)) is expected


def sentence(kb, text):
    return parse_formula(text, kb.signature).formula


def test_necessarily_excluded(kb_of):
    g = kb_of("g")
    assert necessarily_excluded(Not(ALPHA), g) is True
    assert necessarily_excluded(sentence(g, "Father(joseph, peter)"), g) is False
    # alpha false satisfies the implication, so no single included sentence rules it out
    assert necessarily_excluded(sentence(g, "~Father(joseph, peter)"), g) is False
    assert necessarily_excluded(sentence(g, "~alpha & alpha"), g) is True


def test_exclusion_against_implication_only(kb_of):
    g = kb_of("g")
    only_imp = KnowledgeBase(g.signature, g.structure, g.primary_sentences,
                             (g.candidate_pool[1],))
    assert necessarily_excluded(sentence(g, "Father(joseph, peter)"), only_imp) is False


def test_exclusion_undetermined(kb_of):
    kb = kb_of("last_witness_k12")
    pool = (PoolEntry(kb.primary_sentences[0], "forall x. P(x)", True, "true"),)
    kb = KnowledgeBase(kb.signature, kb.structure, kb.primary_sentences, pool)
    assert isinstance(necessarily_excluded(sentence(kb, "P(first)"), kb, SearchBudget(2)),
                      Undetermined)


def test_audit_examples(kb_of):
    assert audit_primary(kb_of("g")).verdict == WELL_BUILT
    report = audit_primary(kb_of("g_prime"))
    assert (report.verdict, report.missing) == (NOT_WELL_BUILT, ["alpha"])
    assert audit_primary(kb_of("family_f")).verdict == WELL_BUILT


def test_audit_forbidden(kb_of):
    g = kb_of("g")
    extra = "~Father(joseph, peter) & alpha"
    kb = KnowledgeBase(g.signature, g.structure,
                       g.primary_sentences + (sentence(g, extra),), g.candidate_pool,
                       g.primary_texts + (extra,))
    report = audit_primary(kb)
    assert report.verdict == NOT_WELL_BUILT and report.missing == []
    assert report.forbidden == [{"sentence": extra,
                                 "contradicts": "alpha -> Father(joseph, peter)"}]


def test_strict_mode(kb_of):
    kb = kb_of("g_double_prime")
    assert audit_primary(kb).verdict == WELL_BUILT
    strict = audit_primary(kb, STRICT)
    assert strict.verdict == NOT_WELL_BUILT
    assert strict.strict_extras == ["~Father(joseph, peter)"]
    assert audit_primary(kb_of("g"), STRICT).verdict == WELL_BUILT


def test_classify_g(kb_of):
    v = classify(kb_of("g"), "Father(joseph, peter)")
    assert v.kind == QUASI_TRUE and v.exit_code == 0
    assert ("Joseph", "Peter") in v.witness.relations["Father"].known_in


def test_classify_g_prime(kb_of):
    v = classify(kb_of("g_prime"), "Father(joseph, peter)")
    assert v.kind == PRAGMATIC_NONSENSE and v.audit.missing == ["alpha"]
    assert v.exit_code == 5


def test_classify_excluded_sentence(kb_of):
    v = classify(kb_of("g"), "~alpha")
    assert v.kind == PRAGMATIC_NONSENSE and v.excluded_by == "alpha"


def test_classify_parse_failure(kb_of):
    v = classify(kb_of("g"), "Father(joseph)")
    assert v.kind == FORMAL_NONSENSE and v.position == 1 and v.exit_code == 3


def test_classify_no_a_normal(kb_of):
    kb = kb_of("family_f").with_primary([sentence(kb_of("family_f"), "Father(joseph, peter) & ~Father(joseph, peter)")])
    for text in ("Father(joseph, peter)", "~Father(joseph, peter)", "Married(joseph, mary)"):
        v = classify(kb, text)
        assert v.kind == QUASI_FALSE and v.no_a_normal


def test_classify_total_structure(kb_of):
    fam = kb_of("family_f")
    b = resolve(fam.structure, {("Father", ("Joseph", "Peter")): False})
    kb = KnowledgeBase(fam.signature, b)
    assert classify(kb, "Married(joseph, mary)").kind == TRUE
    v = classify(kb, "Father(joseph, peter)")
    assert v.kind == FALSE and v.exit_code == 1


def test_budget_shared_across_pipeline(kb_of):
    kb = kb_of("last_witness_k12")
    budget = SearchBudget(1 << 20)
    assert classify(kb, "P(first)", budget=budget).kind == QUASI_TRUE
    # one existence search plus one constraint search, both visiting every leaf
    assert budget.used == 2 * 4096
    v = classify(kb, "P(first)", budget=4096)
    assert v.kind == FORMAL_NONSENSE and v.undetermined and v.exit_code == 4


def test_classify_g_negation_is_quasi_false(kb_of):
    v = classify(kb_of("g"), "~Father(joseph, peter)")
    assert v.kind == QUASI_FALSE and not v.no_a_normal and v.exit_code == 1


def test_tautologies_and_contradictions(kb_of):
    kb = kb_of("g")
    assert classify(kb, "Married(x, y) | ~Married(x, y)").kind == QUASI_TRUE
    assert classify(kb, "alpha -> alpha").kind == QUASI_TRUE
    contradiction = "Father(joseph, john) & ~Father(joseph, john)"
    # it clashes with every included pool sentence
    assert classify(kb, contradiction).kind == PRAGMATIC_NONSENSE
    v = classify(kb_of("g_prime_bare"), contradiction)
    assert v.kind == QUASI_FALSE and not v.no_a_normal
