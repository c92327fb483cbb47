import itertools

import pytest

from quasitruth.structures import (
    PartialRelation, PartialStructure, StructureError, is_total,
    make_partial_relation, undetermined_cells,
)

D = ("Joseph", "Mary", "John", "Peter")
FATHER_OUT = [
    ("Joseph", "Joseph"), ("Joseph", "Mary"), ("Mary", "Joseph"), ("Mary", "Mary"),
    ("Mary", "John"), ("Mary", "Peter"), ("John", "Joseph"), ("John", "Mary"),
    ("John", "John"), ("John", "Peter"), ("Peter", "Joseph"), ("Peter", "Mary"),
    ("Peter", "John"), ("Peter", "Peter"),
]


def test_family_father_relation():
    rel = make_partial_relation(2, [("Joseph", "John")], FATHER_OUT, D,
                                fill=[("Joseph", "Peter")], name="Father")
    assert rel.undetermined == {("Joseph", "Peter")}
    assert len(FATHER_OUT) == 14


def test_overlap_is_rejected():
    with pytest.raises(StructureError) as e:
        make_partial_relation(2, [("Joseph", "Mary")], [("Joseph", "Mary")], D, name="Married")
    assert (e.value.predicate, e.value.tuple) == ("Married", ("Joseph", "Mary"))


def test_default_out_fills_the_rest():
    known_in = [("Joseph", "Mary"), ("Mary", "Joseph")]
    rel = make_partial_relation(2, known_in, [], D, fill="default-out")
    # counting oracle: every pair of D not listed as in
    expected = sum(1 for t in itertools.product(D, repeat=2) if t not in known_in)
    assert expected == 14
    assert len(rel.known_out) == expected and not rel.undetermined


def test_default_unknown():
    rel = make_partial_relation(1, [("Joseph",)], [("Mary",)], D, fill="default-unknown")
    assert rel.undetermined == {("John",), ("Peter",)}


def test_explicit_partition_must_be_exhaustive():
    with pytest.raises(StructureError) as e:
        make_partial_relation(1, [("Joseph",)], [("Mary",)], D, fill=[("John",)], name="P")
    assert e.value.tuple == ("Peter",)


@pytest.mark.parametrize("known_in", [[("Joseph",)], [("Nobody", "Mary")]])
def test_bad_tuples(known_in):
    with pytest.raises(StructureError):
        make_partial_relation(2, known_in, [], D)


def test_arity_zero():
    rel = make_partial_relation(0, [], [], D, fill="default-unknown")
    assert rel.undetermined == {()}
    assert make_partial_relation(0, [()], [], D).known_in == {()}


def test_totality_and_cells(kb_of):
    fam = kb_of("family_f").structure
    assert not is_total(fam)
    assert fam.relations["Married"].is_total
    assert undetermined_cells(fam) == [("Father", ("Joseph", "Peter"))]
    assert len(undetermined_cells(kb_of("g_prime").structure)) == 2


def test_cell_order_is_declaration_then_domain_order():
    dom = ("b", "a")
    s = PartialStructure(dom, {
        "Q": PartialRelation(1, frozenset(), frozenset(), frozenset({("a",), ("b",)})),
        "P": PartialRelation(0, frozenset(), frozenset(), frozenset({()})),
    })
    assert undetermined_cells(s) == [("Q", ("b",)), ("Q", ("a",)), ("P", ())]


def test_total_structure_has_no_cells():
    s = PartialStructure(("a",), {"P": PartialRelation(1, frozenset({("a",)}), frozenset())})
    assert is_total(s) and undetermined_cells(s) == []


def test_structure_validation():
    with pytest.raises(StructureError):
        PartialStructure((), {}).validate()
    with pytest.raises(StructureError):
        PartialStructure(("a", "a"), {}).validate()
    with pytest.raises(StructureError):
        PartialStructure(("a",), {}, {"c": "z"}).validate()
