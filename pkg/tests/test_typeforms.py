import pytest
from hypothesis import given, settings, strategies as st

from dquiver import (
    InvalidForm,
    NotTypeA,
    NotTypeD,
    Quiver,
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
    TypeIVCycle,
    analyze_type_a,
    classify_type_d,
    dynkin_d,
    forms_equal,
    linear_a,
    normalize_form,
    oriented_cycle,
    parse_form,
    realize,
)
from dquiver.typeforms import realize_type_a

from oracles import all_type_d_forms, d_class_quivers

D5_LEFT = Quiver.from_arrows(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 1), (2, 4)])
D5_RIGHT = Quiver.from_arrows(5, [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 0)])


def test_analyze_single_vertex():
    q = Quiver.from_arrows(1, [])
    assert analyze_type_a(q).s == 0 and analyze_type_a(q).t == 0


def test_analyze_linear_a4():
    shape = analyze_type_a(linear_a(4))
    assert (shape.s, shape.t) == (3, 0)


def test_analyze_triangle_counts():
    shape = analyze_type_a(oriented_cycle(3))
    assert (shape.s, shape.t) == (0, 1)
    assert 3 == 1 + shape.s + 2 * shape.t


def test_analyze_rejects_four_cycle():
    with pytest.raises(NotTypeA):
        analyze_type_a(oriented_cycle(4))


def test_analyze_rejects_dynkin_d():
    with pytest.raises(NotTypeA):
        analyze_type_a(dynkin_d(4))


def test_analyze_accepts_exactly_a_class(request):
    from dquiver import mutation_class

    for n in range(2, 9):
        for q in mutation_class(linear_a(n)).members.values():
            shape = analyze_type_a(q)
            assert q.n == 1 + shape.s + 2 * shape.t


def test_root_neighborhood_check():
    q = linear_a(3)
    analyze_type_a(q, root=0)
    with pytest.raises(NotTypeA, match="root"):
        analyze_type_a(q, root=1)


def test_classify_d5_examples():
    assert str(classify_type_d(D5_LEFT)) == "II(1,0,0,0)"
    assert str(classify_type_d(D5_RIGHT)) == "IV((3,1,0))"


def test_classify_plain_cycles():
    assert classify_type_d(oriented_cycle(5)) == TypeIVCycle(5)
    # the bare 4-cycle is the degenerate type III quiver
    assert classify_type_d(oriented_cycle(4)) == TypeIII(0, 0, 0, 0)


def test_classify_rejects_type_a():
    with pytest.raises(NotTypeD):
        classify_type_d(linear_a(5))


def test_classify_rejects_small():
    with pytest.raises(NotTypeD):
        classify_type_d(oriented_cycle(3))


def test_dynkin_d_is_type_i():
    for n in range(4, 8):
        assert classify_type_d(dynkin_d(n)) == TypeI(n - 3, 0)


def test_realize_vertex_counts():
    assert realize(TypeI(2, 1)).n == 3 + 2 + 2
    assert realize(TypeII(1, 1, 0, 2)).n == 4 + 1 + 2 + 4
    assert realize(TypeIV(((3, 1, 0), (1, 0, 1)))).n == (3 + 1) + (1 + 1 + 1) + 2


def test_realize_d5_pair_isomorphic_to_paper_quivers():
    from dquiver import canonical_key

    assert canonical_key(realize(TypeII(1, 0, 0, 0))) == canonical_key(D5_LEFT)
    assert canonical_key(realize(TypeIV(((3, 1, 0),)))) == canonical_key(D5_RIGHT)


def test_round_trip_example():
    assert classify_type_d(realize(TypeIII(2, 1, 0, 3))) == TypeIII(2, 1, 0, 3)


def test_normalize_degenerates():
    assert normalize_form(TypeIV(((3, 0, 0),))) == TypeII(0, 0, 0, 0)
    assert normalize_form(TypeIVCycle(4)) == TypeIII(0, 0, 0, 0)
    assert normalize_form(TypeIV(((1, 2, 0), (1, 0, 1)))) == TypeIII(2, 0, 0, 1)


def test_form_invariants():
    with pytest.raises(InvalidForm):
        TypeIV(((2, 0, 0),))  # the excluded distance sequence (2)
    with pytest.raises(InvalidForm):
        TypeIV(())
    with pytest.raises(InvalidForm):
        TypeIVCycle(2)
    # rotation canonicalization
    assert TypeIV(((3, 1, 0), (1, 0, 0))) == TypeIV(((1, 0, 0), (3, 1, 0)))


def test_parse_form_round_trip():
    for text in ["I(2,1)", "II(0,1,2,3)", "III(1,0,2,0)", "IVCycle(7)",
                 "IV((3,1,0),(1,0,2))"]:
        assert str(parse_form(str(parse_form(text)))) == str(parse_form(text))


def test_round_trip_all_forms_up_to_12_vertices():
    for form in all_type_d_forms(12):
        q = realize(form)
        assert forms_equal(classify_type_d(q), form), form
        assert q.n == normalize_form(form).vertex_count()


def test_exhaustive_classification_of_classes():
    for n in range(4, 8):
        for q in d_class_quivers(n):
            form = classify_type_d(q)  # must not raise
            assert normalize_form(form).vertex_count() == n


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_classification_is_relabeling_invariant(data):
    forms = all_type_d_forms(9)
    form = data.draw(st.sampled_from(forms))
    q = realize(form)
    perm = data.draw(st.permutations(range(q.n)))
    assert forms_equal(classify_type_d(q.permuted(perm)), form)


def test_realize_type_a_shapes():
    q = realize_type_a(2, 1)
    shape = analyze_type_a(q, root=0)
    assert (shape.s, shape.t) == (2, 1)
