import pytest

from dquiver import (
    AShape,
    IntPolynomial,
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
    TypeIVCycle,
    UnsupportedChiShape,
    associated_polynomial,
    associated_polynomial_formula,
    asymmetry_similar_mod_p,
    cartan_det,
    cartan_matrix,
    chi_formula,
    classify_type_d,
    det_formula,
    oriented_cycle,
    realize,
)
from dquiver.linalg import bareiss_det, transpose

from oracles import all_type_d_forms, d_class_quivers


def test_intpoly_basics():
    p = IntPolynomial((1, 2, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert str(IntPolynomial((-1, 0, 1))) == "x^2 - 1"
    assert (p * p).coeffs == (1, 4, 4)
    q = IntPolynomial((1, 1))
    assert (p * q).divexact(q) == p
    with pytest.raises(ValueError):
        IntPolynomial((1, 1, 1)).divexact(q)


def test_bareiss_identity_and_known():
    assert bareiss_det(((1, 0), (0, 1))) == 1
    assert bareiss_det(((2, 3), (1, 4))) == 5
    assert bareiss_det(tuple(tuple(1 if i == j else 0 for j in range(5)) for i in range(5))) == 1


def test_det_cycle_formula():
    for k in (3, 4, 6, 9):
        assert cartan_det(cartan_matrix(oriented_cycle(k))) == k - 1


def test_det_all_spikes_formula():
    for k in (3, 4, 5):
        q = realize(TypeIV(((1, 0, 0),) * k))
        assert cartan_det(cartan_matrix(q)) == 2 * k - 1


def test_det_formula_examples():
    assert det_formula(TypeI(3, 2)) == 4
    assert det_formula(TypeIII(1, 1, 0, 1)) == 3 * 4
    assert det_formula(TypeIV(((1, 0, 0),) * 3)) == 5  # m=3, c=3
    assert det_formula(AShape(2, 3)) == 8


def test_single_vertex_polynomial():
    assert associated_polynomial(((1,),)) == IntPolynomial((-1, 1))


def test_d5_golden_pair():
    C1 = cartan_matrix(realize(TypeII(1, 0, 0, 0)))
    C2 = cartan_matrix(realize(TypeIV(((3, 1, 0),))))
    assert cartan_det(C1) == 2 and cartan_det(C2) == 2
    assert associated_polynomial(C1) == 2 * IntPolynomial((-1, 0, 1, -1, 0, 1))
    assert associated_polynomial(C2) == 2 * IntPolynomial((-1, 0, 2, -2, 0, 1))


def test_associated_polynomial_rejects_singular():
    with pytest.raises(ValueError):
        associated_polynomial(((1, 1), (1, 1)))


def test_leading_and_constant_coefficients():
    for form in all_type_d_forms(8):
        C = cartan_matrix(realize(form))
        poly = associated_polynomial(C)
        det = cartan_det(C)
        assert poly.coeffs[-1] == det
        assert abs(poly.coeffs[0]) == det


def test_chi_formula_type_a():
    shape = AShape(0, 1)
    assert chi_formula(shape) == IntPolynomial((-1, 0, 0, 1))  # x^3 - 1


def test_chi_formula_ivcycle_parity():
    assert chi_formula(TypeIVCycle(5)) == IntPolynomial((-1, 0, 0, 0, 0, 1))
    half = IntPolynomial((-1, 0, 0, 1))
    assert chi_formula(TypeIVCycle(6)) == half * half


def test_chi_unsupported_shapes():
    with pytest.raises(UnsupportedChiShape):
        chi_formula(TypeIV(((1, 1, 0), (1, 1, 0), (1, 0, 0))))  # two loaded spikes
    with pytest.raises(UnsupportedChiShape):
        chi_formula(TypeIV(((3, 0, 0), (1, 0, 0))))  # mixed distances


def test_formula_matches_matrix_computation():
    covered = []
    for form in all_type_d_forms(10):
        f = form
        try:
            got = associated_polynomial_formula(f)
        except UnsupportedChiShape:
            continue
        covered.append(f)
        q = realize(f)
        assert got == associated_polynomial(cartan_matrix(q)), f
    assert len(covered) > 50


def test_det_formula_vs_matrix_on_d6():
    for q in d_class_quivers(6):
        form = classify_type_d(q)
        assert det_formula(form) == cartan_det(cartan_matrix(q))


def test_opposite_polynomial_invariance_d6():
    for q in d_class_quivers(6):
        C = cartan_matrix(q)
        assert associated_polynomial(C) == associated_polynomial(transpose(C))


def test_self_injective_pair_polynomials():
    for m in (3, 4):
        a = associated_polynomial(cartan_matrix(oriented_cycle(2 * m)))
        b = associated_polynomial(cartan_matrix(realize(TypeIV(((1, 0, 0),) * m))))
        assert a == b


def test_similarity_self_and_transpose():
    C = cartan_matrix(realize(TypeII(1, 0, 0, 0)))
    assert asymmetry_similar_mod_p(C, C, 3)
    assert asymmetry_similar_mod_p(C, transpose(C), 3)


def test_similarity_rejects_bad_prime():
    C = cartan_matrix(realize(TypeII(1, 0, 0, 0)))  # det 2
    with pytest.raises(ValueError):
        asymmetry_similar_mod_p(C, C, 2)


def test_d15_mod_3_separation():
    C1 = cartan_matrix(realize(TypeIV(((3, 2, 0), (3, 1, 2)))))
    C2 = cartan_matrix(realize(TypeIV(((3, 3, 0), (3, 0, 2)))))
    assert associated_polynomial(C1) == associated_polynomial(C2)
    assert not asymmetry_similar_mod_p(C1, C2, 3)


def test_transpose_similarity_all_d6_small_primes():
    for q in d_class_quivers(6)[::7]:
        C = cartan_matrix(q)
        det = cartan_det(C)
        for p in (3, 5, 7, 11, 13):
            if det % p == 0:
                continue
            assert asymmetry_similar_mod_p(C, transpose(C), p)


def test_eq_det_ab_closed_form():
    for k in range(2, 7):
        for a in (0, 1, -1, 2):
            for b in (0, 1, -1, 2):
                M = tuple(
                    tuple(b if i == j else a for j in range(k)) for i in range(k)
                )
                assert bareiss_det(M) == (b - a) ** (k - 1) * (b + (k - 1) * a)
