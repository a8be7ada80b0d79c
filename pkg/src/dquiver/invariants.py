"""Derived-equivalence invariants: Cartan determinants, associated and
characteristic polynomials (closed forms and exact matrix computation),
and similarity of asymmetry matrices over prime fields.
"""

from __future__ import annotations

from .intpoly import IntPolynomial, interpolate_integer
from .linalg import (
    asymmetry_mod,
    bareiss_det,
    invariant_factors_mod,
    transpose,
)
from .typeforms import (
    AShape,
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
    TypeIVCycle,
    normalize_form,
)


class UnsupportedChiShape(ValueError):
    """No closed characteristic-polynomial formula for this shape."""


def cartan_det(C) -> int:
    return bareiss_det(C)


def det_formula(form) -> int:
    """Closed-form Cartan determinant from the parameters alone."""
    if isinstance(form, AShape):
        return 2**form.t
    form = normalize_form(form)
    if isinstance(form, TypeI):
        return 2**form.t
    if isinstance(form, TypeII):
        return 2 * 2 ** (form.t1 + form.t2)
    if isinstance(form, TypeIII):
        return 3 * 2 ** (form.t1 + form.t2)
    if isinstance(form, TypeIVCycle):
        return form.m - 1
    if isinstance(form, TypeIV):
        t_total = sum(t for _, _, t in form.triples)
        return (form.m + form.c() - 1) * 2**t_total
    raise TypeError(f"no determinant formula for {form!r}")


def associated_polynomial(C) -> IntPolynomial:
    """det(x*C^T - C), which equals (det C) times the characteristic
    polynomial of the asymmetry matrix C*C^{-T}; exact integers."""
    n = len(C)
    det = bareiss_det(C)
    if det == 0:
        raise ValueError("Cartan matrix is singular")
    Ct = transpose(C)
    points = []
    for x in range(n + 1):
        M = [
            [x * Ct[i][j] - C[i][j] for j in range(n)]
            for i in range(n)
        ]
        points.append((x, bareiss_det(M)))
    poly = interpolate_integer(points)
    assert poly.degree == n and poly.coeffs[-1] == det
    assert abs(poly.coeffs[0]) == abs(det)
    return poly


def _chi_with_unit_factor(t_exponent: int, core: IntPolynomial) -> IntPolynomial:
    """core * (x+1)**t_exponent, where a negative exponent means exact
    division by that power of (x+1)."""
    xp1 = IntPolynomial((1, 1))
    if t_exponent >= 0:
        return core * xp1**t_exponent
    out = core
    for _ in range(-t_exponent):
        out = out.divexact(xp1)
    return out


def chi_formula(form) -> IntPolynomial:
    """Closed-form characteristic polynomial of the asymmetry matrix.

    Covers type A shapes, types I/II/III, spikeless cycles, and the type
    IV parameter shapes ((1,s,t),(1,0,0),...) with at least three spikes,
    ((3,s,t)), and ((3,s1,t1),(3,s2,t2)).
    """
    x = IntPolynomial.x()
    xm1 = IntPolynomial((-1, 1))
    if isinstance(form, AShape):
        s, t = form.s, form.t
        core = IntPolynomial.monomial(s + t + 2) + IntPolynomial(((-1) ** (s + 1),))
        return _chi_with_unit_factor(t - 1, core)
    form = normalize_form(form)
    if isinstance(form, TypeI):
        s, t = form.s, form.t
        core = (IntPolynomial.monomial(s + t + 2) + IntPolynomial(((-1) ** s,))) * xm1
        return _chi_with_unit_factor(t, core)
    if isinstance(form, (TypeII, TypeIII)):
        s, t = form.s1 + form.s2, form.t1 + form.t2
        core = (
            IntPolynomial.monomial(s + t + 2) + IntPolynomial(((-1) ** (s + 1),))
        ) * xm1
        return _chi_with_unit_factor(t + 1, core)
    if isinstance(form, TypeIVCycle):
        n = form.m
        if n % 2 == 1:
            return IntPolynomial.monomial(n) - IntPolynomial.one()
        half = IntPolynomial.monomial(n // 2) - IntPolynomial.one()
        return half * half
    if isinstance(form, TypeIV):
        return _chi_type_iv(form)
    raise TypeError(f"no closed characteristic polynomial for {form!r}")


def _chi_type_iv(form: TypeIV) -> IntPolynomial:
    trs = form.triples
    xm1 = IntPolynomial((-1, 1))
    if all(d == 1 for d, _, _ in trs) and len(trs) >= 3:
        loaded = [(s, t) for _, s, t in trs if (s, t) != (0, 0)]
        if len(loaded) > 1:
            raise UnsupportedChiShape(
                "several loaded spikes on an all-consecutive cycle"
            )
        s, t = loaded[0] if loaded else (0, 0)
        b = len(trs)
        core = (IntPolynomial.monomial(b) - IntPolynomial.one()) * (
            IntPolynomial.monomial(s + t + b) + IntPolynomial(((-1) ** (s + 1),))
        )
        return _chi_with_unit_factor(t, core)
    if len(trs) == 1 and trs[0][0] == 3:
        _, s, t = trs[0]
        sign = (-1) ** (s + 1)
        core = IntPolynomial(
            (sign, 2 * sign) + (0,) * (s + t + 1) + (2, 1)
        )  # x^{s+t+4} + 2x^{s+t+3} + sign*2x + sign
        return _chi_with_unit_factor(t - 1, core * xm1)
    if len(trs) == 2 and trs[0][0] == 3 and trs[1][0] == 3:
        (_, s1, t1), (_, s2, t2) = trs
        e1, e2 = (-1) ** s1, (-1) ** s2
        big = (
            IntPolynomial.monomial(s1 + t1 + s2 + t2)
            * IntPolynomial((0, 0, 0, 0, 0, 0, 4, 4, 3, 1))
            + (
                e1 * IntPolynomial.monomial(s2 + t2)
                + e2 * IntPolynomial.monomial(s1 + t1)
            )
            * IntPolynomial((0, 0, 0, 0, -1, 1))
            + ((-1) ** (s1 + s2 + 1)) * IntPolynomial((1, 3, 4, 4))
        )
        return _chi_with_unit_factor(t1 + t2 - 2, big * xm1)
    raise UnsupportedChiShape(f"no closed formula for parameters {form}")


def associated_polynomial_formula(form) -> IntPolynomial:
    """det_formula * chi_formula for the covered shapes."""
    return det_formula(form) * chi_formula(form)


def frobenius_data_mod_p(C, p: int) -> tuple[tuple[int, ...], ...]:
    """Invariant factors of xI - S over F_p for S the asymmetry of C."""
    if bareiss_det(C) % p == 0:
        raise ValueError(f"{p} divides the Cartan determinant")
    return invariant_factors_mod(asymmetry_mod(C, p), p)


def asymmetry_similar_mod_p(C1, C2, p: int) -> bool:
    """Whether the asymmetry matrices are similar over the field F_p."""
    return frobenius_data_mod_p(C1, p) == frobenius_data_mod_p(C2, p)
