# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from fractions import Fraction
from itertools import product

import pytest

from howefock.core import ContextError, HoweContext, InadmissibleError, ShapeError
from howefock.oscillator import (
    AlgebraElement,
    SuperOperator,
    SuperPolynomial,
    box_lambda,
    bracket,
    delta,
    delta_kr,
    delta_lambda,
    delta_star_kr,
    delta_star_lambda,
    dual_vanishing_identity,
    fock_generators,
    gram_matrix,
    hermitian_form,
    is_diagonal_positive,
    monomials,
    phi,
    phi_combination,
    sigma,
    supercommutator,
)
from howefock.commands.oracle.checks import CHECKS
from howefock.representations import CharacterContext


def gen(gens, pos):
    return SuperPolynomial.generator(gens, pos)


def all_elements(ctx):
    out = [AlgebraElement.e(i, j) for i in range(1, ctx.d + 1) for j in range(1, ctx.d + 1)]
    out += [AlgebraElement.E(a, b) for a in range(1, ctx.super_rank + 1) for b in range(1, ctx.super_rank + 1)]
    return out


def basis_up_to(ctx, degree):
    gens = fock_generators(ctx)
    return [SuperPolynomial.monomial(gens, exp) for k in range(degree + 1) for exp in monomials(ctx, k)]


def test_fermions_anticommute(ones):
    gens = fock_generators(ones)
    a, b = gen(gens, gens.eta(1, 1)), gen(gens, gens.zeta(1, 2))
    assert a * b == -(b * a)
    assert (a * a).is_zero()
    x = gen(gens, gens.x(1, 1))
    assert (x * x).leading()[1] == 1
    assert x * a == a * x


def test_polynomial_text(ones):
    gens = fock_generators(ones)
    poly = gen(gens, gens.x(1, 1)) * gen(gens, gens.x(1, 1)) * 3 - SuperPolynomial.one(gens)
    assert poly.to_text() == "3*(x1^1)^2 - 1"


def test_box_lambda(ones):
    gens = fock_generators(ones)
    expected = gen(gens, gens.zeta(1, 2)) * gen(gens, gens.x(1, 1))
    assert box_lambda((1, -1), ones) == expected
    assert box_lambda((0, 0), ones) == SuperPolynomial.one(gens)


def test_box_lambda_inadmissible(ones):
    with pytest.raises(InadmissibleError):
        box_lambda((2, 2), ones)


def test_delta_lambda(ones):
    gens = fock_generators(ones)
    x11 = gen(gens, gens.x(1, 1))
    assert delta_lambda((2, 0), ones) == x11 * x11
    assert delta_lambda((1, 1), ones) == delta_kr(1, 2, ones)
    with pytest.raises(InadmissibleError):
        delta_lambda((2, 2), ones)


def test_delta_star_lambda(ones):
    gens = fock_generators(ones)
    z1, z2 = gen(gens, gens.zeta(1, 1)), gen(gens, gens.zeta(1, 2))
    assert delta_star_lambda((0, -2), ones) == z2 * gen(gens, gens.y(1, 2))
    assert delta_star_lambda((-1, -1), ones) == z2 * z1
    with pytest.raises(ShapeError):
        delta_star_lambda((1, 0), ones)


def test_delta_kr(ones):
    gens = fock_generators(ones)
    x1, x2 = gen(gens, gens.x(1, 1)), gen(gens, gens.x(1, 2))
    e1, e2 = gen(gens, gens.eta(1, 1)), gen(gens, gens.eta(1, 2))
    assert delta_kr(1, 2, ones) == x1 * e2 - x2 * e1


def test_delta_and_delta_star_ranges(ones):
    with pytest.raises(ContextError):
        delta(2, ones)
    with pytest.raises(ContextError):
        delta_kr(1, 1, ones)
    with pytest.raises(ContextError):
        delta_star_kr(2, 1, ones)


def test_canonical_anticommutator(ones):
    gens = fock_generators(ones)
    pos = gens.eta(1, 1)
    mul = SuperOperator(gens, [(Fraction(1), (("mul", pos),))])
    der = SuperOperator(gens, [(Fraction(1), (("der", pos),))])
    anti = supercommutator(mul, der)
    samples = [
        SuperPolynomial.one(gens),
        gen(gens, pos) * gen(gens, gens.x(1, 2)),
        gen(gens, gens.zeta(1, 1)) * gen(gens, pos),
        gen(gens, gens.eta(1, 2)) * gen(gens, gens.y(1, 1)),
    ]
    for poly in samples:
        assert anti.apply(poly) == poly


def test_hermitian_form(ones):
    gens = fock_generators(ones)
    x = gen(gens, gens.x(1, 1))
    assert hermitian_form(x * x, x * x) == 2
    assert hermitian_form(x, gen(gens, gens.y(1, 1))) == 0
    eta = gen(gens, gens.eta(1, 1))
    assert hermitian_form(eta * x, eta * x) == 1


def test_gram_matrix_is_diagonal_positive(ones):
    layer = [SuperPolynomial.monomial(fock_generators(ones), exp) for exp in monomials(ones, 2)]
    assert is_diagonal_positive(gram_matrix(layer))


def test_monomials(ones_d1):
    assert len(monomials(ones_d1, 2)) == 8
    assert all(sum(exp) == 2 for exp in monomials(ones_d1, 2))
    with pytest.raises(ContextError):
        monomials(ones_d1, -1)


def test_sigma_is_an_involution(ones):
    for element in all_elements(ones):
        sign, image = sigma(element, ones)
        back_sign, back = sigma(image, ones)
        assert back == element
        assert sign * back_sign == 1


def _homomorphism_holds(ctx, degree):
    basis = basis_up_to(ctx, degree)
    elements = all_elements(ctx)
    for x, y in product(elements, elements):
        left = supercommutator(phi(x, ctx), phi(y, ctx))
        right = phi_combination(bracket(x, y, ctx), ctx)
        for poly in basis:
            if left.apply(poly) != right.apply(poly):
                return False
    return True


def test_phi_is_a_homomorphism(ones_d1):
    assert _homomorphism_holds(ones_d1, 2)


@pytest.mark.slow
def test_phi_is_a_homomorphism_d2(ones):
    assert _homomorphism_holds(ones, 2)


def test_dual_vanishing_identity():
    ctx = HoweContext(p=2, q=1, d=2)
    for r, s in [(1, 1), (2, 1), (2, 2)]:
        assert dual_vanishing_identity(r, s, ctx).is_zero()
    assert not dual_vanishing_identity(1, 2, ctx).is_zero()
    with pytest.raises(ContextError):
        dual_vanishing_identity(1, 1, HoweContext(p=1, d=2))


def test_unitarity_check():
    ctx = CharacterContext(m=1, n=1, p=1, q=1, d=1, trunc=2)
    assert CHECKS["unitarity"](ctx, None, 1)["passed"]


def test_star_structure_matches_sigma(ones_d1):
    basis = basis_up_to(ones_d1, 2)
    for element in all_elements(ones_d1):
        sign, image = sigma(element, ones_d1)
        adjoint = phi(element, ones_d1).omega()
        expected = phi(image, ones_d1) * sign
        assert all(adjoint.apply(poly) == expected.apply(poly) for poly in basis)
