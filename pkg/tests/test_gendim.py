import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sl3coh.charring import Character, dual, frobenius_twist, weyl_character
from sl3coh.cohomology import cohomology
from sl3coh.gendim import (
    CycloElement,
    LaurentPoly,
    d_phi_p,
    derivative_at_one,
    derivative_eval,
    psi_order,
    psi_poly,
    quantum_eval,
    specialize_generic,
    weyl_denominator,
    weyl_generic_dimension,
)

from oracles import sympy_psi_order, sympy_zeta_residue, zeta_numeric

primes = st.sampled_from([2, 3, 5, 7])
laurent = st.dictionaries(st.integers(-12, 12), st.integers(-20, 20), max_size=6).map(LaurentPoly)
small = st.integers(-5, 5)
characters = st.dictionaries(st.tuples(small, small), st.integers(-9, 9), max_size=6).map(
    Character.from_dict)


def test_specialize_examples():
    assert specialize_generic(Character.monomial((0, 0))) == LaurentPoly.const(1)
    assert specialize_generic(weyl_character((1, 0))) == LaurentPoly({2: 1, 0: 1, -2: 1})


@given(characters, characters)
def test_specialize_is_multiplicative(a, b):
    assert specialize_generic(a * b) == specialize_generic(a) * specialize_generic(b)
    assert specialize_generic(a + b) == specialize_generic(a) + specialize_generic(b)


@given(characters, primes)
def test_specialize_dual_and_twist(c, p):
    f = specialize_generic(c)
    assert specialize_generic(dual(c)) == f.substitute_power(-1)
    assert specialize_generic(frobenius_twist(c, p)) == f.substitute_power(p)
    assert f.at_one() == c.dim()


@pytest.mark.parametrize("r", range(-6, 7))
@pytest.mark.parametrize("s", range(-6, 7))
def test_weyl_generic_dimension_two_routes(r, s):
    f = weyl_generic_dimension((r, s))
    assert f == specialize_generic(weyl_character((r, s)))


def test_weyl_generic_examples():
    assert weyl_generic_dimension((0, 0)) == LaurentPoly.const(1)
    assert weyl_generic_dimension((1, 0)) == LaurentPoly({2: 1, 0: 1, -2: 1})
    assert weyl_generic_dimension((3, 4)).at_one() == 4 * 5 * 9 // 2
    assert weyl_denominator() == LaurentPoly.sym(1) ** 2 * LaurentPoly.sym(2)


@given(laurent, laurent)
def test_exact_division_round_trip(f, g):
    if g.is_zero():
        return
    assert (f * g).exact_divide(g) == f


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        LaurentPoly({0: 1, 1: 1}).exact_divide(LaurentPoly({0: 1, 2: 1}))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_psi_order_examples(p):
    assert psi_order(psi_poly(p), p) == 1
    assert psi_order(weyl_generic_dimension((p - 1, p - 1)), p) == 3
    with pytest.raises(ValueError):
        psi_order(LaurentPoly(), p)


def test_psi_order_is_blind_at_two():
    """Generic dimensions only have even exponents, so 1 + t never divides them."""
    assert psi_order(weyl_generic_dimension((1, 1)), 2) == 0
    assert psi_order(psi_poly(2), 2) == 1


@pytest.mark.parametrize("p", [3, 5, 7])
def test_regular_dominant_has_order_zero(p):
    for a in range(2 * p):
        for b in range(2 * p):
            if (a + 1) % p and (b + 1) % p and (a + b + 2) % p:
                assert psi_order(weyl_generic_dimension((a, b)), p) == 0


@given(laurent, primes, st.integers(0, 3))
def test_psi_order_against_sympy(f, p, k):
    f = f * psi_poly(p) ** k
    if f.is_zero():
        return
    assert psi_order(f, p) == sympy_psi_order(f.terms(), p)


@given(laurent, primes)
def test_quantum_eval_against_sympy(f, p):
    got = quantum_eval(f, p)
    assert list(got.coords) == [Fraction(int(c.p), int(c.q)) for c in sympy_zeta_residue(f.terms(), p)]


@given(laurent, primes)
def test_order_and_vanishing_agree(f, p):
    if f.is_zero():
        return
    order = psi_order(f, p)
    assert quantum_eval(f, p).is_zero() == (order >= 1)
    assert f.at_one() % (p ** order) == 0


@pytest.mark.parametrize("p", [3, 5, 7])
def test_quantum_dimension_anchors(p):
    h0 = lambda lam: specialize_generic(cohomology(lam, "Plain", p).chars[0])
    assert quantum_eval(h0((0, 0)), p) == 1
    assert quantum_eval(h0((p - 2, p - 2)), p) == -1
    assert quantum_eval(weyl_generic_dimension((p - 1, p - 1)), p).is_zero()


@pytest.mark.parametrize("p", [3, 5, 7])
def test_derivative_examples(p):
    f = LaurentPoly({p: 1, -p: -1})
    assert derivative_eval(f, 1, p) == 2 * p * CycloElement.zeta_power(p, -1)
    assert derivative_eval(f, 2, p) == -2 * p * CycloElement.zeta_power(p, -2)


@given(laurent, primes)
def test_twisted_derivative_chain_rule(g, p):
    """``(g(t^p))'(zeta) = p zeta^-1 g'(1)`` and ``g(t^p)(zeta) = g(1)``."""
    expect = p * g.derivative().at_one() * CycloElement.zeta_power(p, -1)
    assert derivative_eval(g.substitute_power(p), 1, p) == expect
    assert quantum_eval(g.substitute_power(p), p) == g.at_one()


@given(characters, primes)
def test_twisted_module_derivative_vanishes_at_zeta(c, p):
    sym = Character.zero()
    for (a, b), n in c.to_dict().items():
        sym = sym + n * weyl_character((abs(a), abs(b)))
    g = specialize_generic(frobenius_twist(sym, p))
    assert derivative_eval(g, 1, p).is_zero()


@given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(-4, 4)), max_size=5))
def test_invariant_characters_have_flat_derivative_at_one(parts):
    c = Character.zero()
    for a, b, n in parts:
        c = c + n * weyl_character((a, b))
    assert derivative_at_one(specialize_generic(c), 1) == 0


@given(laurent, primes)
def test_derivative_eval_against_numeric_value(f, p):
    exact = derivative_eval(f, 1, p)
    d = f.derivative()
    num = zeta_numeric(d.terms(), p)
    back = zeta_numeric([(k, c) for k, c in enumerate(exact.coords)], p)
    assert abs(num - back) < 1e-6 * (1 + abs(num))


def test_cyclo_field_operations():
    p = 7
    z = CycloElement.zeta_power(p, 1)
    one = CycloElement.const(p, 1)
    acc = CycloElement.const(p, 0)
    for k in range(p):
        acc = acc + CycloElement.zeta_power(p, k)
    assert acc.is_zero()
    x = z + 3 * z * z - one
    assert x * x.inverse() == one
    assert (one / x) * x == one
    with pytest.raises(ZeroDivisionError):
        CycloElement.const(p, 0).inverse()


def test_json_shapes():
    f = LaurentPoly({-2: 1, 0: 1, 2: 1})
    assert json.loads(json.dumps(f.to_json())) == [[-2, 1], [0, 1], [2, 1]]
    x = CycloElement.from_residues(5, [Fraction(1, 2), 0, 0, 0, 0])
    assert x.to_json() == [[1, 2], [0, 1], [0, 1], [0, 1]]


def test_d_phi_p():
    assert d_phi_p(2) == 2
    assert d_phi_p(3) == 0
    assert d_phi_p(7) == 0
    with pytest.raises(ValueError):
        d_phi_p(1)
