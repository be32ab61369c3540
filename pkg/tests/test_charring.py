import json

import pytest
from hypothesis import given, strategies as st

from sl3coh.charring import (
    N_ALPHA,
    N_BETA,
    Character,
    dual,
    frobenius_twist,
    is_w_invariant,
    multiply,
    simple_character,
    simple_dimension,
    tau,
    weyl_character,
    weyl_dimension,
)
from sl3coh.weights import WeylElement, dot_action

from oracles import kostant_weyl_character

small = st.integers(min_value=-6, max_value=6)
characters = st.dictionaries(st.tuples(small, small), st.integers(-9, 9), max_size=6).map(
    Character.from_dict)


def e(r, s, m=1):
    return Character.monomial((r, s), m)


def test_monomial_products():
    c = e(2, -1) + 3 * e(0, 4)
    assert multiply(e(0, 0), c) == c
    assert multiply(e(1, 0), e(0, 1)) == e(1, 1)
    assert N_ALPHA * N_ALPHA == e(0, 0) + 2 * e(-2, 1) + e(-4, 2)


def test_no_zero_multiplicities_stored():
    c = e(1, 0) + e(3, 3) - e(1, 0)
    assert c.to_dict() == {(3, 3): 1}
    assert (e(1, 0) - e(1, 0)).is_zero()
    assert (e(1, 0) - e(1, 0)) == Character.zero()


@given(characters, characters, characters)
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b).dim() == a.dim() + b.dim()
    assert (a * b).dim() == a.dim() * b.dim()


@given(characters)
def test_product_against_dictionary_convolution(c):
    other = e(1, -1) + 2 * e(0, 3)
    expect = {}
    for w1, m1 in c.to_dict().items():
        for w2, m2 in other.to_dict().items():
            key = (w1[0] + w2[0], w1[1] + w2[1])
            expect[key] = expect.get(key, 0) + m1 * m2
    expect = {k: v for k, v in expect.items() if v}
    assert (c * other).to_dict() == expect


@given(characters, st.sampled_from([2, 3, 5]))
def test_twist(c, p):
    t = frobenius_twist(c, p)
    assert t.dim() == c.dim()
    assert t.to_dict() == {(p * r, p * s): m for (r, s), m in c.to_dict().items()}


def test_twist_example():
    assert frobenius_twist(e(1, -2), 5) == e(5, -10)


@given(characters, characters)
def test_tau_is_involutive_automorphism(a, b):
    assert tau(tau(a)) == a
    assert tau(a * b) == tau(a) * tau(b)


def test_tau_and_dual_examples():
    assert tau(e(2, 5)) == e(5, 2)
    assert tau(N_ALPHA) == N_BETA
    assert dual(e(1, 0)) == e(-1, 0)
    assert dual(weyl_character((1, 0))) == weyl_character((0, 1))


@given(characters)
def test_dual_preserves_dimension(c):
    assert dual(c).dim() == c.dim()
    assert dual(dual(c)) == c


@given(characters)
def test_json_round_trip(c):
    obj = json.loads(json.dumps(c.to_json()))
    assert Character.from_json(obj) == c
    assert obj == sorted(obj, key=lambda x: tuple(x["weight"]))


def test_weyl_character_examples():
    assert weyl_character((0, 0)) == e(0, 0)
    assert weyl_character((1, 0)) == e(1, 0) + e(-1, 1) + e(0, -1)
    for s in range(-4, 5):
        assert weyl_character((-1, s)).is_zero()
    assert weyl_character((-2, 1)) == -weyl_character((0, 0))


@pytest.mark.parametrize("a", range(0, 9))
@pytest.mark.parametrize("b", range(0, 9))
def test_weyl_character_against_kostant(a, b):
    ch = weyl_character((a, b))
    assert ch.to_dict() == kostant_weyl_character(a, b)
    assert ch.dim() == (a + 1) * (b + 1) * (a + b + 2) // 2


@given(st.integers(-12, 12), st.integers(-12, 12))
def test_weyl_character_sign_rule(r, s):
    base = weyl_character((r, s))
    for w in WeylElement:
        assert weyl_character(dot_action(w, (r, s))) == w.det * base
    assert base.dim() == weyl_dimension((r, s))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_simple_characters(p):
    assert simple_character(p - 1, p - 1, p).dim() == p ** 3
    for a in range(p):
        for b in range(p):
            ch = simple_character(a, b, p)
            assert all(m > 0 for _, m in ch.items())
            assert is_w_invariant(ch)
            expect = (a + 1) * (b + 1) * (a + b + 2) // 2
            if a + b >= p - 1:
                expect -= (p - 1 - a) * (p - 1 - b) * (2 * p - 2 - a - b) // 2
            assert ch.dim() == expect == simple_dimension(a, b, p)


def test_adjoint_at_five():
    assert simple_character(1, 1, 5).dim() == 8


def test_simple_rejects_unrestricted():
    with pytest.raises(ValueError):
        simple_character(5, 0, 5)
    with pytest.raises(ValueError):
        simple_character(-1, 0, 3)


@pytest.mark.parametrize("p", [2, 3])
def test_steinberg_tensor_dimension(p):
    for a, b, c, d in [(0, 1, 1, 0), (p - 1, 0, 1, 1), (1, 1, p - 1, p - 1)]:
        prod = simple_character(a, b, p) * frobenius_twist(simple_character(c, d, p), p)
        assert prod.dim() == simple_dimension(a, b, p) * simple_dimension(c, d, p)
