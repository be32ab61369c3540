import pytest
from hypothesis import given, strategies as st

from sl3coh.weights import (
    ALPHA,
    BETA,
    RHO,
    ROOTS,
    Regularity,
    Weight,
    WeylElement,
    dominant_representative,
    dot_action,
    on_wall,
    p_adic_expand,
    pairing,
    regularity_class,
    restricted,
    wht,
)

from oracles import WEYL, act

coord = st.integers(min_value=-200, max_value=200)
weights = st.builds(Weight, coord, coord)
primes = st.sampled_from([2, 3, 5, 7, 11])


def test_roots_and_pairings():
    assert pairing(RHO, ALPHA) == pairing(RHO, BETA) == 1
    assert pairing(RHO, ALPHA + BETA) == 2
    assert pairing((4, -7), ALPHA) == 4
    assert pairing((4, -7), BETA) == -7
    assert pairing((4, -7), ALPHA + BETA) == -3
    assert len(ROOTS) == 6


def test_weyl_group_matches_brute_force_matrices():
    mats = {w.matrix for w in WeylElement}
    assert mats == {m for m, _ in WEYL}
    for w in WeylElement:
        det = dict(WEYL)[w.matrix]
        assert w.det == det


def test_weyl_group_is_closed_with_inverses():
    for u in WeylElement:
        assert (u @ u.inverse()) is WeylElement.IDENTITY
        for v in WeylElement:
            assert (u @ v) in WeylElement


def test_dot_action_examples():
    assert dot_action(WeylElement.IDENTITY, (3, -8)) == (3, -8)
    assert dot_action(WeylElement.S_ALPHA, (0, 0)) == (-2, 1)
    for lam in [(0, 0), (3, 5), (-7, 2)]:
        r, s = lam
        assert dot_action(WeylElement.W0, lam) == (-s - 2, -r - 2)


@given(weights)
def test_dot_action_respects_composition(lam):
    for u in WeylElement:
        for v in WeylElement:
            assert dot_action(u @ v, lam) == dot_action(u, dot_action(v, lam))


def test_dominant_representative_examples():
    assert dominant_representative((0, 0)) == (WeylElement.IDENTITY, (0, 0), 1)
    assert dominant_representative((-2, 1)) == (WeylElement.S_ALPHA, (0, 0), -1)
    assert dominant_representative((-1, 5)) is None


@given(weights)
def test_dominant_representative_by_brute_force(lam):
    found = []
    for mat, det in WEYL:
        u = act(mat, (lam[0] + 1, lam[1] + 1))
        if u[0] > 0 and u[1] > 0:
            found.append(((u[0] - 1, u[1] - 1), det))
    rep = dominant_representative(lam)
    if rep is None:
        assert not found
        assert (lam[0] + 1) * (lam[1] + 1) * (lam[0] + lam[1] + 2) == 0
    else:
        assert found == [(rep[1], rep[2])]
        assert dot_action(rep[0], lam) == rep[1]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_regularity_examples(p):
    assert regularity_class((p - 1, p - 1), p).kind is Regularity.STEINBERG
    assert len(regularity_class((p - 1, p - 1), p)) == 6


def test_regularity_of_origin():
    assert regularity_class((0, 0), 5).kind is Regularity.REGULAR
    assert regularity_class((0, 0), 2).kind is Regularity.SUBREGULAR


@given(weights, primes)
def test_regularity_invariant_under_dot_action(lam, p):
    base = regularity_class(lam, p)
    assert len(base) in (0, 2, 6)
    for w in WeylElement:
        other = regularity_class(dot_action(w, lam), p)
        assert other.kind is base.kind
        assert other.roots == frozenset(w.apply(g) for g in base.roots)


@given(weights)
def test_linear_orbit_heights_cancel(lam):
    assert sum(wht(w.apply(lam)) for w in WeylElement) == 0


def test_wht_examples():
    assert wht(ALPHA) == 1
    assert wht((0, 0)) == 0
    assert wht(5 * Weight(3, -8)) == 5 * wht((3, -8))


def test_padic_examples():
    e = p_adic_expand((5, -10), 5)
    assert e.digits == ((0, 0),) and e.tail == (1, -2) and e.k == 1
    e = p_adic_expand((27, -22), 7)
    assert e.digits == ((6, 6),) and e.tail == (3, -4)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_padic_fundamental_line_digits(p):
    for r in range(0, 60):
        e = p_adic_expand((r, -r - 1), p, normalize=False)
        assert all(a + b == p - 1 for a, b in e.digits)
        assert e.reassemble() == (r, -r - 1)


@given(weights, primes, st.booleans())
def test_padic_reassembly(lam, p, normalize):
    r, s = lam
    prod = (r + 1) * (s + 1)
    if prod > 0 or (prod == 0 and r + s < -1):
        with pytest.raises(ValueError):
            p_adic_expand(lam, p, normalize)
        return
    e = p_adic_expand(lam, p, normalize)
    assert e.reassemble() == lam
    assert e.tail.r + e.tail.s == -1
    assert all(restricted(d, p) for d in e.digits)
    if normalize and r + s != -1:
        a, b = e.digits[-1]
        assert a + b != p - 1


def test_padic_rejects_interior_weights():
    with pytest.raises(ValueError):
        p_adic_expand((3, 4), 5)
    with pytest.raises(ValueError):
        p_adic_expand((-3, -4), 5)


def test_on_wall():
    assert on_wall((-1, 7)) and on_wall((5, -1)) and on_wall((3, -5))
    assert not on_wall((3, -6))
