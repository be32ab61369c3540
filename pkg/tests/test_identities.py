import json

import pytest
from hypothesis import given, settings, strategies as st

from sl3coh.cohomology import cohomology
from sl3coh.gendim import (
    CycloElement,
    LaurentPoly,
    derivative_eval,
    quantum_eval,
    specialize_generic,
    weyl_denominator,
    weyl_generic_dimension,
)
from sl3coh.identities import (
    ALIASES,
    CHECKS,
    PreconditionError,
    family_weight,
    h_derivative_closed_forms,
    literal_alpha_formula_report,
    p2_method_check,
    p2_method_eligible,
    predicted_q3_zeros,
    q3_zero_parameters,
    qr_values,
    resolve,
    st_values,
    theta,
    verify,
    verify_many,
)
from sl3coh.weights import Weight

from oracles import sympy_zeta_residue

odd = st.sampled_from([3, 5, 7])
coord = st.integers(-25, 25)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_fundamental_line_values(p):
    for x in range(1, p):
        assert st_values(1, (x, -x - 1), p).S == x * (x + 1) // 2
        assert qr_values(3, 1, (x, -x - 1), p).Q == -x * (x + 1) // 2
    for r in range(1, 3 * p + 1):
        rec = st_values(1, (r, -r - 1), p)
        assert rec.T - rec.S == 1 and rec.S > 0


def test_figure_values():
    rec = st_values(1, (3, -4), 5)
    assert (rec.S, rec.T) == (6, 7)


@given(coord, coord, odd, st.integers(0, 3))
@settings(max_examples=40)
def test_symmetries(r, s, p, i):
    a, b = st_values(i, (r, s), p), st_values(i, (s, r), p)
    assert a.phi == b.psi
    assert a.phi + a.psi == a.S + a.T
    assert (a.S, a.T) == (b.S, b.T)


@pytest.mark.parametrize("p", [3, 5])
def test_quantum_dimensions_of_scaled_weights(p):
    """S and T equal quantum dimensions at ``(pr, ps)`` and ``(p-2+pr, p-2+ps)``."""
    for r in range(-4, 5):
        for s in range(-4, 5):
            for i in range(4):
                rec = st_values(i, (r, s), p)
                for lam, value in (((p * r, p * s), rec.S),
                                   ((p - 2 + p * r, p - 2 + p * s), rec.T)):
                    f = specialize_generic(cohomology(lam, "Plain", p).chars[i])
                    assert sympy_zeta_residue(f.terms(), p) == [value] + [0] * (p - 2)


def test_q3_examples_at_seven():
    assert qr_values(3, 1, (27, -22), 7).Q == 0
    assert qr_values(3, 2, (27, -22), 7).Q != 0
    assert qr_values(3, 1, (27, -22), 7).R == 7 * 6 * 7 // 2
    assert q3_zero_parameters(7) == [3]
    assert q3_zero_parameters(5) == [] and q3_zero_parameters(3) == []
    assert Weight(27, -22) in predicted_q3_zeros(7, 60)


def test_qr_rejects_bad_family():
    with pytest.raises(ValueError):
        qr_values(4, 1, (0, 0), 5)
    with pytest.raises(ValueError):
        family_weight(0, 0, (0, 0), 5)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_theta_is_integral_and_matches_increment(p):
    for x in range(0, 2 * p):
        tail = (x, -x - 1)
        for a in range(p):
            t = theta(1, tail, a, p)
            lam = (a + p * x, p - 1 - a - p * (x + 1))
            cur, low = st_values(1, lam, p), st_values(1, tail, p)
            assert (cur.S, cur.T) == (low.S + t, low.T + t)
            assert qr_values(3, 1, lam, p).Q == -t + p * qr_values(3, 1, tail, p).Q


def _f(p, a):
    sym = LaurentPoly.sym
    return {1: sym(a + 1) * sym(p + a + 1),
            2: sym(p - 1 - a) * sym(2 * p - 1 - a),
            3: sym(a + 1) * sym(p - 1 - a)}


@pytest.mark.parametrize("p", [3, 5, 7])
def test_subregular_quotients(p):
    P = LaurentPoly.sym(p)
    g = weyl_denominator()
    for a in range(p - 1):
        f = _f(p, a)
        weights = {1: (p - 1, a), 2: (p - 2 - a, p - 1), 3: (a, p - 2 - a)}
        for j in (1, 2, 3):
            assert weyl_generic_dimension(weights[j]) == (P * f[j]).exact_divide(g)
        z = lambda k: CycloElement.zeta_power(p, k)
        F, E = z(a + 1) - z(-a - 1), z(a) + z(-a - 2)
        vals = [quantum_eval(f[j], p) for j in (1, 2, 3)]
        assert vals[0] == vals[1] == -vals[2]
        for j, c in ((1, 2 * a + 2 + p), (2, 2 * a + 2 - 3 * p), (3, -(2 * a + 2 - p))):
            assert derivative_eval(f[j], 1, p) == c * F * E


@given(st.integers(-3, 3), st.integers(-3, 3), st.sampled_from([3, 5]),
       st.sampled_from([1, 2, 3]), st.integers(0, 3), st.data())
@settings(max_examples=30)
def test_closed_forms_match_exact_derivatives(r, s, p, j, i, data):
    a = data.draw(st.integers(0, p - 2))
    hd = h_derivative_closed_forms(j, i, a, (r, s), p)
    assert hd.closed == hd.exact
    assert hd.exact[0].is_zero() == (qr_values(j, i, (r, s), p).Q == 0)


def test_closed_form_argument_checks():
    with pytest.raises(ValueError):
        h_derivative_closed_forms(1, 1, 0, (0, 0), 2)
    with pytest.raises(ValueError):
        h_derivative_closed_forms(1, 1, 5, (0, 0), 5)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_steinberg_derivatives_vanish(p):
    f = weyl_generic_dimension((p - 1, p - 1))
    assert derivative_eval(f, 1, p).is_zero() and derivative_eval(f, 2, p).is_zero()


PASSING_AT_THREE = [name for name in CHECKS if name != "r1-monotonicity"]


@pytest.mark.parametrize("name", PASSING_AT_THREE)
def test_check_passes_at_three(name):
    box = min(CHECKS[name].default_box(3), 6)
    rep = verify(name, 3, box)
    assert rep.passed, rep.counterexamples
    assert rep.tested > 0 or name in ("q3-zero-set", "r3-inductive-step", "r3-nonvanishing")


def test_r1_monotonicity_counterexample_is_reported():
    rep = verify("r1-monotonicity", 3, 6)
    assert not rep.passed
    witness = rep.counterexamples[0]
    assert {"weight", "tail", "i", "case"} <= set(witness)
    lam, tail, i = witness["weight"], witness["tail"], witness["i"]
    assert abs(qr_values(1, i, tail, 3).R) > abs(qr_values(1, i, lam, 3).R)
    assert qr_values(1, 2, (-14, 6), 3).R == 0
    assert qr_values(1, 2, (-5, 2), 3).R == -2
    assert qr_values(1, 2, (-14, 6), 3).Q != 0


def test_aliases_resolve():
    for alias, name in ALIASES.items():
        assert resolve(alias) == name
    with pytest.raises(KeyError):
        resolve("9.9")
    with pytest.raises(ValueError):
        verify("5.3", 2)
    with pytest.raises(ValueError):
        verify("5.3", 3, -1)


def test_report_json_schema():
    rep = verify("5.5", 3, 2)
    obj = json.loads(json.dumps(rep.to_json()))
    assert {"prop", "p", "box", "cases", "counterexamples"} <= set(obj)
    assert [c["name"] for c in obj["cases"]][0] == "case 1: x=0"
    assert all(set(c) == {"name", "tested", "passed"} for c in obj["cases"])


def test_case_family_sizes():
    assert len([c for c in verify("5.3", 5, 1).cases if c.name.startswith("case")]) == 14
    assert len([c for c in verify("5.4", 5, 1).cases if c.name.startswith("case")]) == 12
    assert len(verify("5.5", 5, 1).cases) == 5


def test_verify_many_is_independent_of_workers():
    a = [r.to_json() for r in verify_many(["5.5", "8.2"], [3, 5], box=2, jobs=1)]
    b = [r.to_json() for r in verify_many(["5.5", "8.2"], [3, 5], box=2, jobs=2)]
    assert a == b
    names = [r.prop for r in verify_many(["all"], [2], box=2)]
    assert names == ["p2-method"]


@pytest.mark.parametrize("p", [2, 3])
def test_p2_method_examples(p):
    q = p
    for a in range(q):
        for b in range(q):
            lam = (a + q, b - 2 * q)
            assert p2_method_eligible(lam, 1, p)
            assert p2_method_check(lam, 1, p).passed


def test_p2_method_rejects_ineligible():
    with pytest.raises(PreconditionError):
        p2_method_check((0, 0), 1, 2)
    with pytest.raises(PreconditionError):
        p2_method_check((2, -4), 0, 2)


def test_p2_method_mod_three_rows():
    rep = verify("p2-method", 3, 12)
    names = {c.name: c.tested for c in rep.cases}
    assert rep.passed
    assert names.get("D = +-1 mod 3 in the 0-block", 0) > 0


def test_literal_alpha_formula_breaks_euler_identity():
    out = literal_alpha_formula_report(5, 15)
    assert out["corrected"]["failed"] == 0
    assert out["literal"]["failed"] > 0 and out["literal"]["first_failure"] is not None
