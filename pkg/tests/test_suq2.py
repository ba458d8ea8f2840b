import json
import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgelfand.dual import B_functional, C_functional
from qgelfand.scalars import I, ONE, ZERO, GaussianRational
from qgelfand.suq2 import UNIT, AlgebraElement, SUq2, Tensor, key_degree, key_name, monomials
from qgelfand.suq2_checks import verify_corep, verify_haar, verify_hopf, verify_involutions

F = Fraction
Q = F(1, 4)  # q at s = 1/2

keys4 = st.sampled_from(monomials(4))
keys3 = st.sampled_from(monomials(3))


def test_monomial_counts():
    assert len(monomials(0)) == 1
    assert len(monomials(1)) == 5
    assert len(monomials(4)) == 55
    assert len(monomials(6)) == 140
    assert all(key_degree(k) <= 4 for k in monomials(4))
    assert len(set(monomials(6))) == 140


def test_key_names():
    assert key_name(UNIT) == "1"
    assert key_name((2, 1, 0)) == "alpha^2*beta"
    assert key_name((-1, 0, 3)) == "delta*gamma^3"


def test_defining_relations(alg):
    a, b, g, d = alg.alpha, alg.beta, alg.gamma, alg.delta
    q = alg.q
    assert a * d == alg.one + b * g * q
    assert d * a == alg.one + b * g / q
    assert g * b == b * g
    assert a * b == b * a * q
    assert a * g == g * a * q
    assert b * d == d * b * q
    assert g * d == d * g * q
    assert a * d - b * g * q == d * a - b * g / q == alg.one


def test_unit(alg):
    x = alg.element({(2, 1, 0): GaussianRational(3, 1), (-1, 0, 2): ONE})
    assert alg.one * x == x == x * alg.one


def test_associativity_on_monomial_triples(alg):
    keys = monomials(4)
    basis = alg.basis
    for x, y, z in product(keys, repeat=3):
        if key_degree(x) + key_degree(y) + key_degree(z) > 4:
            continue
        assert (basis(x) * basis(y)) * basis(z) == basis(x) * (basis(y) * basis(z)), (x, y, z)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32))
def test_associativity_random_elements(alg, seed):
    rng = random.Random(seed)
    a, b, c = (alg.random_element(rng, 3) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_comultiplication_examples(alg):
    a, b, g, d = alg.alpha, alg.beta, alg.gamma, alg.delta
    assert alg.comultiply(a) == alg.tensor(a, a) + alg.tensor(b, g)
    assert alg.comultiply(b) == alg.tensor(a, b) + alg.tensor(b, d)
    assert alg.comultiply(g) == alg.tensor(g, a) + alg.tensor(d, g)
    assert alg.comultiply(d) == alg.tensor(g, b) + alg.tensor(d, d)
    assert alg.comultiply(alg.one) == Tensor(alg, 2, {(UNIT, UNIT): ONE})
    assert alg.comultiply(b * g) == alg.comultiply(b) * alg.comultiply(g)


def test_structure_map_examples(alg):
    a, b, g, d = alg.alpha, alg.beta, alg.gamma, alg.delta
    assert alg.structure_map("counit", b) == 0
    assert alg.structure_map("counit", a ** 5) == 1
    assert alg.structure_map("antipode", b) == b * (-1 / Q)
    assert alg.structure_map("antipode", g) == g * (-Q)
    assert alg.structure_map("star", b) == g * (-Q)
    assert alg.structure_map("second-involution", b) == -g
    assert alg.structure_map("bar", a) == d
    with pytest.raises(ValueError):
        alg.structure_map("transpose", a)


def test_star_is_antilinear(alg):
    x = alg.alpha * I
    assert alg.star(x) == alg.delta * (-I)
    assert alg.bar(alg.beta * I) == alg.gamma * I


def test_haar_examples(alg):
    a, d = alg.alpha, alg.delta
    assert alg.haar(alg.one) == 1
    assert alg.haar(a) == 0
    assert alg.haar(a * d) == 1 / (1 + Q * Q)
    assert alg.haar(a * d) == F(16, 17)


def test_f_z_examples(alg):
    a, d = alg.alpha, alg.delta
    for z in [F(-3, 2), F(1, 2), 1, 2]:
        assert alg.f_z_eval(z, a) == alg.qparam.qpow(-z)
        assert alg.f_z_eval(z, d) == alg.qparam.qpow(z)
        assert alg.f_z_eval(z, alg.beta) == 0
    assert alg.f_z_eval(1, a * d) == 1
    for k in monomials(3):
        assert alg.f_z(0)(k) == alg.counit_key(k)
    with pytest.raises(ValueError):
        alg.f_z(F(1, 3))


def test_act_examples(alg):
    a = alg.alpha
    for z in [F(1, 2), -1, 2]:
        assert alg.left(alg.f_z(z), a) == a * alg.qparam.qpow(-z)
    eps = alg.f_z(0)
    x = alg.element({(1, 1, 1): ONE, (-2, 0, 0): GaussianRational(0, 2)})
    assert alg.left(eps, x) == x == alg.right(x, eps)
    assert alg.left(B_functional(alg), alg.beta) == a
    with pytest.raises(ValueError):
        alg.act("up", eps, x)


def test_biinvariance_examples(alg):
    gg = alg.gamma * alg.star(alg.gamma)
    assert gg == alg.beta * alg.gamma * (-1 / Q)
    assert alg.biinvariant_u1(alg.one)
    assert not alg.biinvariant_u1(alg.alpha)
    assert alg.biinvariant_u1(gg)
    assert alg.biinvariant_u1(gg * gg + gg * 3)
    assert not alg.biinvariant_u1(alg.alpha * alg.beta)


def test_action_module_laws(alg):
    fs = [alg.f_z(F(1, 2)), alg.f_z(-1), B_functional(alg), C_functional(alg)]
    for f, g in product(fs, repeat=2):
        fg = f * g
        for k in monomials(3):
            x = alg.basis(k)
            assert alg.left(fg, x) == alg.left(f, alg.left(g, x))
            assert alg.right(x, fg) == alg.right(alg.right(x, f), g)
            assert f(alg.left(g, x)) == fg(x) == g(alg.right(x, f))


@pytest.mark.parametrize("z", [F(-1), F(-1, 2), F(1, 2), F(3, 2)])
def test_f_of_star_identity(alg, z):
    f = alg.f_z(z)
    sf_star = f.antipode().star()
    for k in monomials(4):
        assert f(alg.star(alg.basis(k))) == sf_star(k).conjugate()


def test_u_is_unitary_corep(alg):
    assert verify_corep(alg, alg.u) == {"comultiplication": True, "counit": True, "unitary": True}


def test_json_roundtrip(alg):
    x = alg.element({(2, 0, 1): GaussianRational(F(1, 2), -3), (-1, 1, 0): ONE})
    items = x.to_json_list()
    assert items[0].keys() == {"k", "m", "n", "coeff"}
    assert alg.from_json_list(json.loads(json.dumps(items))) == x


def test_random_element_is_deterministic(alg):
    a = [alg.random_element(random.Random(7), 4) for _ in range(2)]
    assert a[0] == a[1]


def test_verify_hopf_generators(alg):
    assert verify_hopf(alg, degree=1).passed


def test_verify_hopf_degree_four(alg):
    report = verify_hopf(alg, degree=4)
    assert report.passed, report.failures()
    assert report.item("coassociativity").window == 55


def test_corrupted_antipode_is_caught():
    alg = SUq2(F(1, 2))
    alg.override("antipode", "beta", alg.beta * (-alg.q))
    report = verify_hopf(alg, degree=1)
    assert not report.passed
    left = report.item("antipode-left")
    assert left.status == "fail"
    assert left.witness == ["beta"]


def test_corrupted_star_is_caught():
    alg = SUq2(F(1, 2))
    alg.override("star", "beta", alg.gamma)
    assert not verify_hopf(alg, degree=1).passed


def test_involution_examples(alg):
    half, mhalf = alg.f_z(F(1, 2)), alg.f_z(F(-1, 2))
    b = alg.beta
    assert alg.sandwich(half, alg.star(b), mhalf) == -alg.gamma == alg.bar(b)
    a = alg.alpha
    assert alg.antipode(alg.antipode(a)) == a == alg.sandwich(alg.f_z(-1), a, alg.f_z(1))


@pytest.mark.parametrize("s", [F(1, 2), F(3, 4)])
def test_haar_of_alpha_alpha_bar(s):
    alg = SUq2(s)
    q = alg.q
    value = alg.haar(alg.alpha * alg.bar(alg.alpha))
    assert value == 1 / (1 + q * q)
    assert value == alg.f_z_eval(F(1, 2), alg.alpha) ** 2 / (q + 1 / q)


def test_verify_involutions(alg):
    report = verify_involutions(alg, degree=3, pairs=10)
    assert report.passed, report.failures()
    assert report.item("u^* unitary (recorded only)").status == "info"


def test_verify_haar_small(alg):
    report = verify_haar(alg, degree=4, samples=20, sample_degree=3)
    assert report.passed, report.failures()


def test_other_s_values():
    alg = SUq2(F(2, 3))
    assert verify_hopf(alg, degree=2).passed
    assert verify_involutions(alg, degree=2, pairs=5).passed
