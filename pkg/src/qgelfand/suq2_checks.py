"""Executable checks of the Hopf *-algebra axioms and the second involution."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .reports import Report
from .scalars import ONE, ZERO
from .suq2 import UNIT, SUq2, Tensor, key_degree, key_name, monomials

DEFAULT_SEED = 20260101


def _alg(s_or_alg) -> SUq2:
    return s_or_alg if isinstance(s_or_alg, SUq2) else SUq2(s_or_alg)


def _first(keys, predicate):
    for k in keys:
        if not predicate(k):
            return k
    return None


def _pairs(keys, max_degree):
    for x, y in product(keys, repeat=2):
        if key_degree(x) + key_degree(y) <= max_degree:
            yield x, y


def verify_hopf(s_or_alg, degree: int = 4) -> Report:
    """Hopf *-algebra axioms on every monomial of degree <= ``degree``.

    Covers coassociativity, the counit and antipode laws, multiplicativity of
    ``Delta`` and ``epsilon``, ``(S (x) S) Delta = flip Delta S``, ``S*S* = id``
    and ``Delta`` being a *-homomorphism.
    """
    alg = _alg(s_or_alg)
    keys = monomials(degree)
    report = Report("verify-hopf", {"s": alg.s, "degree": degree})
    basis = alg.basis
    delta = alg.comultiply_key
    n = len(keys)

    def coassoc(k):
        d = delta(k)
        return d.expand_leg(0, delta) == d.expand_leg(1, delta)

    bad = _first(keys, coassoc)
    report.add("coassociativity", bad is None, window=n, witness=_w(bad))

    def counit_law(k):
        d = delta(k)
        return d.contract_leg(0, alg.counit_key) == basis(k) == d.contract_leg(1, alg.counit_key)

    bad = _first(keys, counit_law)
    report.add("counit", bad is None, window=n, witness=_w(bad))

    # Delta and epsilon are unital homomorphisms
    unital = delta(UNIT) == Tensor(alg, 2, {(UNIT, UNIT): ONE}) and alg.counit(alg.one) == ONE
    pairs = list(_pairs(keys, degree))
    bad = None
    for x, y in pairs:
        xy = basis(x) * basis(y)
        if alg.comultiply(xy) != delta(x) * delta(y) or alg.counit(xy) != alg.counit_key(x) * alg.counit_key(y):
            bad = (x, y)
            break
    report.add("delta-counit-homomorphism", unital and bad is None, window=len(pairs), witness=_w(*bad) if bad else None)

    def antipode_left(k):
        return delta(k).map_leg(0, alg.antipode_key).multiply_out() == alg.one * alg.counit_key(k)

    def antipode_right(k):
        return delta(k).map_leg(1, alg.antipode_key).multiply_out() == alg.one * alg.counit_key(k)

    bad = _first(keys, antipode_left)
    report.add("antipode-left", bad is None, window=n, witness=_w(bad))
    bad = _first(keys, antipode_right)
    report.add("antipode-right", bad is None, window=n, witness=_w(bad))

    bad = None
    for x, y in pairs:
        xy = basis(x) * basis(y)
        if alg.antipode(xy) != alg.antipode_key(y) * alg.antipode_key(x):
            bad = (x, y)
            break
    report.add("antipode-antimultiplicative", bad is None, window=len(pairs), witness=_w(*bad) if bad else None)

    def flip_law(k):
        left = delta(k).map_leg(0, alg.antipode_key).map_leg(1, alg.antipode_key)
        return left == alg.comultiply(alg.antipode_key(k)).flip()

    bad = _first(keys, flip_law)
    report.add("(S(x)S)Delta = flip Delta S", bad is None, window=n, witness=_w(bad))

    def s_star(k):
        a = basis(k)
        return alg.antipode(alg.star(alg.antipode(alg.star(a)))) == a

    bad = _first(keys, s_star)
    report.add("S*S* = id", bad is None, window=n, witness=_w(bad))

    def star_involutive(k):
        return alg.star(alg.star(basis(k))) == basis(k)

    bad = _first(keys, star_involutive)
    report.add("star-involutive", bad is None, window=n, witness=_w(bad))

    bad = None
    for x, y in pairs:
        if alg.star(basis(x) * basis(y)) != alg.star(basis(y)) * alg.star(basis(x)):
            bad = (x, y)
            break
    report.add("star-antimultiplicative", bad is None, window=len(pairs), witness=_w(*bad) if bad else None)

    def star_hom(k):
        a = basis(k)
        d_star = delta(k).map_leg(0, lambda x: alg.star(basis(x))).map_leg(1, lambda x: alg.star(basis(x)))
        return alg.comultiply(alg.star(a)) == d_star and alg.counit(alg.star(a)) == alg.counit_key(k).conjugate()

    bad = _first(keys, star_hom)
    report.add("Delta-star-homomorphism", bad is None, window=n, witness=_w(bad))
    return report


def _w(*keys):
    if not keys or keys[0] is None:
        return None
    return [key_name(k) for k in keys]


def verify_involutions(s_or_alg, degree: int = 4, pairs: int = 50, seed: int = DEFAULT_SEED) -> Report:
    alg = _alg(s_or_alg)
    keys = monomials(degree)
    report = Report("verify-involutions", {"s": alg.s, "degree": degree, "pairs": pairs, "seed": seed})
    basis = alg.basis
    f = alg.f_z
    n = len(keys)

    # (i) generator table agrees with f_{1/2} . a* . f_{-1/2}
    half, mhalf = f(Fraction(1, 2)), f(Fraction(-1, 2))
    bad = _first(keys, lambda k: alg.bar(basis(k)) == alg.sandwich(half, alg.star(basis(k)), mhalf))
    report.add("bar = f_1/2 . a* . f_-1/2", bad is None, window=n, witness=_w(bad))

    # (ii) S^2 = f_{-1} . a . f_1
    m1, p1 = f(-1), f(1)
    bad = _first(keys, lambda k: alg.antipode(alg.antipode_key(k)) == alg.sandwich(m1, basis(k), p1))
    report.add("S^2 = f_-1 . a . f_1", bad is None, window=n, witness=_w(bad))

    # (iii) h(ab) = h(b (f_1 . a . f_1)) on seeded random pairs
    rng = random.Random(seed)
    bad = None
    for i in range(pairs):
        a = alg.random_element(rng, degree)
        b = alg.random_element(rng, degree)
        if alg.haar(a * b) != alg.haar(b * alg.sandwich(p1, a, p1)):
            bad = {"sample": i, "a": repr(a), "b": repr(b)}
            break
    report.add("h(ab) = h(b (f_1 . a . f_1))", bad is None, window=pairs, witness=bad)

    # (iv) f_z f_z' = f_{z+z'}
    zs = [Fraction(j, 2) for j in range(-4, 5)]
    fz = {z: f(z) for z in zs}
    fsum = {z: f(z) for z in [Fraction(j, 2) for j in range(-8, 9)]}
    bad = None
    for z1, z2 in product(zs, repeat=2):
        k = (fz[z1] * fz[z2]).agrees_with(fsum[z1 + z2], keys)
        if k is not None:
            bad = {"z": str(z1), "z'": str(z2), "key": key_name(k)}
            break
    report.add("f_z f_z' = f_{z+z'}", bad is None, window=len(zs) ** 2 * n, witness=bad)
    report.add("f_0 = counit", f(0).agrees_with(_counit_functional(alg), keys) is None, window=n)

    # (v) u^- is unitary; u^* generally is not
    u = alg.u
    ubar = [[alg.bar(x) for x in row] for row in u]
    ustar = [[alg.star(x) for x in row] for row in u]
    bar_unitary = all(alg.antipode(ubar[i][j]) == alg.star(ubar[j][i]) for i in range(2) for j in range(2))
    report.add("u^- unitary (S(u^-_ij) = (u^-_ji)*)", bar_unitary, window=4)
    star_unitary = all(alg.antipode(ustar[i][j]) == alg.star(ustar[j][i]) for i in range(2) for j in range(2))
    report.add("u^* unitary (recorded only)", None, window=4, witness={"unitary": star_unitary})
    return report


def _counit_functional(alg):
    from .suq2 import Functional

    return Functional(alg, alg.counit_key, "counit")


def verify_haar(s_or_alg, degree: int = 6, samples: int = 100, sample_degree: int = 4,
                seed: int = DEFAULT_SEED) -> Report:
    """Invariance ``(h (x) id)Delta = h(.)1 = (id (x) h)Delta`` and sampled positivity."""
    alg = _alg(s_or_alg)
    keys = monomials(degree)
    report = Report("verify-haar", {"s": alg.s, "degree": degree, "samples": samples, "seed": seed})

    def invariant(k):
        d = alg.comultiply_key(k)
        target = alg.one * alg.haar_key(k)
        return d.contract_leg(0, alg.haar_key) == target == d.contract_leg(1, alg.haar_key)

    bad = _first(keys, invariant)
    report.add("haar-invariance", bad is None, window=len(keys), witness=_w(bad))
    report.add("h(1) = 1", alg.haar(alg.one) == ONE, window=1)

    rng = random.Random(seed)
    bad = None
    for i in range(samples):
        a = alg.random_element(rng, sample_degree)
        v = alg.haar(a * alg.star(a))
        if not (v.is_real() and v.re > 0):
            bad = {"sample": i, "a": repr(a), "h(aa*)": v}
            break
    report.add("h(aa*) > 0", bad is None, window=samples, witness=bad)
    return report


def verify_corep(alg: SUq2, t) -> dict[str, bool]:
    """Corepresentation laws for a square matrix of elements."""
    n = len(t)
    comult = all(
        alg.comultiply(t[i][j]) == _sum_tensors(alg, [alg.tensor(t[i][k], t[k][j]) for k in range(n)])
        for i in range(n)
        for j in range(n)
    )
    counit = all(alg.counit(t[i][j]) == (ONE if i == j else ZERO) for i in range(n) for j in range(n))
    unitary = all(alg.antipode(t[i][j]) == alg.star(t[j][i]) for i in range(n) for j in range(n))
    return {"comultiplication": comult, "counit": counit, "unitary": unitary}


def _sum_tensors(alg, tensors):
    acc = Tensor(alg, 2, {})
    for t in tensors:
        acc = acc + t
    return Tensor(alg, 2, {k: v for k, v in acc.terms.items() if v})
