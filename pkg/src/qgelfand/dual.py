"""The dual side: U_q(sl(2)) generators as functionals on A_q(SU(2)).

``A^z``, ``B`` and ``C`` are fixed by their values on the matrix ``u`` and
by ``Delta(A^z) = A^z (x) A^z``, ``Delta(B) = A (x) B + B (x) A^-1``,
``Delta(C) = A (x) C + C (x) A^-1``.  On a PBW key ``(k, m, n)`` this gives

    A^z -> q^(z k / 2)   if m = n = 0
    B   -> q^(k / 2)     if (m, n) = (1, 0)
    C   -> q^(k / 2)     if (m, n) = (0, 1)

and zero otherwise.  Representations use the rational weight basis
``v_j = C^j v_0`` of the top block of ``(C^2)^(x)2l``, so all matrix
entries stay in Q(i, s); unitarity is never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from . import linalg
from .qpolynomials import OrthogonalFamily, askey_wilson, spherical_normalize
from .scalars import I, ONE, ZERO, GaussianRational, as_scalar, parse_half_integer
from .suq2 import AlgebraElement, Functional, SUq2


class IrrationalPower(ValueError):
    pass


class SphericalDimensionError(ValueError):
    """The biinvariant subspace of a matrix-element span is not one-dimensional."""

    def __init__(self, l, dimension: int):
        self.l = l
        self.dimension = dimension
        super().__init__(f"spin {l}: biinvariant subspace has dimension {dimension}, expected 1")


# -- functionals --------------------------------------------------------

def A_pow(alg: SUq2, z: int) -> Functional:
    if Fraction(z).denominator != 1:
        raise IrrationalPower(f"A^{z}: only integer exponents keep powers of s integral")
    z = int(z)
    s = alg.s
    return Functional(alg, lambda key: ZERO if key[1] or key[2] else s ** (z * key[0]), f"A^{z}")


def B_functional(alg: SUq2) -> Functional:
    s = alg.s
    return Functional(alg, lambda key: s ** key[0] if (key[1], key[2]) == (1, 0) else ZERO, "B")


def C_functional(alg: SUq2) -> Functional:
    s = alg.s
    return Functional(alg, lambda key: s ** key[0] if (key[1], key[2]) == (0, 1) else ZERO, "C")


def kappa(alg: SUq2, sigma) -> Fraction:
    """``(q^-sigma - q^sigma) / (q^-1 - q)``."""
    qp = alg.qparam
    sigma = parse_half_integer(sigma) if isinstance(sigma, str) else Fraction(sigma)
    q = alg.q
    return (qp.qpow(-sigma) - qp.qpow(sigma)) / (1 / q - q)


def X_sigma(alg: SUq2, sigma) -> Functional:
    """``X_sigma = iB - iC - kappa (A - A^-1)``."""
    sigma = _half(sigma)
    k = kappa(alg, sigma)
    A, Ainv = A_pow(alg, 1), A_pow(alg, -1)
    B, C = B_functional(alg), C_functional(alg)

    def on_key(key):
        return I * B.value(key) - I * C.value(key) - (A.value(key) - Ainv.value(key)) * k

    return Functional(alg, on_key, f"X_{sigma}")


def _half(sigma) -> Fraction:
    if isinstance(sigma, str):
        return parse_half_integer(sigma)
    sigma = Fraction(sigma)
    if (2 * sigma).denominator != 1:
        raise IrrationalPower(f"sigma = {sigma} is not a half-integer")
    return sigma


def dual_word(alg: SUq2, tokens) -> Functional:
    """Product of tokens ``("A", z)``, ``"B"``, ``"C"`` in order (empty word = counit)."""
    result = A_pow(alg, 0)
    for tok in tokens:
        if tok == "B":
            f = B_functional(alg)
        elif tok == "C":
            f = C_functional(alg)
        elif isinstance(tok, tuple) and tok[0] == "A":
            f = A_pow(alg, tok[1])
        else:
            raise ValueError(f"unknown dual token {tok!r}")
        result = result * f
    return result


def eval_dual(w, a: AlgebraElement) -> GaussianRational:
    if isinstance(w, Functional):
        return w(a)
    return dual_word(a.alg, w)(a)


# -- representations ----------------------------------------------------

def _spin(l) -> Fraction:
    l = _half(l)
    if l < 0:
        raise ValueError("spin must be nonnegative")
    return l


@dataclass
class Rep:
    """``pi^l`` on the weight basis ``v_0 .. v_2l`` (A diagonal, C lowering)."""

    l: Fraction
    s: Fraction
    A: list
    B: list
    C: list
    # the extracted top-block vectors in (C^2)^(x)2l, kept for intertwiners
    vectors: list = field(default_factory=list, repr=False)

    @property
    def dim(self) -> int:
        return len(self.A)

    def A_pow(self, z: int):
        return [[(x ** z if i == j else ZERO) for j, x in enumerate(row)] for i, row in enumerate(self.A)]

    def relation_defects(self) -> dict[str, bool]:
        q = self.s * self.s
        A, B, C = self.A, self.B, self.C
        Ainv = self.A_pow(-1)
        mm = linalg.matmul
        ab = linalg.sub(mm(A, B), linalg.scale(mm(B, A), q))
        ac = linalg.sub(mm(A, C), linalg.scale(mm(C, A), 1 / q))
        comm = linalg.sub(mm(B, C), mm(C, B))
        rhs = linalg.scale(linalg.sub(mm(A, A), mm(Ainv, Ainv)), 1 / (q - 1 / q))
        zero = lambda m: all(not x for row in m for x in row)  # noqa: E731
        return {
            "AB = qBA": zero(ab),
            "AC = q^-1 CA": zero(ac),
            "BC - CB = (A^2 - A^-2)/(q - q^-1)": zero(linalg.sub(comm, rhs)),
        }

    def satisfies_relations(self) -> bool:
        return all(self.relation_defects().values())

    def matrix_of(self, f: str, z: int = 1):
        if f == "A":
            return self.A_pow(z)
        if f == "B":
            return self.B
        if f == "C":
            return self.C
        raise ValueError(f)


# single-site action on basis index b in {0, 1} (b = 0 is e_1)
def _apply_site(vec: dict, site: int, op: str, s: Fraction) -> dict:
    out = {}
    for idx, c in vec.items():
        b = idx[site]
        if op == "A":
            out[idx] = out.get(idx, ZERO) + c * (s if b == 0 else 1 / s)
        elif op == "Ainv":
            out[idx] = out.get(idx, ZERO) + c * (1 / s if b == 0 else s)
        elif op == "B" and b == 1:
            j = idx[:site] + (0,) + idx[site + 1:]
            out[j] = out.get(j, ZERO) + c
        elif op == "C" and b == 0:
            j = idx[:site] + (1,) + idx[site + 1:]
            out[j] = out.get(j, ZERO) + c
    return {k: v for k, v in out.items() if v}


def _tensor_apply(vec: dict, op: str, n: int, s: Fraction) -> dict:
    """Action of ``Delta^(n-1)(op)`` on ``(C^2)^(x)n``.

    ``Delta^(n-1)(B) = sum_i A^(x)i (x) B (x) (A^-1)^(x)(n-i-1)``, same for C.
    """
    if op in ("A", "Ainv"):
        for site in range(n):
            vec = _apply_site(vec, site, op, s)
        return vec
    # A and A^-1 are diagonal, so the factor for acting at site i is
    # s^(w_<i - w_>i) with w the signed weight (+1 for e_1, -1 for e_2)
    # of the untouched sites.
    source = 1 if op == "B" else 0
    total: dict = {}
    for idx, c in vec.items():
        signs = [1 if b == 0 else -1 for b in idx]
        after = sum(signs)
        before = 0
        for i, b in enumerate(idx):
            after -= signs[i]
            if b == source:
                j = idx[:i] + (1 - b,) + idx[i + 1:]
                total[j] = total.get(j, ZERO) + c * s ** (before - after)
            before += signs[i]
    return {k: v for k, v in total.items() if v}


_REP_CACHE: dict = {}


def build_rep(l, s) -> Rep:
    l = _spin(l)
    s = Fraction(s)
    cached = _REP_CACHE.get((l, s))
    if cached is not None:
        return cached
    n = int(2 * l)
    v0 = {(0,) * n: ONE}
    vectors = [v0]
    for _ in range(n):
        vectors.append(_tensor_apply(vectors[-1], "C", n, s))
    dim = n + 1
    A = linalg.zeros(dim, dim)
    B = linalg.zeros(dim, dim)
    C = linalg.zeros(dim, dim)
    for j in range(dim):
        A[j][j] = as_scalar(s ** (n - 2 * j))
        if j + 1 < dim:
            C[j + 1][j] = ONE
        if j > 0:
            bv = _tensor_apply(vectors[j], "B", n, s)
            target = vectors[j - 1]
            pivot = next(iter(target))
            lam = bv.get(pivot, ZERO) / target[pivot]
            if {k: c * lam for k, c in target.items()} != bv:
                raise ArithmeticError(f"B v_{j} is not proportional to v_{j - 1}")  # pragma: no cover
            B[j - 1][j] = lam
        elif _tensor_apply(vectors[0], "B", n, s):
            raise ArithmeticError("v_0 is not a highest-weight vector")  # pragma: no cover
    rep = Rep(l, s, A, B, C, vectors)
    _REP_CACHE[(l, s)] = rep
    return rep


def f_matrix(l, s):
    """``F_l = pi^l(A^-2) = diag(q^-2l, ..., q^2l)``."""
    return build_rep(l, s).A_pow(-2)


def x_sigma_matrix(l, sigma, s):
    sigma = _half(sigma)
    rep = build_rep(l, s)
    alg_k = _kappa_s(Fraction(s), sigma)
    ib = linalg.scale(rep.B, I)
    ic = linalg.scale(rep.C, I)
    a_diff = linalg.sub(rep.A_pow(1), rep.A_pow(-1))
    return linalg.sub(linalg.sub(ib, ic), linalg.scale(a_diff, alg_k))


def _kappa_s(s: Fraction, sigma: Fraction) -> Fraction:
    q = s * s
    t = int(2 * sigma)
    return (s ** -t - s ** t) / (1 / q - q)


def invariant_vectors(l, sigma, s):
    return linalg.nullspace(x_sigma_matrix(l, sigma, s))


def gelfand_scan(s, sigma, two_l_max: int) -> list[int]:
    return [len(invariant_vectors(Fraction(n, 2), sigma, s)) for n in range(two_l_max + 1)]


# -- corepresentations --------------------------------------------------

def _u_entry(alg: SUq2, i: int, j: int) -> AlgebraElement:
    return alg.u[i][j]


def build_corep(alg: SUq2, l, bound: int = 4) -> list[list[AlgebraElement]]:
    """``t^l = W' u^(x)2l W`` with ``W = [v_0 .. v_2l]`` and ``W'`` a left inverse.

    ``W'`` picks one coordinate per weight space: ``v_i`` lives in weight
    ``i`` (``i`` factors equal to e_2), so ``W' W = 1`` is automatic.
    """
    l = _spin(l)
    n = int(2 * l)
    if n > bound:
        raise ValueError(f"2l = {n} exceeds the configured corep bound {bound}")
    cache = alg.__dict__.setdefault("_corep_cache", {})
    if l in cache:
        return cache[l]
    rep = build_rep(l, alg.s)
    rows = []
    for i in range(n + 1):
        a = (0,) * (n - i) + (1,) * i
        vi = rep.vectors[i]
        norm = vi.get(a)
        if not norm:
            a = next(iter(vi))
            norm = vi[a]
        row = []
        for j in range(n + 1):
            acc = alg.zero
            for b, c in rep.vectors[j].items():
                term = alg.one
                for x, y in zip(a, b):
                    term = term * alg.u[x][y]
                acc = acc + term * c
            row.append(acc / norm)
        rows.append(row)
    cache[l] = rows
    return rows


def corep_duality_defects(alg: SUq2, l) -> list:
    """Entries where ``f(t_ij) != pi^l(f)_ij`` for f in A, A^-1, B, C."""
    t = build_corep(alg, l)
    rep = build_rep(l, alg.s)
    checks = [
        ("A", A_pow(alg, 1), rep.A_pow(1)),
        ("A^-1", A_pow(alg, -1), rep.A_pow(-1)),
        ("B", B_functional(alg), rep.B),
        ("C", C_functional(alg), rep.C),
    ]
    bad = []
    for name, f, mat in checks:
        for i, row in enumerate(t):
            for j, e in enumerate(row):
                if f(e) != mat[i][j]:
                    bad.append((name, i, j))
    return bad


# -- spherical elements -------------------------------------------------

def _combine(alg: SUq2, t, c) -> AlgebraElement:
    acc = alg.zero
    for i, row in enumerate(t):
        for j, e in enumerate(row):
            if c[i][j]:
                acc = acc + e * c[i][j]
    return acc


def _psi_coefficients(t) -> dict:
    """``Psi(t_ik)`` as Laurent polynomials in z: {(i, k): {power: coeff}}."""
    out = {}
    for i, row in enumerate(t):
        for k, e in enumerate(row):
            poly = {}
            for key, c in e.terms.items():
                if key[1] == 0 and key[2] == 0:
                    poly[key[0]] = poly.get(key[0], ZERO) + c
            out[(i, k)] = {p: c for p, c in poly.items() if c}
    return out


def _solve_normalised(l, d: int, equations: list) -> list[list[GaussianRational]]:
    basis = linalg.nullspace(equations, d * d) if equations else linalg.nullspace([], d * d)
    if len(basis) != 1:
        raise SphericalDimensionError(l, len(basis))
    v = basis[0]
    c = [v[i * d:(i + 1) * d] for i in range(d)]
    trace = sum((c[i][i] for i in range(d)), ZERO)
    if not trace:
        raise SphericalDimensionError(l, 1)
    return [[x / trace for x in row] for row in c]


def spherical_u1(alg: SUq2, l: int) -> AlgebraElement:
    """The Psi-biinvariant element of span{t^l_ij} with counit 1."""
    l = _spin(l)
    if l.denominator != 1:
        raise SphericalDimensionError(l, 0)
    t = build_corep(alg, l)
    d = len(t)
    psi = _psi_coefficients(t)
    powers = sorted({p for poly in psi.values() for p in poly} | {0})
    idx = lambda i, j: i * d + j  # noqa: E731
    equations = []
    # left: sum_i c_ij Psi(t_ik)_p = delta_p0 c_kj
    for k in range(d):
        for j in range(d):
            for p in powers:
                row = [ZERO] * (d * d)
                for i in range(d):
                    row[idx(i, j)] = row[idx(i, j)] + psi[(i, k)].get(p, ZERO)
                if p == 0:
                    row[idx(k, j)] = row[idx(k, j)] - ONE
                if any(row):
                    equations.append(row)
    # right: sum_j c_ij Psi(t_kj)_p = delta_p0 c_ik
    for i in range(d):
        for k in range(d):
            for p in powers:
                row = [ZERO] * (d * d)
                for j in range(d):
                    row[idx(i, j)] = row[idx(i, j)] + psi[(k, j)].get(p, ZERO)
                if p == 0:
                    row[idx(i, k)] = row[idx(i, k)] - ONE
                if any(row):
                    equations.append(row)
    c = _solve_normalised(l, d, equations)
    result = _combine(alg, t, c)
    if not alg.biinvariant_u1(result):
        raise ArithmeticError("solved element is not biinvariant")  # pragma: no cover
    return result


def spherical_j(alg: SUq2, l, sigma) -> AlgebraElement:
    """The X_sigma-biinvariant element of span{t^l_ij} with counit 1.

    ``X.a`` has coefficient matrix ``c pi(X)^T`` and ``a.X`` has
    ``pi(X)^T c``; both must vanish.
    """
    l = _spin(l)
    sigma = _half(sigma)
    t = build_corep(alg, l)
    d = len(t)
    X = x_sigma_matrix(l, sigma, alg.s)
    equations = []
    for i in range(d):
        for k in range(d):
            row = [ZERO] * (d * d)
            for j in range(d):
                row[i * d + j] = X[k][j]
            equations.append(row)
    for k in range(d):
        for j in range(d):
            row = [ZERO] * (d * d)
            for i in range(d):
                row[i * d + j] = X[i][k]
            equations.append(row)
    c = _solve_normalised(l, d, equations)
    result = _combine(alg, t, c)
    Xf = X_sigma(alg, sigma)
    if alg.left(Xf, result) or alg.right(result, Xf):
        raise ArithmeticError("solved element is not X_sigma-biinvariant")  # pragma: no cover
    return result


def rho_sigma(alg: SUq2, sigma) -> AlgebraElement:
    sigma = _half(sigma)
    a, b, g, d = alg.alpha, alg.beta, alg.gamma, alg.delta
    w = alg.qparam.qpow(-sigma) - alg.qparam.qpow(sigma)
    mixed = d * g + b * a - d * b - g * a
    total = a * a + b * b + g * g + d * d + mixed * (I * alg.s * w) + b * g * (w * w)
    return total * Fraction(1, 2)


def gamma_gamma_star(alg: SUq2) -> AlgebraElement:
    return alg.gamma * alg.star(alg.gamma)


def legendre_spherical(alg: SUq2, l: int) -> AlgebraElement:
    """``p_l(gamma gamma*; q^2)`` expanded in PBW form."""
    family = OrthogonalFamily.legendre(alg.qparam)
    return family.member(l).evaluate(gamma_gamma_star(alg), alg.one)


def aw_spherical(alg: SUq2, l: int, sigma) -> AlgebraElement:
    family = OrthogonalFamily.askey_wilson(alg.qparam, _half(sigma))
    return family.member(l).evaluate(rho_sigma(alg, sigma), alg.one)


def compare_aw_detail(alg: SUq2, l: int, sigma) -> dict:
    sigma = _half(sigma)
    family = OrthogonalFamily.askey_wilson(alg.qparam, sigma)
    raw_at_one = family.raw(l)(ONE)
    solved = spherical_j(alg, l, sigma)
    candidate = aw_spherical(alg, l, sigma)
    # spherical = p_n(rho) / p_n(1); the relating multiple is 1 / p_n(1)
    multiple = ONE / raw_at_one
    equal_ab = askey_wilson(l, *family.equal_ab_aw_parameters())
    equal_ab_candidate = spherical_normalize(equal_ab, family).evaluate(rho_sigma(alg, sigma), alg.one)
    return {
        "l": l,
        "sigma": sigma,
        "equal": solved == candidate,
        "multiple": multiple,
        "multiple_positive": multiple.is_real() and multiple.re > 0,
        "equal_ab_parameters_match": solved == equal_ab_candidate,
    }


def compare_aw(alg: SUq2, l: int, sigma) -> bool:
    d = compare_aw_detail(alg, l, sigma)
    return d["equal"] and d["multiple_positive"]


def verify_coideal(alg: SUq2, sigma, degree: int = 3):
    """Coproduct law, ``X* = X`` and ``S(X) = -X^-`` on the degree-<=``degree`` basis."""
    from .reports import Report
    from .suq2 import key_degree, key_name, monomials

    sigma = _half(sigma)
    X = X_sigma(alg, sigma)
    A, Ainv = A_pow(alg, 1), A_pow(alg, -1)
    keys = monomials(degree)
    report = Report("verify-coideal", {"s": alg.s, "sigma": sigma, "degree": degree})

    bad, count = None, 0
    for x, y in iproduct(keys, repeat=2):
        count += 1
        lhs = X(alg.basis(x) * alg.basis(y))
        rhs = A.value(x) * X.value(y) + X.value(x) * Ainv.value(y)
        if lhs != rhs:
            bad = [key_name(x), key_name(y)]
            break
    report.add("Delta(X) = A (x) X + X (x) A^-1", bad is None, window=count, witness=bad)

    Xs = X.star()
    k = X.agrees_with(Xs, keys)
    report.add("X* = X", k is None, window=len(keys), witness=None if k is None else key_name(k))

    SX, Xbar = X.antipode(), X.bar()
    k = next((k for k in keys if SX.value(k) != -Xbar.value(k)), None)
    report.add("S(X) = -X^-", k is None, window=len(keys), witness=None if k is None else key_name(k))
    report.add("X(1) = 0", X.value((0, 0, 0)) == ZERO, window=1)
    return report
