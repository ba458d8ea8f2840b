"""Little q-Legendre and symmetric Askey-Wilson polynomials.

Both families appear as spherical elements of SU_q(2): the little
q-Legendre polynomials in ``x = gamma gamma*`` (base ``q**2``), and the
Askey-Wilson polynomials with parameters
``(-q^(2 sigma+1), -q^(1-2 sigma), q, q | q^2)`` in ``x = rho_sigma``.
Members are normalised to take the value 1 at the counit point ``x0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .qseries import VanishingDenominator, q_pochhammer_multi, terminating_bhs
from .scalars import ONE, ZERO, GaussianRational, QParameter, as_scalar
from .unipoly import UniPoly

LITTLE_Q_LEGENDRE = "little-q-legendre"
ASKEY_WILSON_SYM = "askey-wilson-sym"
FAMILIES = (LITTLE_Q_LEGENDRE, ASKEY_WILSON_SYM)


class UnsupportedFamily(ValueError):
    pass


class DegenerateNormalization(ZeroDivisionError):
    pass


def little_q_legendre(l: int, base) -> UniPoly:
    """``p_l(x; base) = 2phi1(base^-l, base^(l+1); base; base, base*x)``."""
    base = as_scalar(base)
    qx = UniPoly([ZERO, base])
    return terminating_bhs([base ** -l, base ** (l + 1)], [base], base, qx)


def askey_wilson(n: int, a, b, c, d, q) -> UniPoly:
    """Askey-Wilson polynomial ``p_n(x; a, b, c, d | q)`` with ``x = cos(theta)``.

    The pair ``(a e^{i theta}, a e^{-i theta}; q)_k`` is expanded as
    ``prod_{j<k} (1 - 2 a q^j x + a^2 q^(2j))``.
    """
    a, b, c, d, q = (as_scalar(v) for v in (a, b, c, d, q))
    if not a:
        raise ValueError("parameter a must be nonzero")
    ab, ac, ad = a * b, a * c, a * d
    for j in range(n):
        for p in (ab, ac, ad):
            if not (1 - p * q ** j):
                raise VanishingDenominator(j, f"(ab, ac, ad; q) factor vanishes at j = {j}")
    top = q ** (n - 1) * a * b * c * d
    q_n = q ** -n
    x = UniPoly.x()

    total = UniPoly()
    pair = UniPoly([ONE])  # (a e^{it}, a e^{-it}; q)_k as a polynomial in x
    ratio = ONE  # (q^-n, q^(n-1)abcd; q)_k / (ab, ac, ad, q; q)_k * q^k
    for k in range(n + 1):
        total = total + pair * ratio
        if k == n:
            break
        qk = q ** k
        ratio = ratio * (1 - q_n * qk) * (1 - top * qk) * q
        ratio = ratio / ((1 - ab * qk) * (1 - ac * qk) * (1 - ad * qk) * (1 - q * qk))
        pair = pair * (UniPoly([1 + a * a * qk * qk]) - x * (2 * a * qk))
    return total * (q_pochhammer_multi([ab, ac, ad], q, n) / a ** n)


@dataclass(frozen=True)
class OrthogonalFamily:
    """One of the two spherical polynomial families, at fixed parameters."""

    kind: str
    qparam: QParameter
    sigma: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in FAMILIES:
            raise UnsupportedFamily(f"unknown family {self.kind!r}")
        sigma = Fraction(self.sigma)
        if (2 * sigma).denominator != 1:
            raise ValueError(f"sigma must be a half-integer, got {sigma}")
        object.__setattr__(self, "sigma", sigma)

    @classmethod
    def legendre(cls, s) -> "OrthogonalFamily":
        return cls(LITTLE_Q_LEGENDRE, _qp(s))

    @classmethod
    def askey_wilson(cls, s, sigma) -> "OrthogonalFamily":
        return cls(ASKEY_WILSON_SYM, _qp(s), Fraction(sigma))

    @property
    def x0(self) -> GaussianRational:
        return ZERO if self.kind == LITTLE_Q_LEGENDRE else ONE

    def aw_parameters(self):
        """``(a, b, c, d, base) = (-q^(2 sigma+1), -q^(1-2 sigma), q, q, q^2)``.

        This is the equal-parameter case of the two-parameter family
        ``(-q^(s+t+1), -q^(1-s-t), q^(s-t+1), q^(t-s+1) | q^2)``; it is the
        set whose members, evaluated at ``rho_sigma``, reproduce the
        X_sigma-biinvariant elements exactly (see ``dual.compare_aw``).
        """
        qp = self.qparam
        q = qp.q
        return -qp.qpow(2 * self.sigma + 1), -qp.qpow(1 - 2 * self.sigma), q, q, q * q

    def equal_ab_aw_parameters(self):
        """The variant with ``b = a = -q^(2 sigma+1)``; agrees with the above only at sigma = 0."""
        qp = self.qparam
        a = -qp.qpow(2 * self.sigma + 1)
        q = qp.q
        return a, a, q, q, q * q

    def raw(self, n: int) -> UniPoly:
        """The unnormalised member of degree ``n``."""
        return _raw_member(self, n)

    def member(self, n: int) -> UniPoly:
        """The counit-normalised member, ``p~_n(x0) = 1``."""
        return _member(self, n)

    def moment_functional(self) -> "MomentFunctional":
        if self.kind != LITTLE_Q_LEGENDRE:
            raise UnsupportedFamily("moment functional only implemented for little-q-legendre")
        return MomentFunctional(self.qparam)

    def describe(self) -> str:
        if self.kind == LITTLE_Q_LEGENDRE:
            return f"{self.kind}(s={self.qparam})"
        return f"{self.kind}(s={self.qparam}, sigma={self.sigma})"


def _qp(s) -> QParameter:
    return s if isinstance(s, QParameter) else QParameter(Fraction(s))


@lru_cache(maxsize=None)
def _raw_member(family: OrthogonalFamily, n: int) -> UniPoly:
    if family.kind == LITTLE_Q_LEGENDRE:
        return little_q_legendre(n, family.qparam.q ** 2)
    return askey_wilson(n, *family.aw_parameters())


@lru_cache(maxsize=None)
def _member(family: OrthogonalFamily, n: int) -> UniPoly:
    return spherical_normalize(_raw_member(family, n), family)


def spherical_normalize(p: UniPoly, family: OrthogonalFamily) -> UniPoly:
    value = p(family.x0)
    if not value:
        raise DegenerateNormalization(f"polynomial vanishes at x0 = {family.x0}")
    return p / value


@dataclass(frozen=True)
class MomentFunctional:
    """Haar functional on polynomials in ``gamma gamma*``.

    ``h(x^n) = (1 - q^2) / (1 - q^(2n+2))``, the closed form of the Jackson
    sum ``sum_k (1 - q^2) q^(2k) (q^(2k))^n``.
    """

    qparam: QParameter

    def of_power(self, n: int) -> Fraction:
        q2 = self.qparam.q ** 2
        return (1 - q2) / (1 - q2 ** (n + 1))


def moment(h: MomentFunctional, p: UniPoly) -> GaussianRational:
    total = ZERO
    for n, c in enumerate(p.coeffs):
        if c:
            total = total + c * h.of_power(n)
    return total


def expand_in_family(p: UniPoly, family: OrthogonalFamily) -> list[GaussianRational]:
    """Coefficients ``c_k`` with ``p = sum_k c_k p~_k`` (triangular back-substitution)."""
    if not p:
        return []
    rest = p
    coeffs = [ZERO] * (p.degree + 1)
    for k in range(p.degree, -1, -1):
        lead = rest[k]
        if not lead:
            continue
        basis = family.member(k)
        c = lead / basis.leading()
        coeffs[k] = c
        rest = rest - basis * c
    if rest:
        raise ArithmeticError("back-substitution left a remainder")  # pragma: no cover
    return coeffs
