"""q-shifted factorials, q-integers and terminating basic hypergeometric sums."""

from __future__ import annotations

from typing import Sequence

from .scalars import ONE, GaussianRational, as_scalar
from .unipoly import UniPoly


class NonTerminatingSeries(ValueError):
    pass


class VanishingDenominator(ZeroDivisionError):
    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"denominator factor vanishes at index {index}")


def q_pochhammer(a, q, n: int) -> GaussianRational:
    """``(a; q)_n = prod_{j<n} (1 - a q^j)``."""
    if n < 0:
        raise ValueError("negative length")
    a, q = as_scalar(a), as_scalar(q)
    result = ONE
    term = a
    for _ in range(n):
        result = result * (1 - term)
        term = term * q
    return result


def q_pochhammer_multi(params: Sequence, q, n: int) -> GaussianRational:
    """``(a_1, ..., a_k; q)_n``."""
    result = ONE
    for a in params:
        result = result * q_pochhammer(a, q, n)
    return result


def q_integer(n: int, q) -> GaussianRational:
    """``(1 - q^n) / (1 - q)``."""
    q = as_scalar(q)
    if q == 1:
        raise ValueError("q-integer undefined at q = 1")
    return (1 - q ** n) / (1 - q)


def termination_index(a, q) -> int | None:
    """Return ``n >= 0`` with ``a == q**-n``, or None if there is none."""
    a, q = as_scalar(a), as_scalar(q)
    if not a:
        return None
    r = q.norm2()
    if r == 1:
        # q on the unit circle: a q^n can cycle, only a == 1 is accepted
        return 0 if a == 1 else None
    term, n = a, 0
    while True:
        if term == 1:
            return n
        size = term.norm2()
        if (r < 1 and size < 1) or (r > 1 and size > 1):
            return None
        term = term * q
        n += 1


def terminating_bhs(numerator: Sequence, denominator: Sequence, q, z):
    """Sum ``sum_k prod (a_i;q)_k / prod (b_j;q)_k * z^k / (q;q)_k``.

    Some numerator parameter must be ``q**-n``; the sum stops at the
    smallest such ``n``.  ``z`` may be a scalar or a :class:`UniPoly`, and
    the result has the same kind.
    """
    q = as_scalar(q)
    nums = [as_scalar(a) for a in numerator]
    dens = [as_scalar(b) for b in denominator]
    stops = [n for n in (termination_index(a, q) for a in nums) if n is not None]
    if not stops:
        raise NonTerminatingSeries("no numerator parameter of the form q^-n")
    n = min(stops)

    poly = isinstance(z, UniPoly)
    zk = UniPoly([ONE]) if poly else ONE
    total = UniPoly() if poly else as_scalar(0)
    ratio = ONE
    for k in range(n + 1):
        total = total + zk * ratio
        if k == n:
            break
        num = ONE
        for a in nums:
            num = num * (1 - a * q ** k)
        den = 1 - q ** (k + 1)
        for b in dens:
            den = den * (1 - b * q ** k)
        if not den:
            raise VanishingDenominator(k)
        ratio = ratio * num / den
        zk = zk * z
    return total
