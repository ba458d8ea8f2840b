"""Dense univariate polynomials with exact Gaussian-rational coefficients."""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .scalars import ONE, ZERO, GaussianRational, as_scalar


class UniPoly:
    """Coefficients stored lowest degree first; no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[GaussianRational, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([ZERO, ONE])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def leading(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, k: int) -> GaussianRational:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly([{', '.join(str(c) for c in self.coeffs)}])"

    def __add__(self, other):
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + b[i] if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = as_scalar(other)
            return UniPoly([x * c for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = as_scalar(c)
        return UniPoly([x / c for x in self.coeffs])

    def __pow__(self, n: int):
        result = UniPoly([ONE])
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, x):
        """Horner evaluation at a scalar."""
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate(self, x, one):
        """Horner evaluation in any ring, given its unit ``one``.

        Used to substitute an algebra element for the variable.
        """
        acc = one * ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + one * c
        return acc

    def compose_linear(self, a, b) -> "UniPoly":
        """``p(a*x + b)``."""
        lin = UniPoly([b, a])
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * lin + UniPoly([c])
        return acc

    # -- I/O -------------------------------------------------------------
    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "UniPoly":
        return cls(GaussianRational.parse(t) for t in json.loads(text))


def _lift(p) -> UniPoly:
    if isinstance(p, UniPoly):
        return p
    return UniPoly([p])


def from_coefficients(coeffs: Sequence, basis: Sequence[UniPoly]) -> UniPoly:
    """``sum(c_k * basis[k])``."""
    acc = UniPoly()
    for c, b in zip(coeffs, basis):
        if c:
            acc = acc + b * c
    return acc
