"""Linearization coefficients ``p~_l p~_m = sum_k c_lm(k) p~_k``.

Two independent routes: expand the product polynomial triangularly, or
project with the Haar moment functional (little q-Legendre only).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .qpolynomials import (
    LITTLE_Q_LEGENDRE,
    OrthogonalFamily,
    UnsupportedFamily,
    expand_in_family,
    moment,
)
from .scalars import ONE, ZERO, GaussianRational, QParameter, format_rational
from .unipoly import UniPoly


@dataclass(frozen=True)
class LinearizationRow:
    l: int
    m: int
    coefficients: dict[int, GaussianRational] = field(default_factory=dict)

    def __post_init__(self):
        clean = {k: c for k, c in sorted(self.coefficients.items()) if c}
        object.__setattr__(self, "coefficients", clean)

    def __getitem__(self, k: int) -> GaussianRational:
        return self.coefficients.get(k, ZERO)

    @property
    def support(self) -> list[int]:
        return list(self.coefficients)

    def total(self) -> GaussianRational:
        return sum(self.coefficients.values(), ZERO)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coefficients.values())

    def negative_entries(self) -> list[int]:
        return [k for k, c in self.coefficients.items() if not c.is_real() or c.re < 0]

    def csv_rows(self):
        for k, c in self.coefficients.items():
            yield (self.l, self.m, k, _real_string(c))


def _real_string(c: GaussianRational) -> str:
    return format_rational(c.re) if c.is_real() else str(c)


def linearize_triangular(l: int, m: int, family: OrthogonalFamily) -> LinearizationRow:
    product = family.member(l) * family.member(m)
    coeffs = expand_in_family(product, family)
    return LinearizationRow(l, m, dict(enumerate(coeffs)))


def linearize_moment(l: int, m: int, q) -> LinearizationRow:
    """``c_lm(k) = h(p~_l p~_m p~_k) / h(p~_k^2)`` for little q-Legendre."""
    family = q if isinstance(q, OrthogonalFamily) else OrthogonalFamily.legendre(q)
    if family.kind != LITTLE_Q_LEGENDRE:
        raise UnsupportedFamily("moment route needs the little-q-legendre moment functional")
    h = family.moment_functional()
    product = family.member(l) * family.member(m)
    coeffs = {}
    # degrees above l+m are orthogonal to the product; below |l-m| the
    # projections are computed anyway and must come out zero
    for k in range(0, l + m + 1):
        pk = family.member(k)
        coeffs[k] = moment(h, product * pk) / moment(h, pk * pk)
    return LinearizationRow(l, m, coeffs)


@dataclass(frozen=True)
class PosDefVerdict:
    positive_definite: bool
    witness: int | None = None
    coefficients: tuple = ()


def posdef_check_Z(p: UniPoly, family: OrthogonalFamily) -> PosDefVerdict:
    """On the biinvariant subalgebra every block is 1x1: all coefficients real and >= 0."""
    coeffs = expand_in_family(p, family)
    for k, c in enumerate(coeffs):
        if not c.is_real() or c.re < 0:
            return PosDefVerdict(False, k, tuple(coeffs))
    return PosDefVerdict(True, None, tuple(coeffs))


def linearization_table(family: OrthogonalFamily, lmax: int) -> list[LinearizationRow]:
    """All rows ``0 <= l, m <= lmax`` in canonical (l, m) order."""
    return [linearize_triangular(l, m, family) for l in range(lmax + 1) for m in range(lmax + 1)]


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["l", "m", "k", "c"])
    for row in rows:
        writer.writerows(row.csv_rows())
    return buf.getvalue()


def rows_to_json(rows) -> str:
    data = [
        {"l": r.l, "m": r.m, "coefficients": [[k, _real_string(c)] for k, c in r.coefficients.items()]}
        for r in rows
    ]
    return json.dumps(data, separators=(",", ":"))


def row_checks(row: LinearizationRow) -> dict[str, bool]:
    lo, hi = abs(row.l - row.m), row.l + row.m
    return {
        "nonnegative": not row.negative_entries(),
        "sum_is_one": row.total() == ONE,
        "support_in_range": all(lo <= k <= hi for k in row.support),
    }
