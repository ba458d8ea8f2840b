"""Discrete DJS-hypergroups on a truncated index set ``{0, ..., N}``.

The convolution table stores ``p_l * p_m`` for ``l, m <= N``; rows may
reach beyond ``N`` (up to ``l + m``).  Axioms are asserted only on the
window where every intermediate support stays inside ``{0, ..., N}``, and
the report says how large that window was.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .linearization import linearize_triangular
from .qpolynomials import OrthogonalFamily
from .reports import Report
from .scalars import ONE, ZERO, GaussianRational, as_scalar


class TruncationBreach(IndexError):
    pass


@dataclass(frozen=True)
class FiniteMeasure:
    weights: dict[int, GaussianRational] = field(default_factory=dict)

    def __post_init__(self):
        clean = {k: as_scalar(v) for k, v in sorted(self.weights.items())}
        object.__setattr__(self, "weights", {k: v for k, v in clean.items() if v})

    @classmethod
    def point(cls, x: int) -> "FiniteMeasure":
        return cls({x: ONE})

    def __getitem__(self, k: int) -> GaussianRational:
        return self.weights.get(k, ZERO)

    @property
    def support(self) -> list[int]:
        return list(self.weights)

    def __eq__(self, other):
        if isinstance(other, FiniteMeasure):
            return self.weights == other.weights
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.weights.items()))

    def __add__(self, other: "FiniteMeasure") -> "FiniteMeasure":
        out = dict(self.weights)
        for k, v in other.weights.items():
            out[k] = out.get(k, ZERO) + v
        return FiniteMeasure(out)

    def scale(self, c) -> "FiniteMeasure":
        return FiniteMeasure({k: v * c for k, v in self.weights.items()})

    def total(self) -> GaussianRational:
        return sum(self.weights.values(), ZERO)

    def probability_violation(self):
        """None for a probability measure, else a short reason."""
        for k, v in self.weights.items():
            if not v.is_real():
                return {"index": k, "value": v, "reason": "not real"}
            if v.re < 0:
                return {"index": k, "value": v, "reason": "negative"}
        if self.total() != ONE:
            return {"total": self.total(), "reason": "mass != 1"}
        return None


@dataclass
class DiscreteHypergroup:
    N: int
    table: dict[tuple[int, int], FiniteMeasure]
    involution: list[int]
    unit: int = 0

    def entry(self, l: int, m: int) -> FiniteMeasure:
        if not (0 <= l <= self.N and 0 <= m <= self.N):
            raise TruncationBreach(f"p_{l} * p_{m} is outside the table (N = {self.N})")
        return self.table[(l, m)]

    def fits(self, mu: FiniteMeasure) -> bool:
        return all(0 <= k <= self.N for k in mu.support)

    # -- serialisation ---------------------------------------------------
    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "unit": self.unit,
            "involution": list(self.involution),
            "table": [
                {"l": l, "m": m, "support": [[k, str(c)] for k, c in self.table[(l, m)].weights.items()]}
                for l in range(self.N + 1)
                for m in range(self.N + 1)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "DiscreteHypergroup":
        d = json.loads(text)
        table = {
            (e["l"], e["m"]): FiniteMeasure({k: GaussianRational.parse(c) for k, c in e["support"]})
            for e in d["table"]
        }
        return cls(d["N"], table, list(d["involution"]), d["unit"])


def from_linearization(family: OrthogonalFamily, N: int) -> DiscreteHypergroup:
    table = {}
    for l in range(N + 1):
        for m in range(N + 1):
            row = linearize_triangular(l, m, family)
            table[(l, m)] = FiniteMeasure(row.coefficients)
    return DiscreteHypergroup(N, table, list(range(N + 1)), 0)


def convolve(H: DiscreteHypergroup, mu: FiniteMeasure, nu: FiniteMeasure) -> FiniteMeasure:
    for k in mu.support + nu.support:
        if not 0 <= k <= H.N:
            raise TruncationBreach(f"index {k} outside {{0..{H.N}}}")
    out: dict[int, GaussianRational] = {}
    for l, a in mu.weights.items():
        for m, b in nu.weights.items():
            ab = a * b
            for k, c in H.entry(l, m).weights.items():
                out[k] = out.get(k, ZERO) + ab * c
    return FiniteMeasure(out)


def involute_measure(H: DiscreteHypergroup, mu: FiniteMeasure) -> FiniteMeasure:
    """``mu*(E) = conj(mu(E^-))``: push forward along the involution, conjugate."""
    out = {}
    for k, v in mu.weights.items():
        if not 0 <= k <= H.N:
            raise TruncationBreach(f"index {k} outside {{0..{H.N}}}")
        out[H.involution[k]] = v.conjugate()
    return FiniteMeasure(out)


def verify_axioms(H: DiscreteHypergroup) -> Report:
    report = Report("verify-hypergroup", {"N": H.N, "unit": H.unit})
    idx = range(H.N + 1)
    p = FiniteMeasure.point
    bar = H.involution

    # structural sanity of the involution
    perm_ok = sorted(bar) == list(idx)
    invol_bad = next((x for x in idx if perm_ok and bar[bar[x]] != x), None)
    report.add("involution", perm_ok and invol_bad is None and bar[H.unit] == H.unit,
               window=H.N + 1, witness={"index": invol_bad, "involution": bar})

    # (H*)
    bad = None
    for l in idx:
        for m in idx:
            why = H.entry(l, m).probability_violation()
            if why is not None:
                bad = {"l": l, "m": m, **why}
                break
        if bad:
            break
    report.add("H*", bad is None, window=(H.N + 1) ** 2, witness=bad)

    # (H1) on triples whose intermediate supports fit
    checked, bad = 0, None
    for a in idx:
        for b in idx:
            ab = H.entry(a, b)
            if not H.fits(ab):
                continue
            for c in idx:
                bc = H.entry(b, c)
                if not H.fits(bc):
                    continue
                left = convolve(H, p(a), bc)
                right = convolve(H, ab, p(c))
                checked += 1
                if left != right and bad is None:
                    bad = {"triple": [a, b, c]}
    report.add("H1", bad is None, window=checked, witness=bad)

    # (H2): finite support holds by construction of the table
    report.add("H2", True, window=(H.N + 1) ** 2)

    # (H3)
    checked, bad = 0, None
    for a in idx:
        for b in idx:
            ab = H.entry(a, b)
            if not H.fits(ab):
                continue
            checked += 1
            if involute_measure(H, ab) != H.entry(bar[b], bar[a]) and bad is None:
                bad = {"pair": [a, b]}
    report.add("H3", bad is None, window=checked, witness=bad)

    # (H4)
    bad = None
    for x in idx:
        if H.entry(H.unit, x) != p(x) or H.entry(x, H.unit) != p(x):
            bad = {"index": x}
            break
    report.add("H4", bad is None, window=H.N + 1, witness=bad)

    # (H5): e in supp(p_x * p_{bar y}) iff x == y; on the diagonal the
    # weight must be strictly positive
    bad = None
    for x in idx:
        for y in idx:
            w = H.entry(x, bar[y])[H.unit]
            ok = (w.is_real() and w.re > 0) if x == y else not w
            if not ok:
                bad = {"x": x, "y": y, "weight_at_unit": w}
                break
        if bad:
            break
    report.add("H5", bad is None, window=(H.N + 1) ** 2, witness=bad)

    # (H6): the index set is discrete
    report.add("H6", True, window=(H.N + 1) ** 2)
    return report
