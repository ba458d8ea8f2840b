import csv
import io
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgelfand.linearization import (
    LinearizationRow,
    linearization_table,
    linearize_moment,
    linearize_triangular,
    posdef_check_Z,
    row_checks,
    rows_to_csv,
    rows_to_json,
)
from qgelfand.qpolynomials import OrthogonalFamily, UnsupportedFamily
from qgelfand.scalars import ONE, GaussianRational
from qgelfand.unipoly import UniPoly

F = Fraction
LEG = OrthogonalFamily.legendre(F(1, 2))
AW1 = OrthogonalFamily.askey_wilson(F(1, 2), 1)
indices = st.integers(min_value=0, max_value=6)


def test_row_drops_zeros_and_sorts():
    row = LinearizationRow(1, 1, {2: GaussianRational(1), 0: GaussianRational(0), 1: GaussianRational(2)})
    assert row.support == [1, 2]
    assert row[0] == 0


@pytest.mark.parametrize("family", [LEG, AW1])
@pytest.mark.parametrize("m", range(5))
def test_left_unit(family, m):
    assert linearize_triangular(0, m, family).coefficients == {m: ONE}


def test_one_one_frozen():
    row = linearize_triangular(1, 1, LEG)
    assert row.coefficients == {0: F(16, 273), 1: F(225, 257), 2: F(4624, 70161)}
    assert row.total() == 1


def test_one_one_top_coefficient_by_leading_terms():
    row = linearize_triangular(1, 1, LEG)
    lead1 = LEG.member(1).leading()
    assert row[2] == lead1 * lead1 / LEG.member(2).leading()


@settings(max_examples=25, deadline=None)
@given(indices, indices)
def test_symmetric(l, m):
    assert linearize_triangular(l, m, LEG).coefficients == linearize_triangular(m, l, LEG).coefficients
    assert linearize_triangular(l, m, AW1).coefficients == linearize_triangular(m, l, AW1).coefficients


@settings(max_examples=25, deadline=None)
@given(indices, indices)
def test_moment_equals_triangular(l, m):
    assert linearize_moment(l, m, LEG) == linearize_triangular(l, m, LEG)


def test_moment_accepts_q_parameter():
    assert linearize_moment(0, 0, F(1, 2)).coefficients == {0: ONE}
    assert linearize_moment(1, 2, F(1, 2)) == linearize_triangular(1, 2, LEG)


def test_moment_vanishes_outside_band():
    row = linearize_moment(2, 5, LEG)
    assert all(3 <= k <= 7 for k in row.support)


def test_moment_rejects_askey_wilson():
    with pytest.raises(UnsupportedFamily):
        linearize_moment(1, 1, AW1)


@pytest.mark.parametrize("family", [LEG, AW1, OrthogonalFamily.askey_wilson(F(3, 4), F(1, 2))])
def test_rows_pass_checks(family):
    for row in linearization_table(family, 5):
        assert row_checks(row) == {"nonnegative": True, "sum_is_one": True, "support_in_range": True}
        assert row.is_real()


@pytest.mark.parametrize("l", range(6))
def test_unit_weight_only_on_diagonal(l):
    for m in range(6):
        c0 = linearize_triangular(l, m, LEG)[0]
        assert (c0 > 0) == (l == m)
        if l != m:
            assert c0 == 0


def test_posdef_examples():
    for l in range(4):
        assert posdef_check_Z(LEG.member(l), LEG).positive_definite
        for m in range(4):
            assert posdef_check_Z(LEG.member(l) * LEG.member(m), LEG).positive_definite
    verdict = posdef_check_Z(UniPoly([-1]), LEG)
    assert not verdict.positive_definite
    assert verdict.witness == 0


def test_posdef_witness_index():
    p = LEG.member(0) + LEG.member(2) * -1
    verdict = posdef_check_Z(p, LEG)
    assert (verdict.positive_definite, verdict.witness) == (False, 2)
    imaginary = UniPoly([GaussianRational(0, 1)])
    assert posdef_check_Z(imaginary, LEG).witness == 0


def test_row_checks_detect_negative():
    row = LinearizationRow(1, 1, {0: GaussianRational(2), 2: GaussianRational(-1)})
    assert row_checks(row) == {"nonnegative": False, "sum_is_one": True, "support_in_range": True}
    assert row.negative_entries() == [2]


def test_csv_format():
    text = rows_to_csv(linearization_table(LEG, 1))
    lines = list(csv.reader(io.StringIO(text)))
    assert lines[0] == ["l", "m", "k", "c"]
    assert lines[1] == ["0", "0", "0", "1/1"]
    assert ["1", "1", "0", "16/273"] in lines
    assert text == rows_to_csv(linearization_table(LEG, 1))


def test_json_mirrors_csv():
    rows = linearization_table(LEG, 2)
    data = json.loads(rows_to_json(rows))
    flat = [[d["l"], d["m"], k, c] for d in data for k, c in d["coefficients"]]
    csv_rows = [[int(a), int(b), int(k), c] for a, b, k, c in list(csv.reader(io.StringIO(rows_to_csv(rows))))[1:]]
    assert flat == csv_rows
