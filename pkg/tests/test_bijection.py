from collections import Counter

import pytest

from minperm import (SkewShape, SkewTableau, compositions_min2,
                     decreasing_run_lengths, enumerate_minimal, is_standard,
                     is_two_regular, perm_to_tableau, shape_from_runs,
                     skew_standard_tableaux, tableau_to_perm)
from minperm.verify import (WORKED_PERM_16, WORKED_TABLEAU_16_ROWS,
                            WORKED_TABLEAU_16_SHAPE)
from minperm.tableaux import format_shape


def test_single_run_is_one_column():
    t = perm_to_tableau((3, 2, 1))
    assert t.rows == ((1,), (2,), (3,))
    assert tableau_to_perm(t) == (3, 2, 1)


def test_length_four_cases():
    assert perm_to_tableau((2, 1, 4, 3)).rows == ((1, 3), (2, 4))
    assert perm_to_tableau((3, 1, 4, 2)).rows == ((1, 2), (3, 4))
    # together these exhaust the two fillings of the 2x2 square
    square = SkewShape((2, 2))
    fillings = {t.rows for t in skew_standard_tableaux(square)}
    assert fillings == {((1, 3), (2, 4)), ((1, 2), (3, 4))}


def test_reverse_of_length_four():
    t = SkewTableau(SkewShape((2, 2)), ((1, 3), (2, 4)))
    assert tableau_to_perm(t) == (2, 1, 4, 3)


def test_worked_sixteen_cell_example():
    t = perm_to_tableau(WORKED_PERM_16)
    assert format_shape(t.shape) == WORKED_TABLEAU_16_SHAPE
    assert t.rows == WORKED_TABLEAU_16_ROWS
    assert tableau_to_perm(t) == WORKED_PERM_16


def test_non_minimal_input_rejected_with_reason():
    with pytest.raises(ValueError, match="position 1 is an ascent"):
        perm_to_tableau((1, 3, 2))
    with pytest.raises(ValueError, match="2143 or 3142"):
        perm_to_tableau((3, 1, 2, 5, 4))


def test_bad_tableaux_rejected():
    not_standard = SkewTableau(SkewShape((2, 2)), ((1, 2), (4, 3)))
    with pytest.raises(ValueError, match="standard"):
        tableau_to_perm(not_standard)
    three_overlap = next(skew_standard_tableaux(SkewShape((3, 3, 3))))
    with pytest.raises(ValueError, match="2-regular"):
        tableau_to_perm(three_overlap)


def test_round_trips_small():
    for n in range(2, 9):
        for w in enumerate_minimal(n):
            t = perm_to_tableau(w)
            assert is_standard(t) and is_two_regular(t)
            assert tableau_to_perm(t) == w


def test_cardinality_per_run_profile():
    for n in range(2, 9):
        by_runs = Counter(decreasing_run_lengths(w) for w in enumerate_minimal(n))
        for parts in range(1, n // 2 + 1):
            for a in compositions_min2(n, parts):
                drawn = shape_from_runs(a).conjugated()
                tableaux = list(skew_standard_tableaux(drawn))
                assert all(is_two_regular(t) for t in tableaux)
                assert len(tableaux) == by_runs[a]
                for t in tableaux:
                    assert perm_to_tableau(tableau_to_perm(t)) == t
