from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from pavingtools import linalg

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def matrices(draw):
    rows = draw(st.integers(1, 5))
    cols = draw(st.integers(1, 5))
    base = draw(st.lists(st.lists(rationals, min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    # append combinations of earlier rows so rank deficiency is common
    extra = draw(st.integers(0, 2))
    for _ in range(extra):
        a, b = draw(rationals), draw(rationals)
        i, j = draw(st.integers(0, rows - 1)), draw(st.integers(0, rows - 1))
        base.append([a * x + b * y for x, y in zip(base[i], base[j])])
    return base


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_matches_sympy(rows):
    assert linalg.rank(rows) == sympy.Matrix(rows).rank()


def test_rank_examples():
    assert linalg.rank([]) == 0
    assert linalg.rank([[0, 0], [0, 0]]) == 0
    assert linalg.rank([[1, 2], [2, 4]]) == 1
    assert linalg.rank([[Fraction(1, 2), 1], [1, 2], [0, 1]]) == 2
    assert linalg.rank([[0, 1, 2], [0, 2, 4], [1, 0, 0]]) == 2
