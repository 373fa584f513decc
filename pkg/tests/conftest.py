from fractions import Fraction

import pytest
from hypothesis import strategies as st

from leibniz.algebra import Algebra
from leibniz.families import build_R_A, build_sl2


def small_fractions():
    return st.fractions(min_value=-5, max_value=5, max_denominator=4)


def vectors(dim):
    return st.tuples(*[small_fractions() for _ in range(dim)])


@pytest.fixture
def sl2():
    return build_sl2()


@pytest.fixture
def two_dim_lie():
    """[f, x] = f, [x, f] = -f."""
    R, _ = build_R_A(1, [-1])
    return R


@pytest.fixture
def broken_table():
    """[f, x] = f, [x, f] = -2f: fails the Leibniz identity."""
    return Algebra.from_products(['f', 'x'], {(0, 1): {0: 1}, (1, 0): {0: Fraction(-2)}})


@pytest.fixture
def write_json(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return write
