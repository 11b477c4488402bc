import pytest

from friezelab.chebyshev import chebyshev_S, chebyshev_T
from friezelab.laurent import LaurentPoly, parse_laurent


def test_T_base_cases():
    assert chebyshev_T(0, 5) == 2
    assert chebyshev_T(1, 5) == 5


def test_T_at_14():
    assert chebyshev_T(2, 14) == 194
    # 14*194 - 14, checked by hand
    assert chebyshev_T(3, 14) == 2702


def test_S_base_cases():
    assert chebyshev_S(-2, 9) == -1
    assert chebyshev_S(-1, 9) == 0
    assert chebyshev_S(0, 9) == 1
    assert chebyshev_S(1, 9) == 9


def test_S_at_14():
    assert chebyshev_S(2, 14) == 195
    assert chebyshev_S(3, 14) == 2716


def test_S_at_two_counts_up():
    for k in range(-2, 15):
        assert chebyshev_S(k, 2) == k + 1


def test_invalid_indices():
    with pytest.raises(ValueError):
        chebyshev_T(-1, 3)
    with pytest.raises(ValueError):
        chebyshev_S(-3, 3)


def test_symbolic_first_second_kind_identity():
    x = LaurentPoly.variable(("x",), "x")
    for k in range(0, 21):
        assert chebyshev_T(k, x) == chebyshev_S(k, x) - chebyshev_S(k - 2, x)


def test_symbolic_small_polynomials():
    x = LaurentPoly.variable(("x",), "x")
    assert chebyshev_T(2, x) == parse_laurent("x^2 - 2", ("x",))
    assert chebyshev_T(3, x) == parse_laurent("x^3 - 3*x", ("x",))
    assert chebyshev_S(2, x) == parse_laurent("x^2 - 1", ("x",))
    assert chebyshev_S(3, x) == parse_laurent("x^3 - 2*x", ("x",))
