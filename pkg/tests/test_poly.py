import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from andrekit.exceptions import NotDivisibleError
from andrekit.poly import NUM_VARIABLES, MultiPoly, p, q, t, variable_index

small_polys = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * 3).map(lambda key: key + (0,) * (NUM_VARIABLES - 3)),
    st.integers(-5, 5),
    max_size=5,
).map(MultiPoly)


class TestMultiPoly:
    def test_zero_coefficients_are_dropped(self) -> None:
        # Arrange
        key = (1, 0, 0, 0, 0, 0, 0)

        # Act
        poly = MultiPoly([(key, 2), (key, -2)])

        # Assert
        assert poly.is_zero()
        assert poly == 0
        assert poly.degree() == -1

    def test_rejects_negative_exponents(self) -> None:
        # Act + Assert
        with pytest.raises(ValueError):
            MultiPoly({(-1, 0, 0, 0, 0, 0, 0): 1})

    def test_rejects_unknown_variable(self) -> None:
        # Act + Assert
        with pytest.raises(ValueError):
            variable_index("z")

    def test_text_orders_by_degree(self) -> None:
        # Arrange
        poly = 1 + q**2 + p * q + p**2

        # Act
        text = poly.to_text()

        # Assert
        assert text == "p^2 + p*q + q^2 + 1"

    @pytest.mark.parametrize(
        "poly, expected",
        [
            (1 + (p + q + 2) * t, "1 + (p+q+2)*t"),
            (1 + 3 * t + 2 * t**2, "1 + 3*t + 2*t^2"),
            (MultiPoly.one(), "1"),
            (t - t**3, "t - t^3"),
            (MultiPoly.zero(), "0"),
        ],
    )
    def test_text_in_t(self, poly: MultiPoly, expected: str) -> None:
        # Act
        text = poly.to_text_in("t")

        # Assert
        assert text == expected

    def test_substitute_is_simultaneous(self) -> None:
        # Arrange
        poly = p + 2 * q

        # Act
        swapped = poly.substitute({"p": q, "q": p})

        # Assert
        assert swapped == q + 2 * p

    def test_substitute_integers(self) -> None:
        # Arrange
        poly = 1 + (p + q + 2) * t

        # Act
        value = poly.substitute({"p": 1, "q": -1})

        # Assert
        assert value == 1 + 2 * t

    def test_coeff_of(self) -> None:
        # Arrange
        poly = 1 + (p + q) * t + p * t**2

        # Act
        coeff = poly.coeff_of("t", 1)

        # Assert
        assert coeff == p + q

    def test_exact_division(self) -> None:
        # Arrange
        product = (p + q) ** 2 * (p**2 + p * q + q**2 + 1)

        # Act
        quotient = product.exact_div((p + q) ** 2)

        # Assert
        assert quotient == p**2 + p * q + q**2 + 1

    def test_exact_division_with_remainder(self) -> None:
        # Act + Assert
        with pytest.raises(NotDivisibleError):
            (p**2 + 1).exact_div(p + q)

    def test_division_by_zero(self) -> None:
        # Act + Assert
        with pytest.raises(ZeroDivisionError):
            p.exact_div(MultiPoly.zero())

    def test_eval_float_needs_every_variable(self) -> None:
        # Arrange
        poly = p + t

        # Act + Assert
        assert poly.eval_float({"p": 1.0, "t": 0.5}) == pytest.approx(1.5)
        with pytest.raises(ValueError):
            poly.eval_float({"p": 1.0})

    def test_json_is_canonical(self) -> None:
        # Arrange
        poly = 1 + (p + q + 2) * t

        # Act
        text = poly.to_json()

        # Assert
        assert MultiPoly.from_json(text) == poly
        assert MultiPoly.from_json(text).to_json() == text

    def test_leading_term_is_graded(self) -> None:
        # Arrange
        poly = p**3 + p * q * t**2

        # Act
        key, coeff = poly.leading_term()

        # Assert
        assert key == (1, 1, 2, 0, 0, 0, 0)
        assert coeff == 1

    def test_hashable_and_equal(self) -> None:
        # Arrange
        a = (p + q) * (p - q)
        b = p**2 - q**2

        # Act + Assert
        assert a == b
        assert hash(a) == hash(b)
        assert len({a, b}) == 1

    @settings(max_examples=50, deadline=None)
    @given(small_polys, small_polys, small_polys)
    def test_ring_axioms(self, a: MultiPoly, b: MultiPoly, c: MultiPoly) -> None:
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0

    @settings(max_examples=50, deadline=None)
    @given(small_polys, small_polys)
    def test_exact_division_undoes_multiplication(self, a: MultiPoly, b: MultiPoly) -> None:
        if b.is_zero():
            return
        assert (a * b).exact_div(b) == a
