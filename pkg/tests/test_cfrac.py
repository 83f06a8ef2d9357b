from math import factorial

import pytest

from andrekit.cfrac import (
    dn_series,
    dn_spec,
    euler_series,
    factorial_spec,
    jfraction_series,
    master_series,
    neg1_series,
    series_of,
)
from andrekit.enums import SeriesType
from andrekit.poly import MultiPoly, p, q, t, u, v, w


class TestJFractionSeries:
    def test_dn_series_low_orders(self) -> None:
        # Act
        series = dn_series(3)

        # Assert
        assert series[0] == 1
        assert series[1] == 1
        assert series[2] == 1 + t
        assert series[3] == 1 + (p + q + 2) * t

    def test_dn_series_order_zero(self) -> None:
        # Act
        series = dn_series(0)

        # Assert
        assert series == [MultiPoly.one()]

    def test_master_series_low_orders(self) -> None:
        # Act
        series = master_series(2)

        # Assert
        assert series[0] == 1
        assert series[1] == u + t * v
        assert series[2] == (u + t * v) ** 2 + (p + q) * t * w

    def test_neg1_series(self) -> None:
        # Act
        series = neg1_series(4)

        # Assert
        assert series[4] == 1 + 3 * t + 2 * t**2

    def test_euler_numbers(self) -> None:
        # Act
        series = euler_series(9)

        # Assert
        assert [m.constant_term() for m in series] == [1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521]

    @pytest.mark.parametrize("n", range(7))
    def test_factorial_s_fraction(self, n: int) -> None:
        # Act
        moments = jfraction_series(factorial_spec(), n)

        # Assert
        assert moments[n] == factorial(n)

    def test_specialize_before_expanding(self) -> None:
        # Arrange
        spec = dn_spec().specialize({"p": 1, "q": -1})

        # Act
        series = jfraction_series(spec, 6)

        # Assert
        assert series == neg1_series(6)

    def test_dn_at_one_gives_euler_numbers(self) -> None:
        # Act
        series = dn_series(6)

        # Assert
        assert [m.substitute({"p": 1, "q": 1, "t": 1}) for m in series] == euler_series(6)

    def test_negative_order_raises(self) -> None:
        # Act + Assert
        with pytest.raises(ValueError):
            jfraction_series(dn_spec(), -1)


class TestSeriesOf:
    @pytest.mark.parametrize(
        "series_type, expected",
        [
            (SeriesType.DN, 1 + (p + q + 2) * t),
            (SeriesType.NEG1, 1 + 2 * t),
            (SeriesType.EULER, MultiPoly.constant(5)),
        ],
    )
    def test_series_of(self, series_type: SeriesType, expected: MultiPoly) -> None:
        # Act
        moments = series_of(series_type, 3)

        # Assert
        assert len(moments) == 4
        assert moments[3] == expected

    def test_rejects_negative_n(self) -> None:
        # Act + Assert
        with pytest.raises(ValueError):
            series_of(SeriesType.DN, -1)
