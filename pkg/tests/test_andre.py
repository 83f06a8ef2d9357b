from itertools import combinations, permutations
from typing import Callable

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from andrekit.andre import (
    GammaExpansion,
    andre_series,
    d_poly,
    d_recurrence_table,
    dn_poly,
    enumerate_D,
    enumerate_G,
    eulerian_poly,
    eulerian_poly6,
    gamma_expand,
    gamma_poly,
    is_andre,
    is_andre_xfact,
    verify_corollary_q,
    verify_en_q,
    verify_euler,
    verify_gamma_roundtrip,
    verify_letter_identities,
    verify_main1,
    verify_main2,
    verify_master,
    verify_orbits,
    verify_recognizers,
)
from andrekit.enums import Stat
from andrekit.exceptions import NotGammaExpressibleError
from andrekit.perm import Permutation, mfs_phi
from andrekit.poly import MultiPoly, p, q, t, u, v, w
from andrekit.reports import TheoremReport


class TestRecognisers:
    @pytest.mark.parametrize("text", ["1234", "1423", "3124", "3412", "4123"])
    def test_andre_permutations_of_four(self, text: str) -> None:
        # Arrange
        sigma = Permutation(text)

        # Act + Assert
        assert is_andre(sigma)
        assert is_andre_xfact(sigma)

    @pytest.mark.parametrize("text", ["2134", "1243", "1324", "4312", "2413"])
    def test_non_andre_permutations(self, text: str) -> None:
        # Arrange
        sigma = Permutation(text)

        # Act + Assert
        assert not is_andre(sigma)
        assert not is_andre_xfact(sigma)

    def test_enumerate_D(self) -> None:
        # Act
        andre = enumerate_D(4)

        # Assert
        assert [str(sigma) for sigma in andre] == ["1234", "1423", "3124", "3412", "4123"]
        assert [str(sigma) for sigma in enumerate_D(4, 1)] == ["1423", "3124", "3412", "4123"]

    def test_enumerate_G(self) -> None:
        # Act
        perms = enumerate_G(3, 1)

        # Assert
        assert perms == [Permutation("213"), Permutation("312")]


class TestPolynomials:
    def test_gamma_and_d_of_three(self) -> None:
        # Act + Assert
        assert gamma_poly(3, 1) == p + q
        assert d_poly(3, 1) == 1
        assert gamma_poly(3, 0) == 1

    def test_d_of_five(self) -> None:
        # Act
        d = d_poly(5, 2)

        # Assert
        assert d == p**2 + p * q + q**2 + 1

    def test_eulerian_polynomials(self) -> None:
        # Act + Assert
        assert eulerian_poly(3) == 1 + (2 + p + q) * t + t**2
        assert eulerian_poly6(2) == u + t * v
        assert eulerian_poly6(3) == u**2 + 2 * u * v * t + v**2 * t**2 + (p + q) * t * w

    @pytest.mark.parametrize(
        "n, expected",
        [
            (1, MultiPoly.one()),
            (3, 1 + t),
            (4, 1 + (p + q + 2) * t),
        ],
    )
    def test_dn_poly(self, n: int, expected: MultiPoly) -> None:
        # Act
        poly = dn_poly(n)

        # Assert
        assert poly == expected

    def test_en_q_of_four(self) -> None:
        # Act
        e_4 = dn_poly(4).substitute({"p": 1, "t": 1})

        # Assert
        assert e_4 == 4 + q


class TestGammaExpansion:
    def test_expands_eulerian_polynomial(self) -> None:
        # Act
        expansion = gamma_expand(eulerian_poly(5), 5)

        # Assert
        assert expansion.gammas == (gamma_poly(5, 0), gamma_poly(5, 1), gamma_poly(5, 2))
        assert expansion.reconstruct() == eulerian_poly(5)

    def test_gamma_row_of_seven_at_one(self) -> None:
        # Act
        expansion = gamma_expand(eulerian_poly(7), 7)

        # Assert
        assert [g.substitute({"p": 1, "q": 1}) for g in expansion.gammas] == [1, 114, 720, 272]

    def test_not_expressible(self) -> None:
        # Act + Assert
        with pytest.raises(NotGammaExpressibleError):
            gamma_expand(1 + 2 * t, 3)

    def test_reconstruct(self) -> None:
        # Arrange
        expansion = GammaExpansion(3, (MultiPoly.one(), p + q))

        # Act
        poly = expansion.reconstruct()

        # Assert
        assert poly == eulerian_poly(3)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 9), st.lists(st.integers(-4, 4), min_size=5, max_size=5))
    def test_expansion_recovers_gammas(self, n: int, values: list[int]) -> None:
        gammas = tuple(MultiPoly.constant(value) * (p + q) ** i for i, value in enumerate(values))
        gammas = gammas[: (n - 1) // 2 + 1]
        assert gamma_expand(GammaExpansion(n, gammas).reconstruct(), n).gammas == gammas


class TestRecurrence:
    def test_table_rows(self) -> None:
        # Act
        table = d_recurrence_table(7)

        # Assert
        assert table[1] == [1]
        assert table[2] == [1]
        assert table[3] == [1, 1]
        assert table[4] == [1, 4]
        assert table[5] == [1, 11, 4]
        assert table[6] == [1, 26, 34]
        assert table[7] == [1, 57, 180, 34]


class TestVerifiers:
    @pytest.mark.parametrize(
        "verifier",
        [
            verify_main1,
            verify_main2,
            verify_corollary_q,
            verify_en_q,
            verify_recognizers,
            verify_letter_identities,
            verify_master,
            verify_euler,
            verify_orbits,
            verify_gamma_roundtrip,
        ],
    )
    @pytest.mark.parametrize("n", [1, 2, 5, 6])
    def test_verifiers_pass(self, verifier: Callable[[int], TheoremReport], n: int) -> None:
        # Act
        report = verifier(n)

        # Assert
        assert report.n == n
        assert report.checks > 0

    @pytest.mark.parametrize("verifier", [verify_main1, verify_orbits, verify_recognizers])
    @pytest.mark.parametrize("n", [7, 8])
    def test_verifiers_pass_on_larger_n(
        self, verifier: Callable[[int], TheoremReport], n: int
    ) -> None:
        # Act
        report = verifier(n)

        # Assert
        assert report.n == n
        assert report.checks > 0

    def test_main2_at_nine(self) -> None:
        # Act
        report = verify_main2(9)

        # Assert
        assert report.n == 9
        assert report.checks > 0

    def test_les_at_least_des_at_nine(self) -> None:
        # Act
        series = andre_series(9)

        # Assert
        assert len(series) > 0
        assert (series.column(Stat.LES) >= series.column(Stat.DES)).all()

    def test_orbits_check_every_pair_on_small_n(self) -> None:
        # Act
        report = verify_orbits(3)

        # Assert
        assert report.checks == 2 * 3 + 6 * 3 + 1
        assert report.detail == "3 orbits"

    def test_orbits_commute_on_every_permutation(self) -> None:
        # Arrange
        sigmas = [Permutation(values) for values in permutations(range(1, 6))]

        # Act
        failures = [
            (sigma, a, b)
            for sigma in sigmas
            for a, b in combinations(range(1, 6), 2)
            if mfs_phi(mfs_phi(sigma, a), b) != mfs_phi(mfs_phi(sigma, b), a)
        ]

        # Assert
        assert failures == []
