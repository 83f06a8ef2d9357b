from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial

import numpy as np

from . import kernels
from .cfrac import dn_series, euler_series, factorial_spec, jfraction_series, master_series
from .enums import LetterClass, Stat
from .exceptions import NotDivisibleError, NotGammaExpressibleError, TheoremViolationError
from .generating import RES_LES_DES, ExponentSpec, GeneratingFunctionBuilder, PermutationSeries
from .perm import Permutation, classify_letters, des, les, mfs_orbit, mfs_phi, res, x_factorization
from .poly import MultiPoly
from .reports import TheoremReport, check_identity

GAMMA_EXPONENTS: ExponentSpec = {"p": {Stat.RES: 1}, "q": {Stat.LES: 1}}
D_EXPONENTS: ExponentSpec = {"p": {Stat.RES: 1}, "q": {Stat.LES: 1, Stat.DES: -1}}
SIX_EXPONENTS: ExponentSpec = {
    **RES_LES_DES,
    "u": {Stat.DOUBLE_ASCENT: 1},
    "v": {Stat.DOUBLE_DESCENT: 1},
    "w": {Stat.VALLEY: 1},
}

_builder = GeneratingFunctionBuilder()


def is_andre(sigma: Permutation) -> bool:
    """True when every restriction sigma_[k] is free of double descents."""
    return bool(kernels.is_andre(sigma.vector))


def is_andre_xfact(sigma: Permutation) -> bool:
    """The x-factorization criterion: no double descents, ends with an ascent, and every valley
    x has min(w2) > min(w4)."""
    classes = classify_letters(sigma)
    if any(cls is LetterClass.DOUBLE_DESCENT for cls in classes.values()):
        return False
    n = len(sigma)
    if n >= 2 and sigma[n - 2] > sigma[n - 1]:
        return False
    for letter, cls in classes.items():
        if cls is LetterClass.VALLEY:
            fact = x_factorization(sigma, letter)
            if min(fact.w2) < min(fact.w4):
                return False
    return True


def andre_series(n: int, k: int | None = None) -> PermutationSeries:
    series = PermutationSeries.symmetric_group(n).andre()
    return series if k is None else series[series.column(Stat.DES) == k]


def g_series(n: int, k: int | None = None) -> PermutationSeries:
    series = PermutationSeries.symmetric_group(n).without_double_descents()
    return series if k is None else series.with_valleys(k)


def enumerate_D(n: int, k: int | None = None) -> list[Permutation]:
    """André permutations of [n] (with k descents when k is given), in lexicographic order."""
    return list(andre_series(n, k))


def enumerate_G(n: int, k: int | None = None) -> list[Permutation]:
    """Permutations of [n] without double descents (with k valleys when k is given)."""
    return list(g_series(n, k))


def gamma_poly(n: int, k: int) -> MultiPoly:
    """gamma_{n,k}(p,q): the sum of p^res q^les over G_{n,k}."""
    return _builder.build(g_series(n, k), GAMMA_EXPONENTS)


def d_poly(n: int, k: int) -> MultiPoly:
    """d_{n,k}(p,q): the sum of p^res q^(les-k) over D_{n,k}."""
    return _builder.build(andre_series(n, k), D_EXPONENTS)


def eulerian_poly(n: int) -> MultiPoly:
    """A_n(p,q,t): the sum of p^res q^les t^des over S_n."""
    return _builder.build(PermutationSeries.symmetric_group(n), RES_LES_DES)


def eulerian_poly6(n: int) -> MultiPoly:
    """A_n(p,q,t,u,v,w), refining A_n by double ascents (u), double descents (v) and valleys (w)."""
    return _builder.build(PermutationSeries.symmetric_group(n), SIX_EXPONENTS)


@lru_cache(maxsize=None)
def dn_poly(n: int) -> MultiPoly:
    """D_n(p,q,t) from its continued fraction."""
    return dn_series(n - 1)[n - 1]


@dataclass(frozen=True)
class GammaExpansion:
    n: int
    gammas: tuple[MultiPoly, ...]
    variable: str = "t"

    def reconstruct(self) -> MultiPoly:
        """sum_k gamma_k t^k (1+t)^(n-1-2k)."""
        var = MultiPoly.var(self.variable)
        total = MultiPoly.zero()
        for k, gamma in enumerate(self.gammas):
            total = total + gamma * var**k * (1 + var) ** (self.n - 1 - 2 * k)
        return total


def gamma_expand(h: MultiPoly, n: int, variable: str = "t") -> GammaExpansion:
    """Finds gamma_k with h = sum_k gamma_k t^k (1+t)^(n-1-2k), peeling off the lowest power of t.

    Args:
        h (MultiPoly): A polynomial of degree at most n-1 in the variable.
        n (int): Sets the symmetry centre (n-1)/2.
        variable (str, optional): Defaults to "t".

    Raises:
        NotGammaExpressibleError: If a remainder is left over.

    Returns:
        GammaExpansion: The coefficients gamma_0 .. gamma_floor((n-1)/2).
    """
    var = MultiPoly.var(variable)
    residual = h
    gammas: list[MultiPoly] = []
    for k in range((n - 1) // 2 + 1):
        gamma = residual.coeff_of(variable, k)
        gammas.append(gamma)
        residual = residual - gamma * var**k * (1 + var) ** (n - 1 - 2 * k)

    if not residual.is_zero():
        raise NotGammaExpressibleError(f"{h} is not gamma-expressible around (n-1)/2 with n={n}.")
    return GammaExpansion(n, tuple(gammas), variable)


def d_recurrence_table(n_max: int) -> dict[int, list[int]]:
    """d_{n,k} at p=q=1 from d_{n,k} = (k+1) d_{n-1,k} + (n-2k) d_{n-1,k-1}, with d_{1,0} = 1."""
    table: dict[int, list[int]] = {1: [1]}
    for n in range(2, n_max + 1):
        previous = table[n - 1]

        def at(k: int) -> int:
            return previous[k] if 0 <= k < len(previous) else 0

        table[n] = [(k + 1) * at(k) + (n - 2 * k) * at(k - 1) for k in range((n - 1) // 2 + 1)]
    return table


def verify_main1(n: int) -> TheoremReport:
    """A_n is gamma-positive with gamma_{n,k} = (p+q)^k d_{n,k}(p,q), and |G_{n,k}| = 2^k |D_{n,k}|."""
    pq = MultiPoly.var("p") + MultiPoly.var("q")
    expansion = gamma_expand(eulerian_poly(n), n)
    checks = 0
    for k, gamma in enumerate(expansion.gammas):
        check_identity("gamma coefficient", n, gamma, gamma_poly(n, k), k)
        try:
            quotient = gamma.exact_div(pq**k)
        except NotDivisibleError:
            raise TheoremViolationError("(p+q)^k divides gamma", n, gamma, pq**k, k)
        check_identity("gamma = (p+q)^k d", n, quotient, d_poly(n, k), k)
        check_identity("|G| = 2^k |D|", n, len(g_series(n, k)), 2**k * len(andre_series(n, k)), k)
        checks += 4
    return TheoremReport("main1", n, checks, f"{len(expansion.gammas)} gamma coefficients")


def verify_main2(n: int) -> TheoremReport:
    """The continued fraction D_n agrees with both André sums."""
    t = MultiPoly.var("t")
    from_fraction = dn_poly(n)
    from_andre = _builder.build(andre_series(n), {**D_EXPONENTS, "t": {Stat.DES: 1}})
    from_d = MultiPoly.zero()
    for k in range((n - 1) // 2 + 1):
        from_d = from_d + d_poly(n, k) * t**k
    check_identity("D_n fraction = sum over D_n", n, from_fraction, from_andre)
    check_identity("D_n fraction = sum_k d_{n,k} t^k", n, from_fraction, from_d)
    return TheoremReport("main2", n, 2, from_fraction.to_text_in("t"))


def verify_corollary_q(n: int) -> TheoremReport:
    """The inv-exc Eulerian polynomial in both of its gamma forms."""
    q, t = MultiPoly.var("q"), MultiPoly.var("t")
    lhs = _builder.build(
        PermutationSeries.symmetric_group(n), {"q": {Stat.INV: 1, Stat.EXC: -1}, "t": {Stat.EXC: 1}}
    )
    first = MultiPoly.zero()
    second = MultiPoly.zero()
    checks = 0
    for k in range((n - 1) // 2 + 1):
        shape = t**k * (1 + t) ** (n - 1 - 2 * k)
        first = first + gamma_poly(n, k).substitute({"p": q**2, "q": q}) * shape
        d_q = _builder.build(andre_series(n, k), {"q": {Stat.RES: 2, Stat.LES: 1}})
        expected = q**k * d_poly(n, k).substitute({"p": q**2})
        check_identity("d_{n,k}(q) = q^k d_{n,k}(q^2,q)", n, d_q, expected, k)
        second = second + (1 + q) ** k * d_q * shape
        checks += 1
    check_identity("inv-exc gamma form", n, lhs, first)
    check_identity("inv-exc André form", n, lhs, second)
    return TheoremReport("corollary-q", n, checks + 2)


def verify_en_q(n: int) -> TheoremReport:
    """E_n(q) = D_n(1,q,1) = D_n(q,1,1) = sum q^res = sum q^(les-des) over D_n."""
    q = MultiPoly.var("q")
    dn = dn_poly(n)
    e_n = dn.substitute({"p": 1, "t": 1})
    series = andre_series(n)
    check_identity("D_n(1,q,1) = D_n(q,1,1)", n, e_n, dn.substitute({"p": q, "q": 1, "t": 1}))
    check_identity("E_n(q) = sum q^res", n, e_n, _builder.build(series, {"q": {Stat.RES: 1}}))
    by_les = _builder.build(series, {"q": {Stat.LES: 1, Stat.DES: -1}})
    check_identity("E_n(q) = sum q^(les-des)", n, e_n, by_les)
    return TheoremReport("en-q", n, 3, e_n.to_text())


def verify_recognizers(n: int) -> TheoremReport:
    """Both André recognisers agree, restrictions stay André, and les >= des on D_n."""
    andre_count = 0
    for sigma in PermutationSeries.symmetric_group(n):
        by_restriction = is_andre(sigma)
        by_factorization = is_andre_xfact(sigma)
        check_identity(
            "André recognisers agree", n, (str(sigma), by_restriction), (str(sigma), by_factorization)
        )
        if by_restriction:
            andre_count += 1
            for k in range(1, n + 1):
                check_identity("restriction is André", n, is_andre(sigma.restriction(k)), True, k)

    series = andre_series(n)
    les_dominates = series.column(Stat.LES) >= series.column(Stat.DES)
    check_identity("les >= des on D_n", n, bool(les_dominates.all()), True)
    check_identity("|D_n| = E_n", n, andre_count, euler_series(n - 1)[n - 1].constant_term())
    return TheoremReport("xfact", n, factorial(n) + 2)


def verify_letter_identities(n: int) -> TheoremReport:
    """des = valley + double descent, and peak = valley + 1, on every permutation of S_n."""
    series = PermutationSeries.symmetric_group(n)
    valleys = series.column(Stat.VALLEY)
    descents_split = series.column(Stat.DES) == valleys + series.column(Stat.DOUBLE_DESCENT)
    check_identity("des = val + dd", n, bool(descents_split.all()), True)
    check_identity("pk = val + 1", n, bool((series.column(Stat.PEAK) == valleys + 1).all()), True)
    check_identity("les(sigma) = 13-2(complement)", n, _les_by_complement(series), True)
    return TheoremReport("letter identities", n, 3)


def _les_by_complement(series: PermutationSeries) -> bool:
    complement = PermutationSeries((series.n + 1 - series.matrix).astype(np.int8))
    return bool((series.column(Stat.LES) == complement.column(Stat.THIRTEEN_TWO)).all())


def verify_master(n: int) -> TheoremReport:
    """The master fraction against enumeration, its gamma form, and two specialisations."""
    p, q, t, u, v, w = (MultiPoly.var(name) for name in "pqtuvw")
    six = eulerian_poly6(n)
    check_identity("master fraction = six-variable sum", n, master_series(n - 1)[n - 1], six)
    collapsed = six.substitute({"u": 1, "v": 1, "w": 1})
    check_identity("A_n(p,q,t,1,1,1) = A_n(p,q,t)", n, collapsed, eulerian_poly(n))

    gamma_form = MultiPoly.zero()
    d_sum = MultiPoly.zero()
    for k in range((n - 1) // 2 + 1):
        gamma_form = gamma_form + gamma_poly(n, k) * (t * w) ** k * (u + v * t) ** (n - 1 - 2 * k)
        d_sum = d_sum + d_poly(n, k) * t**k
    check_identity("six-variable gamma form", n, six, gamma_form)

    specialised = six.substitute({"t": p + q, "u": 0, "v": 1, "w": t})
    check_identity("A_n(p,q,p+q,0,1,t)", n, specialised, (p + q) ** (n - 1) * d_sum)
    return TheoremReport("master", n, 4)


def verify_euler(n: int) -> TheoremReport:
    """D_n(1,1,1), the Euler-number fraction and the d recurrence agree.

    Also checks that the factorial S-fraction gives n!.
    """
    e_n = dn_poly(n).substitute({"p": 1, "q": 1, "t": 1})
    from_fraction = euler_series(n - 1)[n - 1]
    check_identity("D_n(1,1,1) = E_n", n, e_n, from_fraction)
    row_sum = sum(d_recurrence_table(n)[n])
    check_identity("sum_k d_{n,k} = E_n", n, row_sum, from_fraction.constant_term())
    moment = jfraction_series(factorial_spec(), n)[n]
    check_identity("factorial S-fraction", n, moment, MultiPoly.constant(factorial(n)))
    return TheoremReport("euler", n, 3, str(from_fraction))


def verify_orbits(n: int, commute_limit: int = 6) -> TheoremReport:
    """Each MFS orbit sums to p^res q^les t^des (1+t)^(n-1-2des) of its representative, and the
    orbits of the permutations without double descents partition S_n.

    Up to commute_limit, the actions of every pair of letters are checked to commute on every
    permutation of S_n. Past it, only the representatives are checked.
    """
    t = MultiPoly.var("t")
    covered: set[Permutation] = set()
    representatives = enumerate_G(n)
    checks = 0
    for representative in representatives:
        orbit = mfs_orbit(representative)
        check_identity("representative has no double descents", n, orbit.representative, representative)
        descents = des(representative)
        members = PermutationSeries.from_permutations(list(orbit.members), n)
        expected = MultiPoly.monomial(p=res(representative), q=les(representative), t=descents)
        expected = expected * (1 + t) ** (n - 1 - 2 * descents)
        check_identity("orbit sum", n, _builder.build(members, RES_LES_DES), expected)
        checks += 2
        covered.update(orbit.members)

    if n <= commute_limit:
        sigmas = [Permutation(values) for values in permutations(range(1, n + 1))]
    else:
        sigmas = list(representatives)
    for sigma in sigmas:
        for a, b in combinations(range(1, n + 1), 2):
            one_way = mfs_phi(mfs_phi(sigma, a), b)
            other_way = mfs_phi(mfs_phi(sigma, b), a)
            check_identity("MFS actions commute", n, one_way, other_way)
            checks += 1

    check_identity("orbits partition S_n", n, len(covered), factorial(n))
    return TheoremReport("orbit", n, checks + 1, f"{len(representatives)} orbits")


def verify_gamma_roundtrip(n: int, seed: int = 13) -> TheoremReport:
    """gamma_expand recovers randomly chosen gamma coefficients from their palindromic sum."""
    rng = random.Random(seed + n)
    gammas = tuple(
        MultiPoly.monomial(rng.randint(1, 5), p=rng.randint(0, 3), q=rng.randint(0, 3))
        + rng.randint(0, 3)
        for _ in range((n - 1) // 2 + 1)
    )
    h = GammaExpansion(n, gammas).reconstruct()
    check_identity("gamma_expand round trip", n, gamma_expand(h, n).gammas, gammas)
    return TheoremReport("gamma-roundtrip", n, len(gammas))
