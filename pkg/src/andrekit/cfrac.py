from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

from .enums import CFKind, SeriesType
from .poly import MultiPoly, PolyLike
from .pqnum import pq_binomial, pq_int

Coefficient = Callable[[int], MultiPoly]


def _zero(_: int) -> MultiPoly:
    return MultiPoly.zero()


@dataclass(frozen=True)
class CFSpec:
    """A continued fraction described by its level weights b_i and fall weights lambda_i.

    For J-fractions the moments are weighted Motzkin path counts: an up step weighs 1, a
    level step at height i weighs b_i and a down step from height i weighs lambda_i. For
    S-fractions b is identically zero and the n-th moment counts Dyck paths of semilength n.

    Coefficients are memoised per instance.
    """

    name: str
    kind: CFKind
    b_func: Coefficient
    lam_func: Coefficient
    _cache: dict[tuple[str, int], MultiPoly] = field(default_factory=dict, compare=False, repr=False)

    def b(self, i: int) -> MultiPoly:
        if self.kind is CFKind.S:
            return MultiPoly.zero()
        return self._memo("b", i, self.b_func)

    def lam(self, i: int) -> MultiPoly:
        return self._memo("lam", i, self.lam_func)

    def _memo(self, which: str, i: int, func: Coefficient) -> MultiPoly:
        key = (which, i)
        if key not in self._cache:
            self._cache[key] = func(i)
        return self._cache[key]

    def specialize(self, bindings: Mapping[str, PolyLike]) -> CFSpec:
        """A new fraction whose coefficients are substituted before the path sums are formed."""
        bound = dict(bindings)
        return CFSpec(
            name=self.name,
            kind=self.kind,
            b_func=lambda i: self.b(i).substitute(bound),
            lam_func=lambda i: self.lam(i).substitute(bound),
        )


def jfraction_series(spec: CFSpec, n_max: int) -> list[MultiPoly]:
    """Coefficients mu_0..mu_n_max of the series expansion of a continued fraction.

    J-fractions run the Motzkin path recurrence over lengths 0..n_max. S-fractions run the
    same recurrence without level steps over lengths 0..2*n_max and keep the even lengths.

    Args:
        spec (CFSpec): The continued fraction.
        n_max (int): The highest order required.

    Returns:
        list[MultiPoly]: The moments, index i holding mu_i.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative.")
    if spec.kind is CFKind.S:
        moments = _path_moments(spec, 2 * n_max, with_levels=False)
        return moments[::2]
    return _path_moments(spec, n_max, with_levels=True)


def _path_moments(spec: CFSpec, length: int, with_levels: bool) -> list[MultiPoly]:
    # row[h] is the weight of all prefixes of the current length ending at height h
    row: list[MultiPoly] = [MultiPoly.one()]
    moments = [MultiPoly.one()]
    for m in range(1, length + 1):
        top = min(m, length - m)
        new_row: list[MultiPoly] = []
        for h in range(top + 1):
            total = MultiPoly.zero()
            if h - 1 >= 0 and h - 1 < len(row):
                total = total + row[h - 1]
            if with_levels and h < len(row):
                total = total + row[h] * spec.b(h)
            if h + 1 < len(row):
                total = total + row[h + 1] * spec.lam(h + 1)
            new_row.append(total)
        row = new_row
        moments.append(row[0])
    return moments


def dn_spec() -> CFSpec:
    """b_i = [i+1], lambda_i = binom(i+1, 2) t; the moments are D_{n+1}(p,q,t)."""
    t = MultiPoly.var("t")
    return CFSpec("dn", CFKind.J, lambda i: pq_int(i + 1), lambda i: pq_binomial(i + 1, 2) * t)


def master_spec() -> CFSpec:
    """b_i = (u + t v)[i+1], lambda_i = [i][i+1] t w; the moments are A_{n+1}(p,q,t,u,v,w)."""
    t, u, v, w = (MultiPoly.var(name) for name in "tuvw")
    return CFSpec(
        "master",
        CFKind.J,
        lambda i: (u + t * v) * pq_int(i + 1),
        lambda i: pq_int(i) * pq_int(i + 1) * t * w,
    )


def neg1_spec() -> CFSpec:
    """The dn fraction at p=1, q=-1: b_i = 1 for even i and 0 otherwise, lambda_i = floor((i+1)/2) t."""
    t = MultiPoly.var("t")
    return CFSpec(
        "neg1",
        CFKind.J,
        lambda i: MultiPoly.constant(1 if i % 2 == 0 else 0),
        lambda i: t * ((i + 1) // 2),
    )


def euler_number_spec() -> CFSpec:
    """b_i = i+1, lambda_i = (i+1)i/2; the moments are the Euler numbers E_{n+1}."""
    return CFSpec(
        "euler",
        CFKind.J,
        lambda i: MultiPoly.constant(i + 1),
        lambda i: MultiPoly.constant((i + 1) * i // 2),
    )


def factorial_spec() -> CFSpec:
    """Euler's S-fraction with lambda_i = floor((i+1)/2); the moments are n!."""
    return CFSpec("factorial", CFKind.S, _zero, lambda i: MultiPoly.constant((i + 1) // 2))


def dn_series(n_max: int) -> list[MultiPoly]:
    """D_1 .. D_{n_max+1} as polynomials in p, q, t."""
    return jfraction_series(dn_spec(), n_max)


def master_series(n_max: int) -> list[MultiPoly]:
    """A_1 .. A_{n_max+1} as polynomials in p, q, t, u, v, w."""
    return jfraction_series(master_spec(), n_max)


def neg1_series(n_max: int) -> list[MultiPoly]:
    """D_1(1,-1,t) .. D_{n_max+1}(1,-1,t)."""
    return jfraction_series(neg1_spec(), n_max)


def euler_series(n_max: int) -> list[MultiPoly]:
    """E_1 .. E_{n_max+1} as constant polynomials."""
    return jfraction_series(euler_number_spec(), n_max)


def series_of(series_type: SeriesType, n_max: int) -> list[MultiPoly]:
    """The moments mu_0 .. mu_{n_max} of a named series."""
    if n_max < 0:
        raise ValueError(f"n must be non-negative, got {n_max}.")
    builders = {
        SeriesType.DN: dn_series,
        SeriesType.MASTER: master_series,
        SeriesType.NEG1: neg1_series,
        SeriesType.EULER: euler_series,
    }
    return builders[series_type](n_max)
