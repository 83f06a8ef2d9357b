from __future__ import annotations

import json
from collections import defaultdict
from types import MappingProxyType
from typing import Any, Iterable, Iterator, Mapping, Tuple, Union

from .exceptions import NotDivisibleError

VARIABLES: tuple[str, ...] = ("p", "q", "t", "u", "v", "w", "x")
NUM_VARIABLES = len(VARIABLES)

Exponents = Tuple[int, ...]
PolyLike = Union["MultiPoly", int]


def variable_index(name: str) -> int:
    """Returns the position of a variable within every exponent vector.

    Args:
        name (str): One of p, q, t, u, v, w, x.

    Raises:
        ValueError: If the name is not a known variable.

    Returns:
        int: The index into the exponent vector.
    """
    try:
        return VARIABLES.index(name)
    except ValueError:
        supported = ", ".join(VARIABLES)
        raise ValueError(f"{name} is not a supported variable. Supported variables are {supported}.")


def _graded_key(exponents: Exponents) -> tuple[int, Exponents]:
    return (sum(exponents), exponents)


class MultiPoly:
    """A sparse polynomial in the fixed variables p, q, t, u, v, w, x with integer coefficients.

    Terms are held in a dictionary keyed by exponent vector and kept in ascending order of
    exponent vector. Zero coefficients are never stored, so two polynomials are equal exactly
    when their term dictionaries are equal. Instances are immutable and hashable.

    Coefficients are Python integers and never overflow.
    """

    __slots__ = ["_terms", "_hash"]

    def __init__(
        self, terms: Mapping[Exponents, int] | Iterable[tuple[Exponents, int]] | None = None
    ) -> None:
        """Initialises a new polynomial, summing repeated exponent vectors.

        Args:
            terms (Mapping[Exponents, int] | Iterable[tuple[Exponents, int]] | None, optional):
                Exponent vectors of length seven with their coefficients. Defaults to None (zero).

        Raises:
            ValueError: If an exponent vector has the wrong length or a negative entry.
        """
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        accumulated: defaultdict[Exponents, int] = defaultdict(int)
        for exponents, coeff in items:
            key = tuple(int(e) for e in exponents)
            if len(key) != NUM_VARIABLES:
                raise ValueError(f"Exponent vector {key} must have {NUM_VARIABLES} entries.")
            if any(e < 0 for e in key):
                raise ValueError(f"Exponent vector {key} has a negative entry.")
            accumulated[key] += int(coeff)

        self._terms = MultiPoly._clean(accumulated)
        self._hash: int | None = None

    @staticmethod
    def _clean(terms: Mapping[Exponents, int]) -> dict[Exponents, int]:
        return {key: terms[key] for key in sorted(terms) if terms[key] != 0}

    @classmethod
    def _from_terms(cls, terms: Mapping[Exponents, int]) -> MultiPoly:
        poly = cls.__new__(cls)
        poly._terms = MultiPoly._clean(terms)
        poly._hash = None
        return poly

    @classmethod
    def zero(cls) -> MultiPoly:
        return cls._from_terms({})

    @classmethod
    def one(cls) -> MultiPoly:
        return cls.constant(1)

    @classmethod
    def constant(cls, value: int) -> MultiPoly:
        return cls._from_terms({(0,) * NUM_VARIABLES: int(value)})

    @classmethod
    def var(cls, name: str, power: int = 1) -> MultiPoly:
        """The monomial name^power.

        Args:
            name (str): The variable.
            power (int, optional): The exponent. Defaults to 1.

        Returns:
            MultiPoly: The monomial.
        """
        exponents = [0] * NUM_VARIABLES
        exponents[variable_index(name)] = power
        return cls({tuple(exponents): 1})

    @classmethod
    def monomial(cls, coeff: int = 1, **powers: int) -> MultiPoly:
        exponents = [0] * NUM_VARIABLES
        for name, power in powers.items():
            exponents[variable_index(name)] = power
        return cls({tuple(exponents): coeff})

    @property
    def terms(self) -> Mapping[Exponents, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(key) for key in self._terms)

    def constant_term(self) -> int:
        return self._terms.get((0,) * NUM_VARIABLES, 0)

    def degree(self, name: str | None = None) -> int:
        """The total degree, or the degree in one variable. The zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if name is None:
            return max(sum(key) for key in self._terms)
        idx = variable_index(name)
        return max(key[idx] for key in self._terms)

    def variables(self) -> tuple[str, ...]:
        """The variables that occur with a non-zero exponent."""
        used = [any(key[i] for key in self._terms) for i in range(NUM_VARIABLES)]
        return tuple(name for name, is_used in zip(VARIABLES, used) if is_used)

    def leading_term(self) -> tuple[Exponents, int]:
        """The leading term under graded lexicographic order."""
        if not self._terms:
            raise ValueError("The zero polynomial has no leading term.")
        key = max(self._terms, key=_graded_key)
        return key, self._terms[key]

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponents, int]]:
        return iter(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, obj: object) -> bool:
        other = _coerce(obj)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, obj: PolyLike) -> MultiPoly:
        other = _coerce(obj)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return MultiPoly._from_terms(terms)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._from_terms({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, obj: PolyLike) -> MultiPoly:
        other = _coerce(obj)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, obj: PolyLike) -> MultiPoly:
        return (-self) + obj

    def __mul__(self, obj: PolyLike) -> MultiPoly:
        other = _coerce(obj)
        if other is None:
            return NotImplemented
        terms: defaultdict[Exponents, int] = defaultdict(int)
        for k0, c0 in self._terms.items():
            for k1, c1 in other._terms.items():
                terms[tuple(a + b for a, b in zip(k0, k1))] += c0 * c1
        return MultiPoly._from_terms(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> MultiPoly:
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials.")
        result = MultiPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def substitute(self, bindings: Mapping[str, PolyLike]) -> MultiPoly:
        """Simultaneously replaces variables by polynomials (or integers).

        Unbound variables keep their exponents.

        Args:
            bindings (Mapping[str, PolyLike]): Variable name to replacement.

        Returns:
            MultiPoly: The substituted polynomial.
        """
        replacements: dict[int, MultiPoly] = {}
        for name, value in bindings.items():
            replacement = _coerce(value)
            if replacement is None:
                raise TypeError(f"Cannot substitute {value!r} for {name}.")
            replacements[variable_index(name)] = replacement

        powers: dict[tuple[int, int], MultiPoly] = {}
        terms: defaultdict[Exponents, int] = defaultdict(int)
        for key, coeff in self._terms.items():
            kept = list(key)
            factor = MultiPoly.constant(coeff)
            for idx, replacement in replacements.items():
                power = key[idx]
                if power == 0:
                    continue
                kept[idx] = 0
                if (idx, power) not in powers:
                    powers[(idx, power)] = replacement**power
                factor = factor * powers[(idx, power)]
            for sub_key, sub_coeff in factor._terms.items():
                terms[tuple(a + b for a, b in zip(kept, sub_key))] += sub_coeff
        return MultiPoly._from_terms(terms)

    def coeff_of(self, name: str, power: int) -> MultiPoly:
        """The coefficient of name^power, as a polynomial in the remaining variables."""
        idx = variable_index(name)
        terms: dict[Exponents, int] = {}
        for key, coeff in self._terms.items():
            if key[idx] == power:
                terms[key[:idx] + (0,) + key[idx + 1 :]] = coeff
        return MultiPoly._from_terms(terms)

    def exact_div(self, divisor: MultiPoly) -> MultiPoly:
        """Divides exactly, by repeatedly cancelling leading terms in graded lex order.

        Args:
            divisor (MultiPoly): A non-zero polynomial.

        Raises:
            ZeroDivisionError: If the divisor is zero.
            NotDivisibleError: If a non-zero remainder is left.

        Returns:
            MultiPoly: The quotient.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("Division by the zero polynomial.")

        lead_key, lead_coeff = divisor.leading_term()
        quotient: dict[Exponents, int] = {}
        remainder = self
        while remainder:
            key, coeff = remainder.leading_term()
            shift = tuple(a - b for a, b in zip(key, lead_key))
            if any(e < 0 for e in shift) or coeff % lead_coeff != 0:
                raise NotDivisibleError(f"{divisor} does not divide {self}.")
            factor = coeff // lead_coeff
            quotient[shift] = factor
            remainder = remainder - MultiPoly._from_terms({shift: factor}) * divisor

        return MultiPoly._from_terms(quotient)

    def eval_float(self, point: Mapping[str, float]) -> float:
        """Evaluates numerically. Every variable that occurs must be bound."""
        values = [0.0] * NUM_VARIABLES
        for name in self.variables():
            if name not in point:
                raise ValueError(f"No value supplied for variable {name}.")
            values[variable_index(name)] = float(point[name])

        total = 0.0
        for key, coeff in self._terms.items():
            value = float(coeff)
            for idx, power in enumerate(key):
                if power:
                    value *= values[idx] ** power
            total += value
        return total

    def to_text(self, compact: bool = False) -> str:
        """Human readable form: terms by descending total degree, then descending exponent vector.

        e.g. p^2 + p*q + q^2 + 1, or p^2+p*q+q^2+1 when compact.
        """
        if not self._terms:
            return "0"
        ordered = sorted(self._terms, key=_graded_key, reverse=True)
        plus, minus = ("+", "-") if compact else (" + ", " - ")
        pieces: list[str] = []
        for i, key in enumerate(ordered):
            coeff = self._terms[key]
            body = _monomial_body(abs(coeff), key)
            if i == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"{minus if coeff < 0 else plus}{body}")
        return "".join(pieces)

    def to_text_in(self, name: str) -> str:
        """Groups by ascending powers of one variable, e.g. 1 + (p+q+2)*t + t^2."""
        if not self._terms:
            return "0"
        pieces: list[tuple[bool, str]] = []
        for power in range(self.degree(name) + 1):
            coeff = self.coeff_of(name, power)
            if coeff.is_zero():
                continue
            if power == 0:
                pieces.append((False, coeff.to_text(compact=True)))
                continue
            symbol = name if power == 1 else f"{name}^{power}"
            if len(coeff) > 1:
                pieces.append((False, f"({coeff.to_text(compact=True)})*{symbol}"))
                continue
            key, value = next(iter(coeff))
            body = _monomial_body(abs(value), key)
            text = symbol if body == "1" else f"{body}*{symbol}"
            pieces.append((value < 0, text))

        first_negative, first_text = pieces[0]
        parts = [f"-{first_text}" if first_negative else first_text]
        for negative, text in pieces[1:]:
            parts.append(f" - {text}" if negative else f" + {text}")
        return "".join(parts)

    def to_json_obj(self) -> list[dict[str, Any]]:
        return [{"coeff": str(coeff), "exponents": list(key)} for key, coeff in self._terms.items()]

    def to_json(self) -> str:
        """Canonical JSON: parsing and re-serialising gives identical bytes."""
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: list[dict[str, Any]]) -> MultiPoly:
        return cls((tuple(term["exponents"]), int(term["coeff"])) for term in obj)

    @classmethod
    def from_json(cls, text: str) -> MultiPoly:
        return cls.from_json_obj(json.loads(text))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()})"


def _monomial_body(magnitude: int, key: Exponents) -> str:
    factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(VARIABLES, key) if e]
    if not factors:
        return str(magnitude)
    product = "*".join(factors)
    return product if magnitude == 1 else f"{magnitude}*{product}"


def _coerce(value: object) -> MultiPoly | None:
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return MultiPoly.constant(value)
    return None


p = MultiPoly.var("p")
q = MultiPoly.var("q")
t = MultiPoly.var("t")
u = MultiPoly.var("u")
v = MultiPoly.var("v")
w = MultiPoly.var("w")
x = MultiPoly.var("x")
