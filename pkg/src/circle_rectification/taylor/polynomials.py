"""
Exact bivariate polynomials in the tangent parameters (k, m).

Coefficients are ``fractions.Fraction`` values so that divisibility by the
fundamental factor f = 1 + k^2 + m^2 is decided without rounding. Floats
enter only through evaluation at real points and through ``from_floats``,
which converts each float exactly.
"""

import math
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from ..utils.exceptions import (
    DegreeTooHighError,
    NonInvertibleLeadingCoefficientError,
    ZeroDivisorError,
)

Monomial = Tuple[int, int]
Scalar = Union[int, Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"Polynomial coefficients must be finite, got {value!r}")
        return Fraction(value)
    raise TypeError(f"Unsupported coefficient type: {type(value).__name__}")


class BivarPoly:
    """
    Polynomial sum c_ij k^i m^j with exact rational coefficients.

    Instances are immutable value objects. Zero coefficients are never
    stored; the zero polynomial has an empty term map and degree -inf.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] = None):
        cleaned: Dict[Monomial, Fraction] = {}
        for (i, j), coefficient in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"Negative exponent in monomial {(i, j)}")
            value = _as_fraction(coefficient)
            if value != 0:
                cleaned[(int(i), int(j))] = value
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("BivarPoly is immutable")

    def __reduce__(self):
        return (BivarPoly, (self._terms,))

    # Construction

    @classmethod
    def constant(cls, value: Scalar) -> "BivarPoly":
        return cls({(0, 0): value})

    @classmethod
    def k(cls) -> "BivarPoly":
        return cls({(1, 0): 1})

    @classmethod
    def m(cls) -> "BivarPoly":
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, i: int, j: int, coefficient: Scalar = 1) -> "BivarPoly":
        return cls({(i, j): coefficient})

    @classmethod
    def linear(cls, a: Scalar, b: Scalar, c: Scalar) -> "BivarPoly":
        """The polynomial a k + b m + c."""
        return cls({(1, 0): a, (0, 1): b, (0, 0): c})

    @classmethod
    def from_floats(cls, terms: Mapping[Monomial, float]) -> "BivarPoly":
        """Build from float coefficients, converting each one exactly."""
        return cls({mono: Fraction(float(value)) for mono, value in terms.items()})

    # Inspection

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> float:
        """Total degree; ``-math.inf`` for the zero polynomial."""
        if not self._terms:
            return -math.inf
        return max(i + j for i, j in self._terms)

    @property
    def degree_k(self) -> float:
        if not self._terms:
            return -math.inf
        return max(i for i, _ in self._terms)

    def coefficient_in_k(self, power: int) -> "BivarPoly":
        """The coefficient of k^power, as a polynomial in m alone."""
        return BivarPoly({(0, j): c for (i, j), c in self._terms.items() if i == power})

    def max_abs_coefficient(self) -> Fraction:
        return max((abs(c) for c in self._terms.values()), default=Fraction(0))

    def linear_coefficients(self) -> Tuple[Fraction, Fraction, Fraction]:
        """
        Return (a, b, c) with self = a k + b m + c.

        Raises:
            DegreeTooHighError: If the degree exceeds 1
        """
        if self.degree > 1:
            raise DegreeTooHighError("Expected a polynomial of degree at most 1",
                                     degree=int(self.degree), limit=1)
        return self.coefficient(1, 0), self.coefficient(0, 1), self.coefficient(0, 0)

    # Evaluation

    def evaluate(self, k, m):
        """
        Evaluate at (k, m).

        Exact for int and Fraction arguments; float arguments give a float.
        """
        if isinstance(k, float) or isinstance(m, float):
            total = 0.0
            for (i, j), c in self._terms.items():
                total += float(c) * (k ** i) * (m ** j)
            return total
        kk, mm = _as_fraction(k), _as_fraction(m)
        return sum((c * kk ** i * mm ** j for (i, j), c in self._terms.items()), Fraction(0))

    __call__ = evaluate

    # Ring operations

    def _coerce(self, other) -> "BivarPoly":
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BivarPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return BivarPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({mono: -c for mono, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                mono = (i1 + i2, j1 + j2)
                terms[mono] = terms.get(mono, Fraction(0)) + c1 * c2
        return BivarPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Exponent must be a non-negative integer")
        result = BivarPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"BivarPoly({to_text(self)!r})"


def to_text(p: BivarPoly) -> str:
    """
    Canonical text form, re-readable by the expression parser.

    Terms are ordered by decreasing total degree, then decreasing power
    of k.
    """
    if p.is_zero():
        return "0"
    ordered = sorted(p.terms.items(), key=lambda item: (-(item[0][0] + item[0][1]), -item[0][0]))
    pieces = []
    for index, ((i, j), c) in enumerate(ordered):
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        factors = []
        if magnitude != 1 or (i == 0 and j == 0):
            factors.append(str(magnitude))
        for name, power in (("k", i), ("m", j)):
            if power == 1:
                factors.append(name)
            elif power > 1:
                factors.append(f"{name}^{power}")
        body = "*".join(factors)
        if index == 0 and sign == "-":
            # a leading '-' negates only the next atom, so "-k^2" would read as (-k)^2
            pieces.append(f"-({body})" if "^" in factors[0] else f"-{body}")
        elif index == 0:
            pieces.append(body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


def fundamental_factor() -> BivarPoly:
    """The factor f = 1 + k^2 + m^2."""
    return BivarPoly({(0, 0): 1, (2, 0): 1, (0, 2): 1})


def poly_divrem(p: BivarPoly, d: BivarPoly) -> Tuple[BivarPoly, BivarPoly]:
    """
    Divide p by d as polynomials in k over Q[m].

    The leading coefficient of d in k must be a nonzero rational constant,
    which holds for f = k^2 + (1 + m^2). The result satisfies
    p = q*d + r exactly with deg_k r < deg_k d.

    Raises:
        ZeroDivisorError: If d is the zero polynomial
        NonInvertibleLeadingCoefficientError: If the leading coefficient of d
            in k depends on m
    """
    if d.is_zero():
        raise ZeroDivisorError("Division by the zero polynomial")
    dk = int(d.degree_k)
    lead = d.coefficient_in_k(dk)
    if lead.degree > 0:
        raise NonInvertibleLeadingCoefficientError(
            "Leading coefficient in k must be a nonzero constant",
            details=to_text(lead),
        )
    inverse = 1 / lead.coefficient(0, 0)

    quotient = BivarPoly()
    remainder = p
    while not remainder.is_zero() and remainder.degree_k >= dk:
        rk = int(remainder.degree_k)
        step = BivarPoly({(rk - dk + i, j): c * inverse
                          for (i, j), c in remainder.coefficient_in_k(rk).terms.items()})
        quotient = quotient + step
        remainder = remainder - step * d
    return quotient, remainder


def divides(d: BivarPoly, p: BivarPoly) -> bool:
    """True iff d divides p exactly (d must satisfy poly_divrem's precondition)."""
    return poly_divrem(p, d)[1].is_zero()


def monomials_up_to(degree: int) -> Iterable[Monomial]:
    """Exponent pairs (i, j) with i + j <= degree, by total degree then i descending."""
    for total in range(degree + 1):
        for i in range(total, -1, -1):
            yield (i, total - i)
