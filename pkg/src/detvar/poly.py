"""Exact univariate polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]


class ZeroPolynomial(ValueError):
    pass


class NegativeCoefficient(ValueError):
    pass


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class Convention(enum.Enum):
    """How interspersed zero coefficients are treated by :func:`is_unimodal`."""

    ALL = "all"
    NONZERO = "nonzero"


class Polynomial:
    """Immutable polynomial ``sum c_k t^k`` over the integers.

    Accepts either a coefficient list (index = degree) or a mapping
    degree -> coefficient. Zero coefficients are dropped on construction, so
    the empty mapping is the zero polynomial.

    >>> Polynomial([1, 0, 2]) * Polynomial({1: 1})
    Polynomial({1: 1, 3: 2})
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Union[Iterable[int], Mapping[int, int]] = ()):
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        clean = {}
        for k, c in items:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficient at degree {k} is not an integer: {c!r}")
            if k < 0:
                raise ValueError(f"negative degree {k}")
            if c:
                clean[int(k)] = clean.get(int(k), 0) + c
        self._coeffs = {k: clean[k] for k in sorted(clean) if clean[k]}

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> Polynomial:
        return cls({degree: coeff})

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls({0: c})

    @property
    def degree(self) -> int | None:
        """Largest stored degree, or ``None`` for the zero polynomial."""
        return next(reversed(self._coeffs)) if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, k: int) -> int:
        return self._coeffs.get(k, 0)

    def terms(self) -> list[tuple[int, int]]:
        return list(self._coeffs.items())

    def to_dict(self) -> dict[int, int]:
        return dict(self._coeffs)

    def coefficient_list(self) -> list[int]:
        if self.degree is None:
            return []
        return [self.coeff(k) for k in range(self.degree + 1)]

    @property
    def leading_coeff(self) -> int:
        if self.degree is None:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self._coeffs[self.degree]

    def shift(self, k: int) -> Polynomial:
        """Multiply by ``t**k``."""
        return Polynomial({d + k: c for d, c in self._coeffs.items()})

    def __add__(self, other: Polynomial) -> Polynomial:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> Polynomial:
        return Polynomial.constant(other) - self

    def __mul__(self, other: Polynomial) -> Polynomial:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[int, int] = {}
        for i, a in self._coeffs.items():
            for j, b in other._coeffs.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Polynomial.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: Number) -> Fraction:
        return poly_eval(self, x)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"Polynomial({self._coeffs!r})"

    def format(self, var: str = "t") -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in self._coeffs.items():
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.format()


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_eval(p: Polynomial, x: Number) -> Fraction:
    """Horner evaluation at an exact rational point."""
    x = Fraction(x)
    deg = p.degree
    if deg is None:
        return Fraction(0)
    acc = Fraction(0)
    for k in range(deg, -1, -1):
        acc = acc * x + p.coeff(k)
    return acc


def poly_exact_div(p: Polynomial, d: Polynomial) -> Polynomial:
    """Return ``p / d``; raise :class:`NotDivisible` unless the division is exact."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = p.to_dict()
    dd = d.degree
    lc = d.leading_coeff
    quot: dict[int, int] = {}
    while rem:
        top = max(rem)
        if top < dd:
            break
        c, r = divmod(rem[top], lc)
        if r:
            raise NotDivisible(f"leading coefficient {rem[top]} at degree {top} not divisible by {lc}")
        shift = top - dd
        quot[shift] = c
        for k, b in d.terms():
            v = rem.get(k + shift, 0) - c * b
            if v:
                rem[k + shift] = v
            else:
                rem.pop(k + shift, None)
    if rem:
        raise NotDivisible(f"nonzero remainder {Polynomial(rem)}")
    return Polynomial(quot)


def is_palindromic(p: Polynomial) -> bool:
    if p.is_zero():
        raise ZeroPolynomial("palindromicity is undefined for the zero polynomial")
    deg = p.degree
    return all(p.coeff(k) == p.coeff(deg - k) for k in range(deg + 1))


def _rises_then_falls(seq: list[int]) -> bool:
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i >= len(seq) - 1


def is_unimodal(p: Polynomial, convention: Convention) -> bool:
    """Weak unimodality of the coefficient sequence under an explicit convention.

    ``Convention.ALL`` reads coefficients ``0..degree`` including interior
    zeros; ``Convention.NONZERO`` keeps only the nonzero coefficients, ordered
    by degree.
    """
    if not isinstance(convention, Convention):
        raise TypeError("convention must be a Convention member")
    if any(c < 0 for _, c in p.terms()):
        raise NegativeCoefficient(f"negative coefficient in {p}")
    if convention is Convention.ALL:
        seq = p.coefficient_list()
    else:
        seq = [c for _, c in p.terms()]
    return _rises_then_falls(seq)
