"""
Exact Laurent polynomials with integer coefficients in 2 or 3 variables.

A Laurent polynomial is stored as {exponent tuple: nonzero coefficient}. Products and
quotients shift both operands into the polynomial ring (subtracting the minimal exponent
in each variable), multiply or divide there with sympy's sparse ``PolyElement`` over ZZ,
and shift back. A quotient that is not exact raises InexactDivisionError; nothing is
ever rounded or promoted to a rational function.

Text form: terms in graded order (total degree ascending, then exponent tuple
descending), coefficient 1 omitted, ``x1^-1*x2^2``, joined by `` + `` / `` - ``.
"""

import re
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing, ring

from src.core.errors import InexactDivisionError, PreconditionError

Exponents = Tuple[int, ...]
Scalar = Union[int, "LaurentPoly"]


@lru_cache(maxsize=None)
def _poly_ring(nvars: int) -> PolyRing:
    names = ",".join(f"x{i}" for i in range(1, nvars + 1))
    return ring(names, ZZ)[0]


class LaurentPoly(BaseModel):
    model_config = ConfigDict(frozen=True)

    nvars: int
    terms: Dict[Exponents, int] = {}

    @field_validator("terms")
    @classmethod
    def _drop_zeros(cls, v):
        return {tuple(e): int(c) for e, c in v.items() if c}

    @model_validator(mode="after")
    def _arity(self):
        if self.nvars not in (2, 3):
            raise ValueError("Laurent polynomials here have 2 or 3 variables")
        if any(len(e) != self.nvars for e in self.terms):
            raise ValueError(f"exponent vectors must have length {self.nvars}")
        return self

    # construction

    @classmethod
    def constant(cls, c: int, nvars: int) -> "LaurentPoly":
        return cls(nvars=nvars, terms={(0,) * nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "LaurentPoly":
        """x_i, 1-based."""
        exps = [0] * nvars
        exps[i - 1] = 1
        return cls(nvars=nvars, terms={tuple(exps): 1})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coefficient: int = 1) -> "LaurentPoly":
        return cls(nvars=len(exponents), terms={tuple(exponents): coefficient})

    # ring structure

    def _coerce(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise PreconditionError(f"cannot combine {self.nvars}- and {other.nvars}-variable polynomials")
            return other
        return LaurentPoly.constant(int(other), self.nvars)

    def __add__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(nvars=self.nvars, terms=out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(nvars=self.nvars, terms={e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return self._coerce(other) - self

    def _shifted(self) -> Tuple[Exponents, PolyElement]:
        """(m, p) with self = x^m * p and p a polynomial not divisible by any x_i."""
        if not self.terms:
            return (0,) * self.nvars, _poly_ring(self.nvars).zero
        low = tuple(min(e[i] for e in self.terms) for i in range(self.nvars))
        shifted = {tuple(x - m for x, m in zip(e, low)): c for e, c in self.terms.items()}
        return low, _poly_ring(self.nvars).from_dict(shifted)

    @classmethod
    def _unshift(cls, nvars: int, low: Exponents, poly: PolyElement) -> "LaurentPoly":
        return cls(nvars=nvars, terms={
            tuple(x + m for x, m in zip(monom, low)): int(c) for monom, c in poly.terms()
        })

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        low_a, a = self._shifted()
        low_b, b = other._shifted()
        return self._unshift(self.nvars, tuple(x + y for x, y in zip(low_a, low_b)), a * b)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            return LaurentPoly.constant(1, self.nvars) / self ** (-k)
        result = LaurentPoly.constant(1, self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def __truediv__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        low_a, a = self._shifted()
        low_b, b = other._shifted()
        try:
            quotient = a.exquo(b)
        except ExactQuotientFailed as e:
            raise InexactDivisionError(f"({self.to_text()}) / ({other.to_text()}) is not a Laurent polynomial") from e
        return self._unshift(self.nvars, tuple(x - y for x, y in zip(low_a, low_b)), quotient)

    # queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def substitute(self, images: Sequence["LaurentPoly"]) -> "LaurentPoly":
        """
        Replace x_i by images[i-1].

        Negative powers become one exact division by the product of the images raised to
        the missing exponents.
        """
        if len(images) != self.nvars:
            raise PreconditionError(f"need {self.nvars} images, got {len(images)}")
        target = images[0].nvars
        low, _ = self._shifted()
        denominator = LaurentPoly.constant(1, target)
        for image, m in zip(images, low):
            if m < 0:
                denominator = denominator * image ** (-m)
        numerator = LaurentPoly(nvars=target)
        for e, c in self.terms.items():
            term = LaurentPoly.constant(c, target)
            for image, x, m in zip(images, e, low):
                term = term * image ** (x - min(m, 0))
            numerator = numerator + term
        return numerator / denominator

    def sorted_terms(self) -> List[Tuple[Exponents, int]]:
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), tuple(-x for x in item[0])))

    # serialization

    def to_terms(self) -> List[list]:
        """JSON-friendly ``[[coefficient, [exponents...]], ...]`` in text order."""
        return [[c, list(e)] for e, c in self.sorted_terms()]

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for index, (exps, c) in enumerate(self.sorted_terms()):
            factors = "*".join(
                f"x{i}" if x == 1 else f"x{i}^{x}"
                for i, x in enumerate(exps, start=1) if x
            )
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = factors
            else:
                body = f"{magnitude}*{factors}"
            if index == 0:
                out.append(f"-{body}" if c < 0 else body)
            else:
                out.append(f"{'-' if c < 0 else '+'} {body}")
        return " ".join(out)

    @classmethod
    def from_text(cls, text: str, nvars: int) -> "LaurentPoly":
        text = text.strip()
        if text == "0":
            return cls(nvars=nvars)
        pieces = re.split(r"\s+([+-])\s+", text)
        signs = ["+"] + pieces[1::2]
        result = cls(nvars=nvars)
        for sign, term in zip(signs, pieces[0::2]):
            negative = sign == "-"
            if term.startswith("-"):
                negative, term = not negative, term[1:]
            result = result + _parse_term(term, nvars) * (-1 if negative else 1)
        return result

    def __str__(self) -> str:
        return self.to_text()


_FACTOR = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def _parse_term(term: str, nvars: int) -> LaurentPoly:
    coefficient = 1
    exps = [0] * nvars
    for factor in term.split("*"):
        if factor.isdigit():
            coefficient *= int(factor)
            continue
        match = _FACTOR.match(factor)
        if not match or not 1 <= int(match.group(1)) <= nvars:
            raise PreconditionError(f"cannot parse factor {factor!r}")
        exps[int(match.group(1)) - 1] += int(match.group(2) or 1)
    return LaurentPoly(nvars=nvars, terms={tuple(exps): coefficient})
