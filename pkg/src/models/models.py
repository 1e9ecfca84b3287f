"""
Data models for quiver-grass.

Immutable pydantic value types shared by the computational modules: dimension vectors,
indecomposable Kronecker representations and their direct sums, graded Betti polynomials,
torus fixed points, standard Hom basis elements and the CLI output envelope.
"""

import re
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy.polys.densearith import dup_add, dup_mul
from sympy.polys.domains import ZZ

from src.core.errors import PreconditionError

Vertex = Tuple[int, int]  # (layer in {1, 2}, index k >= 1)


class DimVector(BaseModel):
    """Dimension vector (dim M_1, dim M_2) of a Kronecker representation."""
    model_config = ConfigDict(frozen=True)

    d1: int = Field(ge=0)
    d2: int = Field(ge=0)

    @classmethod
    def of(cls, d1: int, d2: int) -> "DimVector":
        return cls(d1=d1, d2=d2)

    def as_tuple(self) -> Tuple[int, int]:
        return (self.d1, self.d2)

    def __add__(self, other: "DimVector") -> "DimVector":
        return DimVector(d1=self.d1 + other.d1, d2=self.d2 + other.d2)

    def __sub__(self, other: "DimVector") -> "DimVector":
        if other.d1 > self.d1 or other.d2 > self.d2:
            raise PreconditionError(f"cannot subtract {other.as_tuple()} from {self.as_tuple()}")
        return DimVector(d1=self.d1 - other.d1, d2=self.d2 - other.d2)

    def __mul__(self, k: int) -> "DimVector":
        return DimVector(d1=self.d1 * k, d2=self.d2 * k)

    __rmul__ = __mul__

    def __le__(self, other: "DimVector") -> bool:
        return self.d1 <= other.d1 and self.d2 <= other.d2

    def __str__(self) -> str:
        return f"({self.d1},{self.d2})"


DELTA = DimVector(d1=1, d2=1)


class Kind(str, Enum):
    PREPROJECTIVE = "P"
    REGULAR = "R"
    PREINJECTIVE = "I"


class Indecomposable(BaseModel):
    """
    P_n (dim (n, n+1)), R_n = R_n(0) (dim (n, n)) or I_n (dim (n+1, n)).

    R_0 is the zero representation; it only shows up as the ambient of the deepest
    stratum of a regular quiver Grassmannian and is dropped from direct sums.
    """
    model_config = ConfigDict(frozen=True)

    kind: Kind
    rank: int = Field(ge=0)

    @classmethod
    def P(cls, n: int) -> "Indecomposable":
        return cls(kind=Kind.PREPROJECTIVE, rank=n)

    @classmethod
    def R(cls, n: int) -> "Indecomposable":
        return cls(kind=Kind.REGULAR, rank=n)

    @classmethod
    def I(cls, n: int) -> "Indecomposable":
        return cls(kind=Kind.PREINJECTIVE, rank=n)

    @property
    def dim(self) -> DimVector:
        n = self.rank
        if self.kind is Kind.PREPROJECTIVE:
            return DimVector(d1=n, d2=n + 1)
        if self.kind is Kind.REGULAR:
            return DimVector(d1=n, d2=n)
        return DimVector(d1=n + 1, d2=n)

    @property
    def is_zero(self) -> bool:
        return self.kind is Kind.REGULAR and self.rank == 0

    @property
    def label(self) -> str:
        return f"{self.kind.value}{self.rank}"

    def sort_key(self) -> Tuple[int, int]:
        return ("PRI".index(self.kind.value), self.rank)

    def __str__(self) -> str:
        return self.label


_TERM = re.compile(r"^(?:(\d+)\*)?([PRI])(\d+)$")


class RepDescriptor(BaseModel):
    """Formal direct sum of indecomposables; the empty sum is the zero representation."""
    model_config = ConfigDict(frozen=True)

    summands: Tuple[Indecomposable, ...] = ()

    @field_validator("summands")
    @classmethod
    def _canonical_order(cls, v):
        return tuple(sorted((s for s in v if not s.is_zero), key=Indecomposable.sort_key))

    @classmethod
    def of(cls, *summands: Indecomposable) -> "RepDescriptor":
        return cls(summands=summands)

    @classmethod
    def parse(cls, text: str) -> "RepDescriptor":
        """Parse ``P2+R1+I0`` or ``2*P1+R3``; ``0`` is the zero representation."""
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls()
        summands: List[Indecomposable] = []
        for term in text.split("+"):
            match = _TERM.match(term)
            if not match:
                raise PreconditionError(f"cannot parse summand {term!r} in {text!r}")
            times, kind, rank = match.groups()
            summands.extend([Indecomposable(kind=Kind(kind), rank=int(rank))] * int(times or 1))
        return cls(summands=tuple(summands))

    @property
    def dim(self) -> DimVector:
        total = DimVector(d1=0, d2=0)
        for s in self.summands:
            total = total + s.dim
        return total

    def of_kind(self, kind: Kind) -> List[Indecomposable]:
        return [s for s in self.summands if s.kind is kind]

    def __add__(self, other: "RepDescriptor") -> "RepDescriptor":
        return RepDescriptor(summands=self.summands + other.summands)

    @property
    def label(self) -> str:
        return "+".join(s.label for s in self.summands) or "0"

    def __str__(self) -> str:
        return self.label


class GradedPoly(BaseModel):
    """
    Polynomial in q with nonnegative integer coefficients; coefficient i is b_{2i}.

    Stored low degree first with trailing zeros trimmed; the zero polynomial has no
    coefficients. Arithmetic goes through sympy's dense univariate routines over ZZ.
    """
    model_config = ConfigDict(frozen=True)

    coefficients: Tuple[int, ...] = ()

    @field_validator("coefficients")
    @classmethod
    def _trim(cls, v):
        coeffs = list(v)
        if any(c < 0 for c in coeffs):
            raise ValueError("graded polynomial coefficients must be nonnegative")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)

    @classmethod
    def of(cls, *coefficients: int) -> "GradedPoly":
        return cls(coefficients=coefficients)

    @classmethod
    def zero(cls) -> "GradedPoly":
        return cls()

    @classmethod
    def one(cls) -> "GradedPoly":
        return cls(coefficients=(1,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "GradedPoly":
        return cls(coefficients=(0,) * degree + (coefficient,))

    def _dense(self) -> list:
        return [ZZ(c) for c in reversed(self.coefficients)]

    @classmethod
    def _from_dense(cls, dense: list) -> "GradedPoly":
        return cls(coefficients=tuple(int(c) for c in reversed(dense)))

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        return self._from_dense(dup_add(self._dense(), other._dense(), ZZ))

    def __mul__(self, other: "GradedPoly") -> "GradedPoly":
        return self._from_dense(dup_mul(self._dense(), other._dense(), ZZ))

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        width = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (width - len(self.coefficients))
        b = other.coefficients + (0,) * (width - len(other.coefficients))
        diff = tuple(x - y for x, y in zip(a, b))
        if any(c < 0 for c in diff):
            raise PreconditionError(f"{self.to_list()} - {other.to_list()} has negative coefficients")
        return GradedPoly(coefficients=diff)

    def shift(self, k: int) -> "GradedPoly":
        """Multiply by q^k."""
        if not self.coefficients:
            return self
        return GradedPoly(coefficients=(0,) * k + self.coefficients)

    def evaluate(self, x: int) -> int:
        total = 0
        for c in reversed(self.coefficients):
            total = total * x + c
        return total

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree in q; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def to_list(self) -> List[int]:
        return list(self.coefficients)

    def __str__(self) -> str:
        return str(self.to_list())


class GrassID(BaseModel):
    """The quiver Grassmannian Gr_e(M) of an indecomposable M."""
    model_config = ConfigDict(frozen=True)

    ambient: Indecomposable
    e: DimVector

    @classmethod
    def of(cls, ambient: Indecomposable, e1: int, e2: int) -> "GrassID":
        return cls(ambient=ambient, e=DimVector(d1=e1, d2=e2))

    def __str__(self) -> str:
        return f"Gr_{self.e}({self.ambient})"


class PlacedSummand(BaseModel):
    """An indecomposable summand of a fixed point together with its leftmost layer-2 index."""
    model_config = ConfigDict(frozen=True)

    shape: Indecomposable
    position: int = Field(ge=1)

    @property
    def label(self) -> str:
        if self.shape.kind is Kind.PREPROJECTIVE:
            return f"{self.position}({self.shape.label})"
        return self.shape.label

    def __str__(self) -> str:
        return self.label


class FixedPoint(BaseModel):
    """A torus-fixed point of Gr_e(M): a successor-closed vertex set of the coefficient quiver."""
    model_config = ConfigDict(frozen=True)

    s1: Tuple[int, ...]
    s2: Tuple[int, ...]
    summands: Tuple[PlacedSummand, ...] = ()

    @property
    def e(self) -> DimVector:
        return DimVector(d1=len(self.s1), d2=len(self.s2))

    @property
    def vertices(self) -> FrozenSet[Vertex]:
        return frozenset([(1, k) for k in self.s1] + [(2, k) for k in self.s2])

    @property
    def descriptor(self) -> RepDescriptor:
        return RepDescriptor(summands=tuple(s.shape for s in self.summands))

    @property
    def label(self) -> str:
        return " + ".join(s.label for s in self.summands) or "0"


class HomBasisElement(BaseModel):
    """Standard basis element f_{gamma gamma'} of Hom(L, L') and its torus weight."""
    model_config = ConfigDict(frozen=True)

    gamma: FrozenSet[Vertex]
    gamma_prime: FrozenSet[Vertex]
    weight: int


class CCInput(BaseModel):
    """Dimension vector plus Euler characteristics chi(e) feeding a Caldero-Chapoton sum."""
    model_config = ConfigDict(frozen=True)

    d: Tuple[int, ...]
    chi: Dict[Tuple[int, ...], int]

    @model_validator(mode="after")
    def _support(self):
        if len(self.d) not in (2, 3):
            raise ValueError("CC input needs a 2- or 3-component dimension vector")
        for e, value in self.chi.items():
            if len(e) != len(self.d) or any(not 0 <= x <= y for x, y in zip(e, self.d)):
                raise ValueError(f"chi is supported on 0 <= e <= d, got e={e} for d={self.d}")
            if value < 0:
                raise ValueError(f"negative Euler characteristic at e={e}")
        return self


class OutputEnvelope(BaseModel):
    """Machine-readable CLI output."""
    command: str
    parameters: Dict[str, Any]
    result: Any
    version: str


class AlphaIndex(BaseModel):
    """Positions k_i and ranks r_i of the summands k_i(P_{r_i}) of a fixed point without regular part."""
    model_config = ConfigDict(frozen=True)

    k: Tuple[int, ...]
    r: Tuple[int, ...]


class BetaIndex(BaseModel):
    """Cell coordinates a_1 < ... < a_m and 2 <= b_2 < ... < b_m (b holds b_2..b_m)."""
    model_config = ConfigDict(frozen=True)

    a: Tuple[int, ...]
    b: Tuple[int, ...]
