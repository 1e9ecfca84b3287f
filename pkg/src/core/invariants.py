"""
Invariants of Kronecker quiver Grassmannians.

Poincare polynomials are graded in q = t^2 (coefficient i is b_{2i}). Out-of-range
dimension vectors give the zero polynomial and Euler characteristic 0 rather than an
error, so convolutions over splittings can iterate freely.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import product
from math import comb
from typing import Dict, List, Tuple

from src.core.coefficient_quiver import enumerate_fixed_points
from src.core.errors import PreconditionError
from src.core.hom_basis import cell_dimension
from src.models.models import DELTA, DimVector, GradedPoly, GrassID, Indecomposable, Kind, RepDescriptor
from src.observability.observability import observe_if_available

logger = logging.getLogger('quiver_grass.invariants')


@lru_cache(maxsize=None)
def gaussian_binomial(s: int, t: int) -> GradedPoly:
    """[s choose t]_q through the Pascal rule [s,t] = [s-1,t-1] + q^t [s-1,t]."""
    if s < 0 or t < 0 or t > s:
        return GradedPoly.zero()
    if t == 0 or t == s:
        return GradedPoly.one()
    return gaussian_binomial(s - 1, t - 1) + gaussian_binomial(s - 1, t).shift(t)


def _binom(s: int, t: int) -> int:
    if s < 0 or t < 0 or t > s:
        return 0
    return comb(s, t)


def _require_regular(gid: GrassID) -> int:
    if gid.ambient.kind is not Kind.REGULAR:
        raise PreconditionError(f"{gid} is not a Grassmannian of a regular representation")
    return gid.ambient.rank


def _preinjective_to_preprojective(n: int, e: DimVector):
    """Gr_(e1,e2)(I_n) ~ Gr_(n-e2, n+1-e1)(P_n); None when e falls outside dim I_n."""
    if e.d1 > n + 1 or e.d2 > n:
        return None
    return n - e.d2, n + 1 - e.d1


def poincare(gid: GrassID) -> GradedPoly:
    n, (e1, e2) = gid.ambient.rank, gid.e.as_tuple()
    kind = gid.ambient.kind
    if kind is Kind.PREINJECTIVE:
        dual = _preinjective_to_preprojective(n, gid.e)
        if dual is None:
            return GradedPoly.zero()
        return poincare(GrassID.of(Indecomposable.P(n), *dual))
    m = e2 - e1
    if kind is Kind.REGULAR:
        if not 0 <= e1 <= e2 <= n:
            return GradedPoly.zero()
        return gaussian_binomial(e2, m) * gaussian_binomial(n - e1, m)
    if e1 > n or e2 > n + 1 or e1 > e2:
        return GradedPoly.zero()
    if e1 == e2 == 0:
        return GradedPoly.one()
    return gaussian_binomial(e2 - 1, e1) * gaussian_binomial(n + 1 - e1, m)


def betti_special(n: int, e1: int) -> GradedPoly:
    """Even Betti numbers of Gr_(e1, e1+1)(R_n) from the piecewise formula."""
    if not 0 <= e1 <= n - 1:
        raise PreconditionError(f"betti_special needs 0 <= e1 <= n-1, got n={n}, e1={e1}")
    s = min(e1, n - 1 - e1)
    coefficients = []
    for i in range(n):
        if i < s:
            coefficients.append(i + 1)
        elif i <= n - 1 - s:
            coefficients.append(s + 1)
        else:
            coefficients.append(n - i)
    return GradedPoly(coefficients=tuple(coefficients))


def euler_char(gid: GrassID) -> int:
    n, (e1, e2) = gid.ambient.rank, gid.e.as_tuple()
    kind = gid.ambient.kind
    if kind is Kind.PREINJECTIVE:
        dual = _preinjective_to_preprojective(n, gid.e)
        return 0 if dual is None else euler_char(GrassID.of(Indecomposable.P(n), *dual))
    m = e2 - e1
    if kind is Kind.REGULAR:
        if not 0 <= e1 <= e2 <= n:
            return 0
        return _binom(e2, m) * _binom(n - e1, m)
    if e1 > n or e2 > n + 1 or e1 > e2:
        return 0
    if e1 == e2 == 0:
        return 1
    return _binom(e2 - 1, e1) * _binom(n + 1 - e1, m)


def _euler_table(m: Indecomposable) -> Dict[Tuple[int, int], int]:
    d = m.dim
    return {
        (f1, f2): euler_char(GrassID.of(m, f1, f2))
        for f1, f2 in product(range(d.d1 + 1), range(d.d2 + 1))
    }


def euler_table(rep: RepDescriptor) -> Dict[Tuple[int, int], int]:
    """chi(Gr_f(M)) for every f <= dim M, by convolution over the summands."""
    table = {(0, 0): 1}
    for summand in rep.summands:
        factor = _euler_table(summand)
        merged: Dict[Tuple[int, int], int] = {}
        for (a1, a2), x in table.items():
            for (b1, b2), y in factor.items():
                key = (a1 + b1, a2 + b2)
                merged[key] = merged.get(key, 0) + x * y
        table = merged
    return table


def euler_char_sum(rep: RepDescriptor, e: DimVector) -> int:
    return euler_table(rep).get(e.as_tuple(), 0)


def dimension(gid: GrassID) -> int:
    n = _require_regular(gid)
    if poincare(gid).is_zero:
        raise PreconditionError(f"{gid} is empty")
    m = gid.e.d2 - gid.e.d1
    return m * (n - m)


def _depth(n: int, e: DimVector) -> int:
    """Deepest stratum index, or -1 when Gr_e(R_n) is empty."""
    if not e.d1 <= e.d2 <= n:
        return -1
    return min(e.d1, n - e.d2)


def strata(gid: GrassID) -> List[Tuple[int, GrassID]]:
    """X_k ~ Gr_{e - k delta}(R_{n-2k}) for k = 0..min(e1, n-e2)."""
    n = _require_regular(gid)
    s = _depth(n, gid.e)
    return [
        (k, GrassID(ambient=Indecomposable.R(n - 2 * k), e=gid.e - DELTA * k))
        for k in range(s + 1)
    ]


def _stratum_chi(gid: GrassID, k: int) -> int:
    n = _require_regular(gid)
    if k > _depth(n, gid.e):
        return 0
    return euler_char(GrassID(ambient=Indecomposable.R(n - 2 * k), e=gid.e - DELTA * k))


def smooth_part_euler(gid: GrassID) -> int:
    return _stratum_chi(gid, 0) - _stratum_chi(gid, 1)


def stratum_euler_exact(gid: GrassID, k: int) -> int:
    """chi(X_k minus X_{k+1}): points whose K-invariant equals k."""
    if k < 0:
        raise PreconditionError(f"stratum index must be nonnegative, got {k}")
    return _stratum_chi(gid, k) - _stratum_chi(gid, k + 1)


def is_smooth(gid: GrassID) -> bool:
    n = _require_regular(gid)
    if poincare(gid).is_zero:
        raise PreconditionError(f"{gid} is empty")
    return _depth(n, gid.e) == 0


def dual_e(n: int, e: DimVector) -> DimVector:
    if not e <= DimVector(d1=n, d2=n):
        raise PreconditionError(f"e={e} exceeds ({n},{n})")
    return DimVector(d1=n - e.d2, d2=n - e.d1)


def _cells_of(m: Indecomposable, e: DimVector, jobs: int, preprojective_only: bool = False) -> List[int]:
    points = enumerate_fixed_points(m, e)
    if preprojective_only:
        points = [p for p in points if not p.descriptor.of_kind(Kind.REGULAR)]
    if jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(cell_dimension, [m] * len(points), points))
    return [cell_dimension(m, p) for p in points]


def _from_cells(dims: List[int]) -> GradedPoly:
    total = GradedPoly.zero()
    for d in dims:
        total = total + GradedPoly.monomial(d)
    return total


@observe_if_available(name="poincare_from_cells")
def poincare_from_cells(m: Indecomposable, e: DimVector, jobs: int = 1) -> GradedPoly:
    """Sum of q^{dim X_L} over the torus-fixed points L of Gr_e(M)."""
    return _from_cells(_cells_of(m, e, jobs))


def preprojective_locus_poincare(n: int, e: DimVector, jobs: int = 1) -> GradedPoly:
    """Cells of Gr_e(R_n) whose fixed point has no regular summand."""
    return _from_cells(_cells_of(Indecomposable.R(n), e, jobs, preprojective_only=True))


def preprojective_locus_closed(n: int, e: DimVector) -> GradedPoly:
    """([e2 choose m]_q - [e2-1 choose m]_q) [n-e1 choose m]_q with m = e2 - e1."""
    e1, e2 = e.as_tuple()
    if not 0 <= e1 <= e2 <= n:
        return GradedPoly.zero()
    m = e2 - e1
    return (gaussian_binomial(e2, m) - gaussian_binomial(e2 - 1, m)) * gaussian_binomial(n - e1, m)
