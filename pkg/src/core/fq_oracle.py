"""
Brute-force point counts of Kronecker quiver Grassmannians over a prime field F_q.

Subspaces are enumerated once each through their reduced row-echelon bases: pick the
pivot columns, then fill every entry to the right of a pivot that is not itself a pivot
column. Matrices are numpy integer arrays reduced mod q; ranks come from sympy over GF(q).
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import combinations, product
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict
import sympy
from sympy import GF, isprime
from sympy.polys.matrices import DomainMatrix

from src.config.config import OracleConfig
from src.core.errors import PreconditionError, ResourceBoundError
from src.models.models import DimVector, Indecomposable, Kind
from src.observability.observability import observe_if_available

logger = logging.getLogger('quiver_grass.fq')

Matrix = Tuple[Tuple[int, ...], ...]


class FqMatrixRep(BaseModel):
    """A Kronecker representation over F_q given by two d2 x d1 matrices."""
    model_config = ConfigDict(frozen=True)

    q: int
    d: DimVector
    m_a: Matrix
    m_b: Matrix

    def arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        shape = (self.d.d2, self.d.d1)
        return (
            np.array(self.m_a, dtype=np.int64).reshape(shape),
            np.array(self.m_b, dtype=np.int64).reshape(shape),
        )


def _as_matrix(array: np.ndarray) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in array)


def matrix_rep(m: Indecomposable, q: int) -> FqMatrixRep:
    """Standard-basis matrices matching the arrows of the coefficient quiver of M."""
    n = m.rank
    d = m.dim
    a = np.zeros((d.d2, d.d1), dtype=np.int64)
    b = np.zeros((d.d2, d.d1), dtype=np.int64)
    if m.kind is Kind.PREINJECTIVE:
        for k in range(n):
            b[k, k] = 1
            a[k, k + 1] = 1
    else:
        for k in range(n):
            a[k, k] = 1
            if k + 1 < d.d2:
                b[k + 1, k] = 1
    return FqMatrixRep(q=q, d=d, m_a=_as_matrix(a), m_b=_as_matrix(b))


def check_bounds(q: int, dims: Tuple[int, ...], bounds: Optional[OracleConfig] = None) -> None:
    bounds = bounds or OracleConfig()
    if not isprime(q):
        raise PreconditionError(f"q={q} is not prime; only prime fields are supported")
    if q > bounds.max_q:
        raise ResourceBoundError(f"q={q} exceeds the oracle bound {bounds.max_q}")
    top = max(dims, default=0)
    if top > bounds.max_dim:
        raise ResourceBoundError(f"dimension {top} exceeds the oracle bound {bounds.max_dim}")
    if top >= bounds.large_dim and q > bounds.large_dim_max_q:
        raise ResourceBoundError(
            f"q={q} exceeds {bounds.large_dim_max_q}, the bound for dimensions >= {bounds.large_dim}"
        )


def rank_mod(matrix: np.ndarray, q: int) -> int:
    """Rank over F_q."""
    rows = np.asarray(matrix, dtype=np.int64).tolist()
    if not rows or not rows[0]:
        return 0
    return DomainMatrix.from_Matrix(sympy.Matrix(rows)).convert_to(GF(q)).rank()


def enumerate_subspaces(q: int, n: int, k: int, bounds: Optional[OracleConfig] = None) -> List[np.ndarray]:
    """Every k-dimensional subspace of F_q^n as its k x n reduced row-echelon basis."""
    check_bounds(q, (n,), bounds)
    if not 0 <= k <= n:
        return []
    out = []
    for pivots in combinations(range(n), k):
        free = [
            (i, j) for i, p in enumerate(pivots)
            for j in range(p + 1, n) if j not in pivots
        ]
        for values in product(range(q), repeat=len(free)):
            basis = np.zeros((k, n), dtype=np.int64)
            for i, p in enumerate(pivots):
                basis[i, p] = 1
            for (i, j), x in zip(free, values):
                basis[i, j] = x
            out.append(basis)
    return out


@lru_cache(maxsize=None)
def _subspace_count(q: int, n: int, k: int) -> int:
    return len(enumerate_subspaces(q, n, k, OracleConfig(max_dim=n, max_q=q, large_dim_max_q=q)))


def _image(rep: FqMatrixRep, n1: np.ndarray) -> np.ndarray:
    m_a, m_b = rep.arrays()
    # rows of the result span m_a(N1) + m_b(N1) inside F_q^{d2}
    return np.vstack([(m_a @ n1.T).T, (m_b @ n1.T).T]) % rep.q


def _count_for(rep: FqMatrixRep, e: DimVector, n1: np.ndarray, exhaustive: bool,
               n2_list: Optional[List[np.ndarray]]) -> int:
    image = _image(rep, n1)
    if not exhaustive:
        w = rank_mod(image, rep.q) if image.size else 0
        if w > e.d2:
            return 0
        return _subspace_count(rep.q, rep.d.d2 - w, e.d2 - w)
    count = 0
    for n2 in n2_list:
        stacked = np.vstack([n2, image]) if image.size else n2
        if rank_mod(stacked, rep.q) == e.d2:
            count += 1
    return count


@observe_if_available(name="count_points")
def count_points(rep: FqMatrixRep, e: DimVector, exhaustive: bool = False, jobs: int = 1,
                 bounds: Optional[OracleConfig] = None) -> int:
    """
    Number of pairs (N1, N2) with dim N_i = e_i and m_a N1 + m_b N1 inside N2.

    By default each N1 contributes the number of e2-dimensional N2 containing
    W = m_a N1 + m_b N1, counted as subspaces of F_q^{d2} / W. With exhaustive=True
    every pair is tested directly.
    """
    check_bounds(rep.q, rep.d.as_tuple(), bounds)
    if not e <= rep.d:
        return 0
    n1_list = enumerate_subspaces(rep.q, rep.d.d1, e.d1, bounds)
    n2_list = enumerate_subspaces(rep.q, rep.d.d2, e.d2, bounds) if exhaustive else None
    if jobs > 1 and len(n1_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(
                _count_for,
                [rep] * len(n1_list), [e] * len(n1_list), n1_list,
                [exhaustive] * len(n1_list), [n2_list] * len(n1_list),
            )
            total = sum(parts)
    else:
        total = sum(_count_for(rep, e, n1, exhaustive, n2_list) for n1 in n1_list)
    logger.debug(f"#Gr_{e}(F_{rep.q}) for d={rep.d}: {total} ({'exhaustive' if exhaustive else 'quotient'} count)")
    return total
