"""
Cluster variables of types A_1^(1) and A_2^(1), the Caldero-Chapoton map and the
non-cluster-monomial canonical basis elements z_n and u_n.

A_1^(1) lives in Z[x1^+-1, x2^+-1] with x_k x_{k+2} = x_{k+1}^2 + 1. A_2^(1) lives in
Z[x1^+-1, x2^+-1, x3^+-1] with x_m x_{m+3} = x_{m+1} x_{m+2} + 1. Every recurrence step is
an exact division; a remainder raises InexactDivisionError.
"""

import logging
from functools import lru_cache
from itertools import product
from math import comb
from typing import List, Optional, Tuple

from src.config.config import get_config
from src.core.errors import PreconditionError, ResourceBoundError
from src.core.invariants import euler_table, smooth_part_euler, stratum_euler_exact
from src.core.laurent import LaurentPoly
from src.models.models import CCInput, GrassID, Indecomposable, RepDescriptor

logger = logging.getLogger('quiver_grass.cluster')


def _check_bound(value: int, bound: Optional[int], what: str) -> None:
    bound = get_config().cluster_bound if bound is None else bound
    if abs(value) > bound:
        raise ResourceBoundError(f"{what}={value} exceeds the recurrence bound {bound}")


@lru_cache(maxsize=None)
def _a11(k: int) -> LaurentPoly:
    if k in (1, 2):
        return LaurentPoly.variable(k, 2)
    if k > 2:
        return (_a11(k - 1) ** 2 + 1) / _a11(k - 2)
    return (_a11(k + 1) ** 2 + 1) / _a11(k + 2)


@lru_cache(maxsize=None)
def _a21(m: int) -> LaurentPoly:
    if m in (1, 2, 3):
        return LaurentPoly.variable(m, 3)
    if m > 3:
        return (_a21(m - 2) * _a21(m - 1) + 1) / _a21(m - 3)
    return (_a21(m + 1) * _a21(m + 2) + 1) / _a21(m + 3)


def cluster_var_a11(k: int, bound: Optional[int] = None) -> LaurentPoly:
    """x_k in the initial cluster {x1, x2}."""
    _check_bound(k, bound, "k")
    return _a11(k)


def cluster_var_a21(m: int, bound: Optional[int] = None) -> LaurentPoly:
    """x_m in the initial cluster {x1, x2, x3}."""
    _check_bound(m, bound, "m")
    return _a21(m)


# Caldero-Chapoton sums

def cc_map_a11(data: CCInput) -> LaurentPoly:
    """sum_e chi(e) x1^{2(d2-e2)} x2^{2 e1} / (x1^{d1} x2^{d2})."""
    if len(data.d) != 2:
        raise PreconditionError("the A_1^(1) Caldero-Chapoton map needs a 2-component dimension vector")
    d1, d2 = data.d
    terms = {}
    for (e1, e2), chi in data.chi.items():
        key = (2 * (d2 - e2) - d1, 2 * e1 - d2)
        terms[key] = terms.get(key, 0) + chi
    return LaurentPoly(nvars=2, terms=terms)


def cc_map_a21(data: CCInput) -> LaurentPoly:
    """
    Caldero-Chapoton map of the acyclic quiver 1 -> 2 -> 3, 1 -> 3:
    sum_e chi(e) x1^{(d2-e2)+(d3-e3)} x2^{(d3-e3)+e1} x3^{e1+e2} / x^d.
    """
    if len(data.d) != 3:
        raise PreconditionError("the A_2^(1) Caldero-Chapoton map needs a 3-component dimension vector")
    d1, d2, d3 = data.d
    terms = {}
    for (e1, e2, e3), chi in data.chi.items():
        key = ((d2 - e2) + (d3 - e3) - d1, (d3 - e3) + e1 - d2, e1 + e2 - d3)
        terms[key] = terms.get(key, 0) + chi
    return LaurentPoly(nvars=3, terms=terms)


def cc_input_for(rep: RepDescriptor) -> CCInput:
    """Full Euler characteristic table of a Kronecker representation."""
    return CCInput(d=rep.dim.as_tuple(), chi=euler_table(rep))


def cc_of(rep: RepDescriptor) -> LaurentPoly:
    return cc_map_a11(cc_input_for(rep))


def _regular_table(n: int, chi) -> CCInput:
    return CCInput(d=(n, n), chi={
        (e1, e2): chi(GrassID.of(Indecomposable.R(n), e1, e2))
        for e1, e2 in product(range(n + 1), repeat=2)
    })


def s_n(n: int, bound: Optional[int] = None) -> LaurentPoly:
    """CC(R_n); s_0 = 1 and s_n = 0 for n < 0."""
    if n < 0:
        return LaurentPoly(nvars=2)
    _check_bound(n, bound, "n")
    return cc_of(RepDescriptor.of(Indecomposable.R(n)))


def _require_positive(n: int, bound: Optional[int]) -> None:
    if n < 1:
        raise PreconditionError(f"n must be at least 1, got {n}")
    _check_bound(n, bound, "n")


def z_n_recurrence(n: int, bound: Optional[int] = None) -> LaurentPoly:
    """z_1 = x0 x3 - x1 x2, z_{n+1} = z_1 z_n - z_{n-1}, seeded with z_0 = 2."""
    _require_positive(n, bound)
    z1 = _a11(0) * _a11(3) - _a11(1) * _a11(2)
    previous, current = LaurentPoly.constant(2, 2), z1
    for _ in range(n - 1):
        previous, current = current, z1 * current - previous
    return current


def z_n_geometric(n: int, bound: Optional[int] = None) -> LaurentPoly:
    """CC of R_n with the Euler characteristics of the smooth parts of Gr_e(R_n)."""
    _require_positive(n, bound)
    return cc_map_a11(_regular_table(n, smooth_part_euler))


def cc_k_map(n: int, k: int, bound: Optional[int] = None) -> LaurentPoly:
    """CC^(k)(R_n): only points N with dim Ext^1(N, R_n/N) = k are counted."""
    if k < 0:
        raise PreconditionError(f"level must be nonnegative, got {k}")
    _check_bound(n, bound, "n")
    return cc_map_a11(_regular_table(n, lambda gid: stratum_euler_exact(gid, k)))


def wz_vars() -> Tuple[LaurentPoly, LaurentPoly]:
    x1, x2, x3 = (LaurentPoly.variable(i, 3) for i in (1, 2, 3))
    w = (x1 + x3) / x2
    z = (x1 * x2 + x2 * x3 + 1) / (x1 * x3)
    return w, z


def u_n_recurrence(n: int, bound: Optional[int] = None) -> LaurentPoly:
    """u_1 = z w - 2, u_{n+1} = u_1 u_n - u_{n-1}, seeded with u_0 = 2."""
    _require_positive(n, bound)
    w, z = wz_vars()
    u1 = z * w - 2
    previous, current = LaurentPoly.constant(2, 3), u1
    for _ in range(n - 1):
        previous, current = current, u1 * current - previous
    return current


def u_n_geometric(n: int, bound: Optional[int] = None) -> LaurentPoly:
    """
    CC of the regular A_2^(1) representation R_{n,2} restricted to its smooth locus.

    The Euler characteristic of the smooth part of Gr_(e1,e2,e3)(R_{n,2}) fibres over
    the smooth part of Gr_(e1,e3)(R_n) with fibre Gr_{e2-e1}(k^{e3-e1}).
    """
    _require_positive(n, bound)
    chi = {}
    for e1, e2, e3 in product(range(n + 1), repeat=3):
        if not e1 <= e2 <= e3:
            continue
        value = comb(e3 - e1, e2 - e1) * smooth_part_euler(GrassID.of(Indecomposable.R(n), e1, e3))
        if value:
            chi[(e1, e2, e3)] = value
    return cc_map_a21(CCInput(d=(n, n, n), chi=chi))


def canonical_basis_a21(n: int, k: int, kind: str) -> LaurentPoly:
    """u_n w^k or u_n z^k."""
    if k < 0:
        raise PreconditionError(f"power must be nonnegative, got {k}")
    w, z = wz_vars()
    if kind not in ("w", "z"):
        raise PreconditionError(f"kind must be 'w' or 'z', got {kind!r}")
    return u_n_recurrence(n) * (w if kind == "w" else z) ** k


def cluster_monomial_a11(k: int, a: int, b: int) -> LaurentPoly:
    if a < 0 or b < 0:
        raise PreconditionError("cluster monomial exponents must be nonnegative")
    return cluster_var_a11(k) ** a * cluster_var_a11(k + 1) ** b


def cluster_monomial_a21(m: int, a: int, b: int, c: int) -> LaurentPoly:
    if min(a, b, c) < 0:
        raise PreconditionError("cluster monomial exponents must be nonnegative")
    return cluster_var_a21(m) ** a * cluster_var_a21(m + 1) ** b * cluster_var_a21(m + 2) ** c


def cluster_rules_a11(k: int) -> List[LaurentPoly]:
    """
    x1, x2 written in the cluster {x_k, x_{k+1}}.

    The exchange relation is shift invariant, so x_j in that cluster is x_{j-k+1} in the
    initial one after renaming x_k -> x1, x_{k+1} -> x2.
    """
    return [cluster_var_a11(2 - k), cluster_var_a11(3 - k)]


def cluster_rules_a21(m: int) -> List[LaurentPoly]:
    """x1, x2, x3 written in the cluster {x_m, x_{m+1}, x_{m+2}}."""
    return [cluster_var_a21(2 - m), cluster_var_a21(3 - m), cluster_var_a21(4 - m)]


def positivity_check(p: LaurentPoly, rules: List[LaurentPoly]) -> bool:
    rewritten = p.substitute(rules)
    positive = rewritten.is_nonnegative()
    if not positive:
        logger.warning(f"negative coefficient after rewriting: {rewritten.to_text()}")
    return positive
