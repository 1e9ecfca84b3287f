"""
Index sets for the cells of Gr_e(R_n) that meet no regular summand, and the bijection
between the two descriptions.

With m = e2 - e1 the alpha side lists fixed points k_1(P_r1) + ... + k_m(P_rm) directly;
the beta side is a pair of increasing sequences whose generating function is visibly
q^{e2-m} [e2-1 choose m-1]_q [n-e1 choose m]_q.
"""

from itertools import combinations
from typing import Iterator, List, Optional, Tuple

from src.core.errors import PreconditionError
from src.models.models import AlphaIndex, BetaIndex, DimVector


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _positions(n: int, r: Tuple[int, ...], start: int = 1) -> Iterator[Tuple[int, ...]]:
    if not r:
        yield ()
        return
    # room left for the later summands: each needs r_j + 1 layer-2 slots
    tail = sum(x + 1 for x in r[1:])
    for k in range(start, n - r[0] - tail + 1):
        for rest in _positions(n, r[1:], k + r[0] + 1):
            yield (k,) + rest


def alpha_dimension(n: int, alpha: AlphaIndex) -> int:
    """mn - sum k_i - m^2 + sum_i sum_{j<=i} (r_j - r_i + 1)."""
    m = len(alpha.k)
    r = alpha.r
    return m * n - sum(alpha.k) - m * m + sum(r[j] - r[i] + 1 for i in range(m) for j in range(i + 1))


def beta_dimension(n: int, beta: BetaIndex) -> int:
    """mn - sum a_i - sum b_i + (m - 1)."""
    m = len(beta.a)
    if m == 0:
        return 0
    return m * n - sum(beta.a) - sum(beta.b) + (m - 1)


def _check_alpha(n: int, e: DimVector, alpha: AlphaIndex) -> None:
    m = e.d2 - e.d1
    k, r = alpha.k, alpha.r
    if len(k) != m or len(r) != m:
        raise PreconditionError(f"alpha data needs {m} positions and ranks, got {len(k)} and {len(r)}")
    if any(x < 0 for x in r) or sum(r) != e.d1:
        raise PreconditionError(f"ranks {r} must be nonnegative with sum {e.d1}")
    if m and (k[0] < 1 or k[-1] + r[-1] > n):
        raise PreconditionError(f"summands {k}, {r} do not fit inside R_{n}")
    if any(k[i] + r[i] >= k[i + 1] for i in range(m - 1)):
        raise PreconditionError(f"summands {k}, {r} overlap")


def alpha_set(n: int, e: DimVector, k: Optional[int] = None) -> List[AlphaIndex]:
    m = e.d2 - e.d1
    if m < 0 or e.d2 > n:
        return []
    out = []
    for r in _compositions(e.d1, m):
        for positions in _positions(n, r):
            alpha = AlphaIndex(k=positions, r=r)
            if k is None or alpha_dimension(n, alpha) == k:
                out.append(alpha)
    return out


def beta_set(n: int, e: DimVector, k: Optional[int] = None) -> List[BetaIndex]:
    m = e.d2 - e.d1
    if m < 0 or e.d2 > n:
        return []
    if m == 0:
        return [BetaIndex(a=(), b=())] if e.d1 == 0 and k in (None, 0) else []
    out = []
    for a in combinations(range(1, n - e.d1 + 1), m):
        for b in combinations(range(2, e.d2 + 1), m - 1):
            beta = BetaIndex(a=a, b=b)
            if k is None or beta_dimension(n, beta) == k:
                out.append(beta)
    return out


def alpha_beta_bijection(n: int, e: DimVector, alpha: AlphaIndex) -> BetaIndex:
    """
    a_1 = k_1, a_i = k_i - (r_1 + ... + r_{i-1}) and b_i = r_m + ... + r_{m-i+2} + i.

    Raises PreconditionError when the input violates the alpha constraints.
    """
    _check_alpha(n, e, alpha)
    m = len(alpha.k)
    k, r = alpha.k, alpha.r
    a = tuple(k[i] - sum(r[:i]) for i in range(m))
    b = tuple(sum(r[m - 1 - j] for j in range(i - 1)) + i for i in range(2, m + 1))
    return BetaIndex(a=a, b=b)


def beta_alpha_inverse(n: int, e: DimVector, beta: BetaIndex) -> AlphaIndex:
    m = len(beta.a)
    if m != e.d2 - e.d1 or len(beta.b) != max(m - 1, 0):
        raise PreconditionError(f"beta data {beta.a}, {beta.b} does not match e={e}")
    # r_m = b_2 - 2 and r_{m-i+1} = b_{i+1} - b_i - 1
    b = beta.b
    tail = [b[0] - 2] + [y - x - 1 for x, y in zip(b, b[1:])] if b else []
    r = [0] * m
    for offset, value in enumerate(tail):
        r[m - 1 - offset] = value
    if m:
        r[0] = e.d1 - sum(r[1:])
    k = tuple(beta.a[i] + sum(r[:i]) for i in range(m))
    alpha = AlphaIndex(k=k, r=tuple(r))
    _check_alpha(n, e, alpha)
    return alpha
