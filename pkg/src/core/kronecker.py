"""
Homological dimension counts for Kronecker representations.

Representations are formal direct sums of indecomposables; Hom dimensions come from the
closed formulas between indecomposables and everything else is derived from them through
the Euler form <(a,b),(c,d)> = ac + bd - 2ad.
"""

from typing import Optional

from src.core.errors import IdentityViolation, PreconditionError
from src.models.models import DimVector, Indecomposable, Kind, RepDescriptor


def euler_form(x: DimVector, y: DimVector) -> int:
    return x.d1 * y.d1 + x.d2 * y.d2 - 2 * x.d1 * y.d2


def _hom_indecomposable(m: Indecomposable, n: Indecomposable) -> int:
    s, l = m.rank, n.rank
    P, R, I = Kind.PREPROJECTIVE, Kind.REGULAR, Kind.PREINJECTIVE
    pair = (m.kind, n.kind)
    if pair == (P, P):
        return max(l - s + 1, 0)
    if pair == (P, R):
        return l
    if pair == (P, I):
        return l + s
    if pair == (R, R):
        return min(s, l)
    if pair == (R, I):
        return s
    if pair == (I, I):
        return max(s - l + 1, 0)
    # Hom(R, P) = Hom(I, P) = Hom(I, R) = 0
    return 0


def hom_dim(m: RepDescriptor, n: RepDescriptor) -> int:
    return sum(_hom_indecomposable(a, b) for a in m.summands for b in n.summands)


def ext_dim(m: RepDescriptor, n: RepDescriptor) -> int:
    value = hom_dim(m, n) - euler_form(m.dim, n.dim)
    if value < 0:
        raise IdentityViolation(f"negative Ext^1 dimension for ({m}, {n})")
    return value


def is_rigid(m: RepDescriptor) -> bool:
    """Ext^1(M, M) = 0."""
    return ext_dim(m, m) == 0


def _regular_rank(rep: RepDescriptor, other: Kind, role: str) -> int:
    regulars = rep.of_kind(Kind.REGULAR)
    if len(regulars) > 1:
        raise PreconditionError(f"{role} {rep} has more than one regular summand")
    strays = [s for s in rep.summands if s.kind not in (Kind.REGULAR, other)]
    if strays:
        raise PreconditionError(f"{role} {rep} has summands {', '.join(map(str, strays))} of the wrong kind")
    return regulars[0].rank if regulars else 0


def k_invariant(sub: RepDescriptor, quotient: RepDescriptor) -> int:
    """
    K_N = min(r, r') for N = P + R_r and M/N = R_{r'} + I.

    The value equals dim Ext^1(N, M/N); the two are compared on every call.
    """
    r = _regular_rank(sub, Kind.PREPROJECTIVE, "subrepresentation")
    r_prime = _regular_rank(quotient, Kind.PREINJECTIVE, "quotient")
    k = min(r, r_prime)
    ext = ext_dim(sub, quotient)
    if ext != k:
        raise IdentityViolation(f"K-invariant {k} differs from dim Ext^1 = {ext} for ({sub}, {quotient})")
    return k


def tangent_dim(n: int, e: DimVector, k: int) -> int:
    """Dimension of the tangent space of Gr_e(R_n) at a point with K-invariant k."""
    if not e <= DimVector(d1=n, d2=n):
        raise PreconditionError(f"e={e} exceeds ({n},{n})")
    return euler_form(e, DimVector(d1=n - e.d1, d2=n - e.d2)) + k


def rigid_shape(m: RepDescriptor) -> Optional[str]:
    """
    Name the rigid family M belongs to, if any.

    Rigid Kronecker representations are exactly P_n^a + P_{n+1}^b and I_n^a + I_{n+1}^b.
    """
    if not m.summands:
        return "0"
    kinds = {s.kind for s in m.summands}
    if len(kinds) != 1 or Kind.REGULAR in kinds:
        return None
    ranks = {s.rank for s in m.summands}
    if max(ranks) - min(ranks) > 1:
        return None
    kind = next(iter(kinds)).value
    return "+".join(f"{kind}{r}" for r in sorted(ranks))
