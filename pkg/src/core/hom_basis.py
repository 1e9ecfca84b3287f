"""
Standard basis of Hom(L, L') between coordinate representations and attracting-cell dimensions.

A basis element pairs a connected predecessor-closed segment of a component of L (a factor
string) with a label-preserving isomorphic successor-closed segment of a component of L'
(a substring). Its torus weight is the shift w(alpha(v)) - w(v) at the anchor v, the first layer-2
vertex of the factor string. When both quivers inherit their weights from one ambient
Gamma(R_n) the shift is the same at every matched vertex.
"""

import logging
from typing import List, Sequence, Tuple

from src.core.coefficient_quiver import (
    CoeffQuiver, build_coeff_quiver, descriptor_of, fixed_point_quiver, quotient_quiver,
)
from src.core.errors import IdentityViolation, PreconditionError
from src.core.kronecker import euler_form, k_invariant
from src.models.models import (
    FixedPoint, HomBasisElement, Indecomposable, Kind, PlacedSummand, Vertex,
)

logger = logging.getLogger('quiver_grass.hom')

Segment = Tuple[Tuple[Vertex, ...], Tuple[str, ...]]


def _segments(quiver: CoeffQuiver, closed) -> List[Segment]:
    out = []
    for piece in quiver.components():
        path, labels = piece.string()
        for i in range(len(path)):
            for j in range(i, len(path)):
                vertices = tuple(path[i:j + 1])
                if closed(piece, vertices):
                    out.append((vertices, tuple(labels[i:j])))
    return out


def _align(source: Segment, target: Segment) -> Tuple[Tuple[Vertex, Vertex], ...]:
    """Vertex pairs of the label-preserving isomorphism source -> target, or () if none."""
    (sv, sl), (tv, tl) = source, target
    if len(sv) != len(tv):
        return ()
    if sv[0][0] == tv[0][0] and sl == tl:
        return tuple(zip(sv, tv))
    if sv[0][0] == tv[-1][0] and sl == tuple(reversed(tl)):
        return tuple(zip(sv, reversed(tv)))
    return ()


def _anchor(pairs: Tuple[Tuple[Vertex, Vertex], ...]) -> Tuple[Vertex, Vertex]:
    # first matched pair of layer-2 vertices; a lone layer-1 vertex anchors itself
    for source, target in pairs:
        if source[0] == 2:
            return source, target
    return pairs[0]


def hom_standard_basis(L: CoeffQuiver, Lp: CoeffQuiver) -> List[HomBasisElement]:
    factors = _segments(L, lambda piece, vs: piece.is_predecessor_closed(vs))
    subs = _segments(Lp, lambda piece, vs: piece.is_successor_closed(vs))
    basis = []
    for gamma in factors:
        for gamma_prime in subs:
            pairs = _align(gamma, gamma_prime)
            if not pairs:
                continue
            source, target = _anchor(pairs)
            basis.append(HomBasisElement(
                gamma=frozenset(gamma[0]), gamma_prime=frozenset(gamma_prime[0]),
                weight=Lp.weights[target] - L.weights[source],
            ))
    return basis


def hom_plus_dim(L: CoeffQuiver, Lp: CoeffQuiver) -> int:
    return sum(1 for f in hom_standard_basis(L, Lp) if f.weight > 0)


def cell_dimension(m: Indecomposable, fixed_point: FixedPoint) -> int:
    """dim Hom(L, M/L)^+, the dimension of the attracting cell of L."""
    return hom_plus_dim(fixed_point_quiver(m, fixed_point), quotient_quiver(m, fixed_point))


def _placed_vertices(n: int, summand: PlacedSummand) -> List[Vertex]:
    shape, k = summand.shape, summand.position
    if shape.kind is Kind.REGULAR:
        r = shape.rank
        return [(1, i) for i in range(n - r + 1, n + 1)] + [(2, i) for i in range(n - r + 1, n + 1)]
    if shape.kind is Kind.PREPROJECTIVE:
        r = shape.rank
        return [(1, i) for i in range(k, k + r)] + [(2, i) for i in range(k, k + r + 1)]
    raise PreconditionError(f"{shape} cannot be a summand of a subrepresentation of a regular module")


def _base_dimension(n: int, summand: PlacedSummand) -> int:
    if summand.shape.kind is Kind.REGULAR:
        return 0
    return n - summand.position


def cell_dimension_recursive(n: int, summands: Sequence[PlacedSummand]) -> int:
    """
    Assemble dim X_L summand by summand inside R_n.

    Summands are k1(P_r1), ..., km(P_rm) with increasing positions, optionally followed by
    one R_r at the top indices. Each step adds dim X_{L''} - <dim L', dim L''> to the running
    value, after checking that every standard homomorphism L' -> L'' has positive weight.
    """
    ambient = build_coeff_quiver(Indecomposable.R(n))
    seen: set = set()
    blocks = []
    for index, summand in enumerate(summands):
        if summand.shape.kind is Kind.REGULAR and index != len(summands) - 1:
            raise PreconditionError("the regular summand must come last")
        if index and summand.shape.kind is not Kind.REGULAR and summand.position <= summands[index - 1].position:
            raise PreconditionError("summands must be sorted by increasing position")
        vertices = _placed_vertices(n, summand)
        if not set(vertices) <= ambient.vertices:
            raise PreconditionError(f"{summand} does not fit inside R_{n}")
        if seen.intersection(vertices):
            raise PreconditionError(f"{summand} overlaps an earlier summand")
        seen.update(vertices)
        blocks.append(ambient.induced(vertices))

    if not blocks:
        return 0
    total = _base_dimension(n, summands[0])
    accumulated = blocks[0]
    for summand, block in zip(summands[1:], blocks[1:]):
        basis = hom_standard_basis(accumulated, block)
        if any(f.weight <= 0 for f in basis):
            raise IdentityViolation(f"Hom(L', {summand})^+ is not all of Hom(L', {summand}) inside R_{n}")
        total += _base_dimension(n, summand) - euler_form(accumulated.dim, block.dim)
        accumulated = ambient.induced(accumulated.vertices | block.vertices)
    logger.debug(f"recursive cell dimension of {'+'.join(s.label for s in summands)} in R_{n}: {total}")
    return total


def fixed_point_k(n: int, fixed_point: FixedPoint) -> int:
    """K-invariant of a fixed point of Gr_e(R_n): min(r, r') of the regular parts of L and R_n/L."""
    m = Indecomposable.R(n)
    quotient = quotient_quiver(m, fixed_point)
    return k_invariant(fixed_point.descriptor, descriptor_of(quotient))
