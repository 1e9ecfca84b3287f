"""
Coefficient quivers of Kronecker indecomposables and the torus-fixed points of their
quiver Grassmannians.

Vertices are pairs (layer, k) standing for the standard basis vector v_k^(layer); every
arrow goes from layer 1 to layer 2 and carries the label of the matrix (a or b) whose
nonzero entry it records. Arrow conventions, the single source of truth for the whole
package:

    R_n:  a: k(1) -> k(2),            b: k(1) -> (k+1)(2) for k < n
    P_n:  a: k(1) -> k(2),            b: k(1) -> (k+1)(2)        (layer 2 has n+1 vertices)
    I_n:  b: k(1) -> k(2) for k <= n, a: k(1) -> (k-1)(2) for k >= 2

so J_n(0) v_k = v_{k+1} and the regular subrepresentation of R_n sits at the largest
indices. The vertex v_k carries torus weight k - 1.
"""

import logging
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, model_validator

from src.core.errors import IdentityViolation, MalformedQuiverError
from src.models.models import (
    DimVector, FixedPoint, Indecomposable, Kind, PlacedSummand, RepDescriptor, Vertex,
)
from src.observability.observability import observe_if_available

logger = logging.getLogger('quiver_grass.quiver')

Arrow = Tuple[Vertex, Vertex, str]
LABELS = ("a", "b")


class CoeffQuiver(BaseModel):
    """Weighted coefficient quiver (or an induced piece of one)."""
    model_config = ConfigDict(frozen=True)

    vertices: FrozenSet[Vertex] = frozenset()
    arrows: FrozenSet[Arrow] = frozenset()
    weights: Dict[Vertex, int] = {}

    @model_validator(mode="after")
    def _consistent(self):
        for source, target, label in self.arrows:
            if source not in self.vertices or target not in self.vertices:
                raise MalformedQuiverError(f"arrow {source}->{target} leaves the vertex set")
            if label not in LABELS or source[0] != 1 or target[0] != 2:
                raise MalformedQuiverError(f"arrow {source}->{target} ({label}) is not a Kronecker arrow")
        if set(self.weights) != set(self.vertices):
            raise MalformedQuiverError("every vertex needs exactly one weight")
        return self

    @cached_property
    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        for v in self.vertices:
            g.add_node(v, layer=v[0], weight=self.weights[v])
        for source, target, label in self.arrows:
            g.add_edge(source, target, label=label)
        return g

    @property
    def dim(self) -> DimVector:
        return DimVector(
            d1=sum(1 for v in self.vertices if v[0] == 1),
            d2=sum(1 for v in self.vertices if v[0] == 2),
        )

    def is_successor_closed(self, selection: Iterable[Vertex]) -> bool:
        chosen = set(selection)
        return all(w in chosen for v in chosen for w in self.graph.successors(v))

    def is_predecessor_closed(self, selection: Iterable[Vertex]) -> bool:
        chosen = set(selection)
        return all(u in chosen for v in chosen for u in self.graph.predecessors(v))

    def induced(self, selection: Iterable[Vertex]) -> "CoeffQuiver":
        chosen = frozenset(selection)
        return CoeffQuiver(
            vertices=chosen,
            arrows=frozenset(a for a in self.arrows if a[0] in chosen and a[1] in chosen),
            weights={v: self.weights[v] for v in chosen},
        )

    def components(self) -> List["CoeffQuiver"]:
        parts = [self.induced(c) for c in nx.weakly_connected_components(self.graph)]
        return sorted(parts, key=lambda q: min(q.vertices, key=_position_key))

    def string(self) -> Tuple[List[Vertex], List[str]]:
        """
        Walk a connected string from its leftmost end.

        Returns the vertices in path order and the labels of the arrows between
        consecutive vertices.
        """
        g = self.graph
        undirected = g.to_undirected(as_view=True)
        if not self.vertices:
            return [], []
        if not nx.is_connected(undirected) or g.number_of_edges() != g.number_of_nodes() - 1 \
                or any(d > 2 for _, d in undirected.degree()):
            raise MalformedQuiverError("component is not a string")
        for v in g.nodes:
            for label in LABELS:
                if sum(1 for _, _, lab in g.in_edges(v, data="label") if lab == label) > 1 \
                        or sum(1 for _, _, lab in g.out_edges(v, data="label") if lab == label) > 1:
                    raise MalformedQuiverError(f"vertex {v} carries two arrows labelled {label}")
        ends = sorted((v for v, d in undirected.degree() if d <= 1), key=_position_key)
        path = [ends[0]]
        while len(path) < len(self.vertices):
            nxt = [w for w in undirected.neighbors(path[-1]) if len(path) < 2 or w != path[-2]]
            path.append(nxt[0])
        labels = [_edge_label(g, u, w) for u, w in zip(path, path[1:])]
        return path, labels


def _edge_label(g: nx.DiGraph, u: Vertex, w: Vertex) -> str:
    data = g.get_edge_data(u, w) or g.get_edge_data(w, u)
    return data["label"]


def _position_key(v: Vertex) -> Tuple[int, int]:
    # layer 2 before layer 1 at equal index, so strings start at their leftmost sink
    return (v[1], -v[0])


@lru_cache(maxsize=None)
def build_coeff_quiver(m: Indecomposable) -> CoeffQuiver:
    n = m.rank
    dim = m.dim
    vertices = [(1, k) for k in range(1, dim.d1 + 1)] + [(2, k) for k in range(1, dim.d2 + 1)]
    arrows: List[Arrow] = []
    if m.kind is Kind.PREINJECTIVE:
        for k in range(1, n + 2):
            if k <= n:
                arrows.append(((1, k), (2, k), "b"))
            if k >= 2:
                arrows.append(((1, k), (2, k - 1), "a"))
    else:
        for k in range(1, n + 1):
            arrows.append(((1, k), (2, k), "a"))
            if k + 1 <= dim.d2:
                arrows.append(((1, k), (2, k + 1), "b"))
    return CoeffQuiver(
        vertices=frozenset(vertices),
        arrows=frozenset(arrows),
        weights={v: v[1] - 1 for v in vertices},
    )


def shape_of(piece: CoeffQuiver) -> Indecomposable:
    """The indecomposable a connected string is a coefficient quiver of."""
    piece.string()
    d = piece.dim
    if d.d2 == d.d1 + 1:
        return Indecomposable(kind=Kind.PREPROJECTIVE, rank=d.d1)
    if d.d1 == d.d2 and d.d1 > 0:
        return Indecomposable(kind=Kind.REGULAR, rank=d.d1)
    if d.d1 == d.d2 + 1:
        return Indecomposable(kind=Kind.PREINJECTIVE, rank=d.d2)
    raise MalformedQuiverError(f"string of dimension {d} is not a Kronecker indecomposable")


def decompose(quiver: CoeffQuiver) -> Tuple[PlacedSummand, ...]:
    """Indecomposable summands of a coordinate representation, ordered by position."""
    placed = []
    for piece in quiver.components():
        layer2 = [k for layer, k in piece.vertices if layer == 2]
        position = min(layer2) if layer2 else min(k for _, k in piece.vertices)
        placed.append(PlacedSummand(shape=shape_of(piece), position=position))
    return tuple(sorted(placed, key=lambda s: (s.position, s.shape.sort_key())))


def descriptor_of(quiver: CoeffQuiver) -> RepDescriptor:
    return RepDescriptor(summands=tuple(s.shape for s in decompose(quiver)))


def _split_layers(selection: Iterable[Vertex]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    chosen = list(selection)
    return (
        tuple(sorted(k for layer, k in chosen if layer == 1)),
        tuple(sorted(k for layer, k in chosen if layer == 2)),
    )


@observe_if_available(name="enumerate_fixed_points")
def enumerate_fixed_points(m: Indecomposable, e: DimVector) -> List[FixedPoint]:
    """
    All successor-closed vertex sets of Gamma(M) with e1 layer-1 and e2 layer-2 vertices.

    Layer-2 vertices are sinks, so a set is successor-closed exactly when S2 contains the
    targets of the arrows leaving S1; S1 is chosen first and S2 completed around that
    closure.
    """
    quiver = build_coeff_quiver(m)
    dim = quiver.dim
    if not e <= dim:
        return []
    layer2 = set(range(1, dim.d2 + 1))
    points = []
    for s1 in combinations(range(1, dim.d1 + 1), e.d1):
        required = {w[1] for k in s1 for w in quiver.graph.successors((1, k))}
        if len(required) > e.d2:
            continue
        for extra in combinations(sorted(layer2 - required), e.d2 - len(required)):
            s2 = tuple(sorted(required.union(extra)))
            selection = [(1, k) for k in s1] + [(2, k) for k in s2]
            if not quiver.is_predecessor_closed(quiver.vertices - set(selection)):
                raise IdentityViolation(f"complement of {s1}, {s2} in Gamma({m}) is not predecessor-closed")
            points.append(FixedPoint(s1=s1, s2=s2, summands=decompose(quiver.induced(selection))))
    points.sort(key=lambda p: (p.s1, p.s2))
    logger.debug(f"Gr_{e}({m}): {len(points)} fixed points")
    return points


def fixed_point_quiver(m: Indecomposable, fixed_point: FixedPoint) -> CoeffQuiver:
    """The subquiver of Gamma(M) spanned by a fixed point, weights inherited."""
    quiver = build_coeff_quiver(m)
    selection = fixed_point.vertices
    if not selection <= quiver.vertices or not quiver.is_successor_closed(selection):
        raise MalformedQuiverError(f"{fixed_point.s1}, {fixed_point.s2} is not successor-closed in Gamma({m})")
    return quiver.induced(selection)


def quotient_quiver(m: Indecomposable, fixed_point: FixedPoint) -> CoeffQuiver:
    """Coordinate quotient M/L: the complement of L with induced arrows and inherited weights."""
    quiver = build_coeff_quiver(m)
    selection = fixed_point.vertices
    if not selection <= quiver.vertices or not quiver.is_successor_closed(selection):
        raise MalformedQuiverError(f"{fixed_point.s1}, {fixed_point.s2} is not successor-closed in Gamma({m})")
    return quiver.induced(quiver.vertices - selection)


def fixed_point_from_vertices(m: Indecomposable, selection: Iterable[Vertex]) -> FixedPoint:
    """Build the FixedPoint record of a successor-closed vertex set of Gamma(M)."""
    quiver = build_coeff_quiver(m)
    chosen = frozenset(selection)
    if not chosen <= quiver.vertices or not quiver.is_successor_closed(chosen):
        raise MalformedQuiverError(f"{sorted(chosen)} is not successor-closed in Gamma({m})")
    s1, s2 = _split_layers(chosen)
    return FixedPoint(s1=s1, s2=s2, summands=decompose(quiver.induced(chosen)))
