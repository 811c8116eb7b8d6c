"""Graphs of quadratic forms and the delete-vertices-leave-a-path test.

The quadratic part of a GBF induces a weighted graph: one vertex per
variable, one edge per degree-2 term, weighted by the term's coefficient.
The constructions in this package require that deleting a chosen set of
vertices leaves a Hamiltonian path on the survivors, and (for moduli above
2) that every surviving edge carries weight q/2.  Validation here is exact:
connectivity plus degree counting, no heuristics.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .gbf import GBF


class NotAPathError(Exception):
    """Deleting the chosen vertices does not leave a valid weighted path."""

    EMPTY = "empty-residual"
    BRANCH = "branch-vertex"
    DISCONNECTED = "disconnected"
    CYCLE = "cycle"
    WEIGHT = "edge-weight"

    def __init__(self, reason: str, detail: str):
        super().__init__(f"{reason}: {detail}")
        self.reason = reason
        self.detail = detail


@dataclass(frozen=True)
class LabeledGraph:
    """Undirected simple graph with integer edge weights.

    Edges normalize to (min, max, weight) and sort; duplicate pairs and
    self-loops are rejected, as are zero weights (a zero coefficient is no
    edge at all).
    """

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.vertex_count}")
        seen: set[tuple[int, int]] = set()
        normalized = []
        for i, j, w in self.edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < self.vertex_count and 0 <= j < self.vertex_count):
                raise ValueError(f"edge ({i}, {j}) out of range for {self.vertex_count} vertices")
            if w == 0:
                raise ValueError(f"edge ({i}, {j}) has zero weight")
            pair = (min(i, j), max(i, j))
            if pair in seen:
                raise ValueError(f"duplicate edge {pair}")
            seen.add(pair)
            normalized.append((pair[0], pair[1], w))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs) -> "LabeledGraph":
        """Build from (i, j) or (i, j, weight) items; weight defaults to 1."""
        edges = []
        for item in pairs:
            if len(item) == 2:
                i, j = item
                edges.append((i, j, 1))
            else:
                edges.append(tuple(item))
        return cls(vertex_count, tuple(edges))

    def edge_weight(self, i: int, j: int) -> int | None:
        pair = (min(i, j), max(i, j))
        for a, b, w in self.edges:
            if (a, b) == pair:
                return w
        return None

    def adjacency(self, keep: frozenset[int] | None = None) -> dict[int, list[int]]:
        """Neighbor lists, restricted to `keep` when given."""
        verts = range(self.vertex_count) if keep is None else sorted(keep)
        adj: dict[int, list[int]] = {v: [] for v in verts}
        for i, j, _ in self.edges:
            if keep is None or (i in keep and j in keep):
                adj[i].append(j)
                adj[j].append(i)
        return adj


@dataclass(frozen=True)
class PathCertificate:
    """Witness that a deletion leaves a path: the order and its endpoints.

    end_vertices has two entries for a path on two or more vertices and one
    for the single-vertex path.  Either endpoint is a valid choice wherever
    a construction asks for one.
    """

    deleted: tuple[int, ...]
    path_order: tuple[int, ...]
    end_vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if tuple(sorted(self.deleted)) != self.deleted:
            raise ValueError("deleted vertices must be sorted")
        if not self.path_order:
            raise ValueError("path must be nonempty")
        if len(set(self.path_order)) != len(self.path_order):
            raise ValueError("path order repeats a vertex")
        if set(self.deleted) & set(self.path_order):
            raise ValueError("deleted vertices overlap the path")
        expected_ends = tuple(sorted({self.path_order[0], self.path_order[-1]}))
        if tuple(sorted(self.end_vertices)) != expected_ends:
            raise ValueError(f"end vertices {self.end_vertices} do not match path {self.path_order}")

    def verify_against(self, graph: LabeledGraph) -> None:
        """Check this certificate against the graph it claims to describe.

        Raises ValueError if the deleted set and path do not partition the
        vertices or the path edges do not exactly match the residual graph.
        """
        residual = set(range(graph.vertex_count)) - set(self.deleted)
        if set(self.path_order) != residual:
            raise ValueError("path does not cover the residual vertex set")
        adj = graph.adjacency(frozenset(residual))
        path_edges = {
            (min(a, b), max(a, b))
            for a, b in zip(self.path_order, self.path_order[1:])
        }
        residual_edges = {
            (min(v, u), max(v, u)) for v, nbrs in adj.items() for u in nbrs
        }
        if path_edges != residual_edges:
            raise ValueError("path edges do not match the residual graph")


def graph_of_quadratic(f: GBF) -> LabeledGraph:
    """Graph of the quadratic part of f.

    Vertices are the m variables; each degree-2 term contributes an edge
    weighted by its coefficient.  Linear and constant terms are ignored.
    Terms of degree 3 or more, and quadratic terms written with complemented
    literals, have no graph reading and are rejected.
    """
    edges = []
    for t in f.terms:
        if t.degree > 2:
            raise ValueError(f"term of degree {t.degree} has no graph form")
        if t.degree == 2:
            if any(l.complemented for l in t.literals):
                raise ValueError("quadratic terms must use plain literals")
            i, j = (l.var_index for l in t.literals)
            edges.append((i, j, t.coefficient))
    return LabeledGraph(f.m, tuple(edges))


def validate_deletion_path(
    graph: LabeledGraph,
    deleted: tuple[int, ...],
    required_weight: int | None = None,
) -> PathCertificate:
    """Certify that removing `deleted` leaves a path on the remaining vertices.

    The residual graph must be connected, acyclic, and free of vertices of
    degree 3 or more; a single surviving vertex counts as the trivial path.
    With required_weight set, every surviving edge must carry exactly that
    weight.  Raises NotAPathError (with a structured reason) on failure and
    ValueError on malformed input.
    """
    deleted_t = tuple(sorted(deleted))
    dset = set(deleted_t)
    if len(dset) != len(deleted_t):
        raise ValueError(f"deleted vertices repeat: {deleted}")
    for v in dset:
        if not 0 <= v < graph.vertex_count:
            raise ValueError(f"deleted vertex {v} out of range")

    residual = [v for v in range(graph.vertex_count) if v not in dset]
    if not residual:
        raise NotAPathError(NotAPathError.EMPTY, "no vertices survive the deletion")

    keep = frozenset(residual)
    adj = graph.adjacency(keep)
    if required_weight is not None:
        for i, j, w in graph.edges:
            if i in keep and j in keep and w != required_weight:
                raise NotAPathError(
                    NotAPathError.WEIGHT,
                    f"edge ({i}, {j}) has weight {w}, required {required_weight}",
                )

    for v in residual:
        if len(adj[v]) >= 3:
            raise NotAPathError(
                NotAPathError.BRANCH, f"vertex {v} has degree {len(adj[v])} after deletion"
            )

    # breadth-first reachability from the smallest survivor
    seen = {residual[0]}
    frontier = [residual[0]]
    while frontier:
        nxt = []
        for v in frontier:
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    if len(seen) != len(residual):
        missing = sorted(set(residual) - seen)
        raise NotAPathError(
            NotAPathError.DISCONNECTED, f"residual graph splits; unreachable: {missing}"
        )

    edge_count = sum(len(nbrs) for nbrs in adj.values()) // 2
    if edge_count != len(residual) - 1:
        # connected with max degree 2 and too many edges: a single cycle
        raise NotAPathError(
            NotAPathError.CYCLE, f"residual graph is a cycle on {len(residual)} vertices"
        )

    ends = tuple(sorted(v for v in residual if len(adj[v]) <= 1))
    start = ends[0]
    order = [start]
    prev = -1
    while len(order) < len(residual):
        nxt = [u for u in adj[order[-1]] if u != prev]
        prev = order[-1]
        order.append(nxt[0])

    return PathCertificate(deleted=deleted_t, path_order=tuple(order), end_vertices=ends)


def enumerate_admissible_deletions(
    graph: LabeledGraph, k: int, required_weight: int | None = None
) -> list[PathCertificate]:
    """All k-subsets of vertices whose deletion leaves a valid path.

    Certificates come back in lexicographic order of the deleted set; each
    carries both endpoint choices.  k must satisfy 0 <= k < vertex_count.
    """
    if not 0 <= k < graph.vertex_count:
        raise ValueError(f"k={k} out of range for {graph.vertex_count} vertices")
    found = []
    for combo in combinations(range(graph.vertex_count), k):
        try:
            found.append(validate_deletion_path(graph, combo, required_weight))
        except NotAPathError:
            continue
    return found
