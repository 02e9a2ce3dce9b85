"""Alliance and domination predicates, certificates, and the three
constructive procedures that turn existence proofs into executable code.

A set S is a defensive k-alliance when every member has at least k more
neighbors inside S than outside; "global" additionally requires S to
dominate the graph. All functions here are pure over immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph, connected_components_of

REQUIRE_DEFENSIVE = "defensive"
REQUIRE_GLOBAL = "global"
REQUIRE_GLOBAL_CONNECTED = "global_connected"
REQUIREMENTS = (REQUIRE_DEFENSIVE, REQUIRE_GLOBAL, REQUIRE_GLOBAL_CONNECTED)


class ConstructionInvariantError(RuntimeError):
    """A constructive procedure produced a set that failed re-certification.

    The constructions are guaranteed to succeed whenever their preconditions
    hold, so this signals an implementation bug, never bad input.
    """


@dataclass(frozen=True)
class VertexSet:
    """Subset of the vertices of one specific graph, stored as a bitmask.

    Set operations are only defined between sets tagged with the same graph.
    """

    graph: Graph
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.graph.n:
            raise ValueError("membership bits outside the graph's vertex range")

    @classmethod
    def from_vertices(cls, graph: Graph, members: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in members:
            if not 0 <= v < graph.n:
                raise ValueError(f"vertex {v} out of range for order {graph.n}")
            bits |= 1 << v
        return cls(graph, bits)

    @classmethod
    def full(cls, graph: Graph) -> "VertexSet":
        return cls(graph, (1 << graph.n) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.graph.n) if (self.bits >> v) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.graph.n and bool((self.bits >> v) & 1)

    def __iter__(self):
        return iter(self.members)

    def _check_same_graph(self, other: "VertexSet"):
        if self.graph != other.graph:
            raise ValueError("vertex sets belong to different graphs")

    def union(self, other: "VertexSet") -> "VertexSet":
        self._check_same_graph(other)
        return VertexSet(self.graph, self.bits | other.bits)

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._check_same_graph(other)
        return VertexSet(self.graph, self.bits & ~other.bits)

    def complement(self) -> "VertexSet":
        return VertexSet(self.graph, ~self.bits & ((1 << self.graph.n) - 1))

    def issubset(self, other: "VertexSet") -> bool:
        self._check_same_graph(other)
        return self.bits & ~other.bits == 0


@dataclass(frozen=True)
class AllianceCertificate:
    """Exact per-vertex evidence for (or against) an alliance claim.

    ``margins`` maps each member v to inside(v) - outside(v) - k, so
    defensiveness is exactly "all margins nonnegative". ``dominators`` maps
    each non-member to its number of neighbors inside the set.
    """

    subject: VertexSet
    k: int
    margins: dict[int, int]
    dominators: dict[int, int]
    is_defensive: bool
    is_dominating: bool
    is_connected_induced: bool
    requirement: str
    satisfied: bool

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "set": list(self.subject.members),
            "margins": {str(v): m for v, m in sorted(self.margins.items())},
            "dominators": {str(u): c for u, c in sorted(self.dominators.items())},
            "is_defensive": self.is_defensive,
            "is_dominating": self.is_dominating,
            "is_connected_induced": self.is_connected_induced,
            "requirement": self.requirement,
            "satisfied": self.satisfied,
        }


def boundary_degrees(g: Graph, s: VertexSet) -> dict[int, tuple[int, int]]:
    """For every vertex v, the pair (neighbors inside S, neighbors outside S)."""
    if s.graph != g:
        raise ValueError("vertex set is tagged to a different graph")
    inside_set = set(s.members)
    out: dict[int, tuple[int, int]] = {}
    for v in range(g.n):
        inside = len(g.adjacency[v] & inside_set)
        out[v] = (inside, g.degrees[v] - inside)
    return out


def is_defensive_k_alliance(g: Graph, s: VertexSet, k: int) -> bool:
    """Every member of s has at least k more neighbors inside than outside."""
    if len(s) == 0:
        raise ValueError("alliances are nonempty")
    degrees = boundary_degrees(g, s)
    return all(degrees[v][0] >= degrees[v][1] + k for v in s)


def is_dominating(g: Graph, s: VertexSet) -> bool:
    """Every vertex outside s has a neighbor in s (false for empty s when n >= 1)."""
    if s.graph != g:
        raise ValueError("vertex set is tagged to a different graph")
    inside_set = set(s.members)
    if not inside_set:
        return g.n == 0
    return all(
        g.adjacency[u] & inside_set for u in range(g.n) if u not in inside_set
    )


def is_total_dominating(g: Graph, s: VertexSet) -> bool:
    """Every vertex of the graph, members included, has a neighbor in s."""
    if s.graph != g:
        raise ValueError("vertex set is tagged to a different graph")
    inside_set = set(s.members)
    return all(g.adjacency[v] & inside_set for v in range(g.n))


def certify(
    g: Graph, s: VertexSet, k: int, require: str = REQUIRE_DEFENSIVE
) -> AllianceCertificate:
    """Full certificate for s at level k; ``satisfied`` reflects ``require``."""
    if require not in REQUIREMENTS:
        raise ValueError(f"unknown requirement {require!r}")
    if len(s) == 0:
        raise ValueError("alliances are nonempty")
    degrees = boundary_degrees(g, s)
    members = s.members
    margins = {v: degrees[v][0] - degrees[v][1] - k for v in members}
    dominators = {u: degrees[u][0] for u in range(g.n) if u not in s}
    defensive = all(m >= 0 for m in margins.values())
    dominating = all(c >= 1 for c in dominators.values())
    connected = connected_components_of(g, members) == 1
    if require == REQUIRE_DEFENSIVE:
        satisfied = defensive
    elif require == REQUIRE_GLOBAL:
        satisfied = defensive and dominating
    else:
        satisfied = defensive and dominating and connected
    return AllianceCertificate(
        subject=s,
        k=k,
        margins=margins,
        dominators=dominators,
        is_defensive=defensive,
        is_dominating=dominating,
        is_connected_induced=connected,
        requirement=require,
        satisfied=satisfied,
    )


def shrink_to_lower_k(
    g: Graph, s: VertexSet, k: int, w: VertexSet, r: int
) -> VertexSet:
    """Remove r vertices of s (keeping the dominating core w) to trade level
    k for level k - 2r.

    Drops the lexicographically smallest r-subset of s minus w; the result is
    re-certified as a global defensive (k-2r)-alliance before returning.
    """
    if not certify(g, s, k, REQUIRE_GLOBAL).satisfied:
        raise ValueError("s must be a global defensive k-alliance")
    if not w.issubset(s):
        raise ValueError("w must be a subset of s")
    if not is_dominating(g, w):
        raise ValueError("w must be a dominating set")
    if not 0 <= r <= len(s) - len(w):
        raise ValueError(f"r must lie in [0, {len(s) - len(w)}]")
    removable = sorted(set(s.members) - set(w.members))
    dropped = VertexSet.from_vertices(g, removable[:r])
    result = s.difference(dropped)
    if not certify(g, result, k - 2 * r, REQUIRE_GLOBAL).satisfied:
        raise ConstructionInvariantError(
            "shrunken set failed to certify as a global defensive "
            f"({k - 2 * r})-alliance"
        )
    return result


def construct_upper_witness(g: Graph, k: int) -> VertexSet:
    """Global defensive k-alliance of size n - floor((min_degree - k) / 2).

    Removes that many lowest-index neighbors of the first maximum-degree
    vertex; for k >= min_degree the whole vertex set is returned unchanged.
    """
    d_min = g.min_degree
    if k >= d_min:
        full = VertexSet.full(g)
        if k == d_min and not certify(g, full, k, REQUIRE_GLOBAL).satisfied:
            raise ConstructionInvariantError("whole vertex set failed to certify")
        return full
    drop_count = (d_min - k) // 2
    d_max = g.max_degree
    if drop_count > d_max:
        raise ValueError(
            f"k={k} is too far below the degree range: the construction would "
            f"remove {drop_count} neighbors but only {d_max} are available"
        )
    hub = min(v for v in range(g.n) if g.degrees[v] == d_max)
    dropped = sorted(g.adjacency[hub])[:drop_count]
    result = VertexSet.full(g).difference(VertexSet.from_vertices(g, dropped))
    if not certify(g, result, k, REQUIRE_GLOBAL).satisfied:
        raise ConstructionInvariantError(
            f"witness of size {len(result)} failed to certify as a global "
            f"defensive {k}-alliance"
        )
    return result


def cubic_augment_dominating(g: Graph, s: VertexSet) -> VertexSet:
    """Extend a dominating set of a 3-regular graph into a global defensive
    (-1)-alliance of size at most 2|s|.

    Every member with no neighbor inside s adopts its lowest-index outside
    neighbor; the result is re-certified before returning.
    """
    if any(d != 3 for d in g.degrees):
        raise ValueError("graph is not cubic")
    if not is_dominating(g, s):
        raise ValueError("s must be a dominating set")
    inside_set = set(s.members)
    adopted = []
    for v in s:
        if not g.adjacency[v] & inside_set:
            adopted.append(min(g.adjacency[v] - inside_set))
    result = s.union(VertexSet.from_vertices(g, adopted))
    if len(result) > 2 * len(s):
        raise ConstructionInvariantError("augmented set exceeded twice the input size")
    if not certify(g, result, -1, REQUIRE_GLOBAL).satisfied:
        raise ConstructionInvariantError(
            "augmented set failed to certify as a global defensive (-1)-alliance"
        )
    return result
