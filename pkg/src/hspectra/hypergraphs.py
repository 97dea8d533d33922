"""k-uniform hypergraph model: validation, named families, structure predicates.

Vertices are 1-indexed identifiers 1..n.  Edges are stored as sorted tuples
and the edge list itself is kept in lexicographic order, so equal hypergraphs
compare equal and file round-trips are byte exact.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Optional

import numpy as np

from .errors import (
    DuplicateEdge,
    InvalidFamilyParameter,
    NonUniformEdge,
    OddUniformity,
    TrivialHypergraph,
    ValidationError,
    VertexOutOfRange,
)

Edge = tuple[int, ...]


# ---------------------------------------------------------------------------
# core types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UniformHypergraph:
    """Immutable k-uniform hypergraph on vertex set {1, ..., n}."""

    k: int
    n: int
    edges: tuple[Edge, ...]

    @staticmethod
    def canonical(k: int, n: int, edges: Iterable[Iterable[int]]) -> "UniformHypergraph":
        """Build with sorted edges and a sorted edge list, then validate."""
        canon = tuple(sorted(tuple(sorted(e)) for e in edges))
        h = UniformHypergraph(k, n, canon)
        validate(h)
        return h

    def to_dict(self) -> dict:
        return {"k": self.k, "n": self.n, "edges": [list(e) for e in self.edges]}

    @staticmethod
    def from_dict(data: Mapping) -> "UniformHypergraph":
        return UniformHypergraph.canonical(int(data["k"]), int(data["n"]), data["edges"])


@dataclass(frozen=True)
class Graph:
    """Simple undirected 2-uniform graph, the base of a power hypergraph."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @staticmethod
    def canonical(n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        canon = tuple(sorted(tuple(sorted(e)) for e in edges))
        g = Graph(n, canon)  # type: ignore[arg-type]
        validate_graph(g)
        return g

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @staticmethod
    def from_dict(data: Mapping) -> "Graph":
        return Graph.canonical(int(data["n"]), data["edges"])


@dataclass(frozen=True)
class Partition:
    """Disjoint bipartition V1 | V2 of the vertex set, both parts nonempty."""

    part1: frozenset[int]
    part2: frozenset[int]


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex edge-incidence counts; index i holds the degree of vertex i+1."""

    per_vertex: tuple[int, ...]
    max_degree: int


@dataclass(frozen=True)
class FamilySpec:
    """Parameter bundle naming one member of a generated family.

    family is one of hyperstar, hypercycle, hyperpath, sunflower, power,
    complete.  d is the hyperstar size or hyperpath length, s the hypercycle
    size, n the vertex count of a complete hypergraph and base the graph a
    power hypergraph is built from.
    """

    family: str
    k: int
    d: Optional[int] = None
    s: Optional[int] = None
    n: Optional[int] = None
    base: Optional[Graph] = None

    def to_dict(self) -> dict:
        out: dict = {"family": self.family, "k": self.k}
        if self.d is not None:
            out["d"] = self.d
        if self.s is not None:
            out["s"] = self.s
        if self.n is not None:
            out["n"] = self.n
        if self.base is not None:
            out["base"] = self.base.to_dict()
        return out


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def validate(h: UniformHypergraph) -> None:
    """Raise a ValidationError subclass unless every invariant holds.

    Enforced: k >= 3, at least one edge, every edge has exactly k distinct
    vertices inside 1..n, and no repeated edges.
    """
    if h.k < 3:
        raise ValidationError(f"uniformity k={h.k} out of scope, need k >= 3")
    if h.n < 1:
        raise VertexOutOfRange(f"vertex count n={h.n} must be positive")
    if not h.edges:
        raise TrivialHypergraph("hypergraph has no edges")
    seen: set[Edge] = set()
    for e in h.edges:
        distinct = set(e)
        if len(distinct) != h.k or len(e) != h.k:
            raise NonUniformEdge(f"edge {tuple(e)} has {len(distinct)} distinct vertices, expected {h.k}")
        for v in e:
            if not (1 <= v <= h.n):
                raise VertexOutOfRange(f"vertex {v} outside 1..{h.n}")
        key = tuple(sorted(e))
        if key in seen:
            raise DuplicateEdge(f"edge {key} repeated")
        seen.add(key)


def validate_graph(g: Graph) -> None:
    seen: set[tuple[int, int]] = set()
    for e in g.edges:
        if len(set(e)) != 2 or len(e) != 2:
            raise NonUniformEdge(f"graph edge {tuple(e)} is not a pair of distinct vertices")
        for v in e:
            if not (1 <= v <= g.n):
                raise VertexOutOfRange(f"vertex {v} outside 1..{g.n}")
        key = tuple(sorted(e))
        if key in seen:
            raise DuplicateEdge(f"graph edge {key} repeated")
        seen.add(key)


# ---------------------------------------------------------------------------
# basic operations
# ---------------------------------------------------------------------------

def degrees(h: UniformHypergraph) -> DegreeProfile:
    """Edge-incidence count of every vertex; sum of degrees is k * |E|."""
    counts = [0] * h.n
    for e in h.edges:
        for v in e:
            counts[v - 1] += 1
    return DegreeProfile(per_vertex=tuple(counts), max_degree=max(counts))


def is_connected(h: UniformHypergraph) -> bool:
    """True iff the edges join all of 1..n into a single component."""
    parent = list(range(h.n + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in h.edges:
        first = e[0]
        for v in e[1:]:
            ra, rb = find(first), find(v)
            if ra != rb:
                parent[rb] = ra
    roots = {find(v) for v in range(1, h.n + 1)}
    return len(roots) == 1


def cored_structure(h: UniformHypergraph) -> Optional[dict[Edge, int]]:
    """One degree-1 vertex per edge, or None if some edge has none.

    Ties break to the smallest identifier so the map is deterministic.
    """
    deg = degrees(h).per_vertex
    out: dict[Edge, int] = {}
    for e in h.edges:
        pendants = [v for v in e if deg[v - 1] == 1]
        if not pendants:
            return None
        out[e] = min(pendants)
    return out


def intersectional_vertices(h: UniformHypergraph) -> frozenset[int]:
    """Vertices of degree two or more."""
    deg = degrees(h).per_vertex
    return frozenset(v for v in range(1, h.n + 1) if deg[v - 1] >= 2)


def odd_bipartition(h: UniformHypergraph) -> Optional[Partition]:
    """A bipartition meeting every edge in an odd number of vertices, if any.

    Solves one parity constraint per edge over GF(2) by Gaussian elimination.
    Among solutions the deterministic representative assigns free variables 0
    (ascending vertex order); if a part were empty the lowest free variable is
    flipped.  Returns None when the parity system is infeasible.
    """
    if h.k % 2 == 1:
        raise OddUniformity("odd-bipartiteness is defined only for even uniformity")
    m, n = len(h.edges), h.n
    aug = np.zeros((m, n + 1), dtype=np.uint8)
    for row, e in enumerate(h.edges):
        for v in e:
            aug[row, v - 1] ^= 1
        aug[row, n] = 1

    pivot_of_col: dict[int, int] = {}
    r = 0
    for c in range(n):
        hits = np.nonzero(aug[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            aug[[r, p]] = aug[[p, r]]
        others = np.nonzero(aug[:, c])[0]
        for i in others:
            if i != r:
                aug[i] ^= aug[r]
        pivot_of_col[c] = r
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i, n] == 1 and not aug[i, :n].any():
            return None

    free_cols = [c for c in range(n) if c not in pivot_of_col]

    def solve(assign_first_free: int) -> np.ndarray:
        x = np.zeros(n, dtype=np.uint8)
        if free_cols and assign_first_free:
            x[free_cols[0]] = 1
        for c, row in pivot_of_col.items():
            val = aug[row, n]
            for fc in free_cols:
                if aug[row, fc]:
                    val ^= x[fc]
            x[c] = val
        return x

    for flip in (0, 1):
        x = solve(flip)
        part1 = frozenset(int(v) + 1 for v in np.nonzero(x)[0])
        part2 = frozenset(range(1, n + 1)) - part1
        if part1 and part2:
            return Partition(part1=part1, part2=part2)
        if not free_cols:
            break
    return None


def satisfies_odd_bipartition(h: UniformHypergraph, part: Partition) -> bool:
    """Check |e intersect part1| is odd for every edge."""
    return all(len(part.part1.intersection(e)) % 2 == 1 for e in h.edges)


# ---------------------------------------------------------------------------
# family generators
# ---------------------------------------------------------------------------

def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidFamilyParameter(message)


def hyperstar(k: int, d: int) -> UniformHypergraph:
    """d edges of k vertices sharing the single heart vertex 1."""
    _require(k >= 3, f"hyperstar needs k >= 3, got {k}")
    _require(d >= 1, f"hyperstar needs size d >= 1, got {d}")
    n = d * (k - 1) + 1
    edges = []
    for i in range(d):
        lo = i * (k - 1) + 2
        edges.append((1,) + tuple(range(lo, lo + k - 1)))
    return UniformHypergraph.canonical(k, n, edges)


def hypercycle(k: int, s: int) -> UniformHypergraph:
    """Cyclic chain of s edges, consecutive edges sharing one junction vertex."""
    _require(k >= 3, f"hypercycle needs k >= 3, got {k}")
    _require(s >= 2, f"hypercycle needs size s >= 2, got {s}")
    n = s * (k - 1)
    edges = []
    for j in range(s):
        block = tuple(range(j * (k - 1) + 1, j * (k - 1) + k))
        nxt = (j + 1) % s * (k - 1) + 1
        edges.append(block + (nxt,))
    return UniformHypergraph.canonical(k, n, edges)


def hyperpath(k: int, d: int) -> UniformHypergraph:
    """Open chain of d edges, consecutive edges sharing one junction vertex."""
    _require(k >= 3, f"hyperpath needs k >= 3, got {k}")
    _require(d >= 1, f"hyperpath needs length d >= 1, got {d}")
    n = d * (k - 1) + 1
    edges = [tuple(range(j * (k - 1) + 1, j * (k - 1) + k + 1)) for j in range(d)]
    return UniformHypergraph.canonical(k, n, edges)


def sunflower(k: int) -> UniformHypergraph:
    """k-1 disjoint petal edges plus a center edge through their anchors.

    Petal j occupies vertices (j-1)*k+1 .. j*k with anchor (j-1)*k+1; the
    center edge joins the anchors with the fresh vertex n = (k-1)*k + 1.
    """
    _require(k >= 3, f"sunflower needs k >= 3, got {k}")
    n = (k - 1) * k + 1
    petals = [tuple(range((j - 1) * k + 1, j * k + 1)) for j in range(1, k)]
    center = tuple((j - 1) * k + 1 for j in range(1, k)) + (n,)
    return UniformHypergraph.canonical(k, n, petals + [center])


def complete_hypergraph(k: int, n: int) -> UniformHypergraph:
    """All n-choose-k edges; regular of degree binom(n-1, k-1)."""
    _require(k >= 3, f"complete hypergraph needs k >= 3, got {k}")
    _require(n >= k, f"complete hypergraph needs n >= k, got n={n}, k={k}")
    return UniformHypergraph.canonical(k, n, combinations(range(1, n + 1), k))


def kth_power(g: Graph, k: int) -> UniformHypergraph:
    """Blow every graph edge up to k vertices by adding k-2 fresh ones.

    Fresh vertices are appended after the base graph's, grouped by base edge
    in input order, so original vertices keep their identifiers and degrees.
    """
    _require(k >= 3, f"power hypergraph needs k >= 3, got {k}")
    validate_graph(g)
    edges = []
    nxt = g.n + 1
    for (u, v) in g.edges:
        fresh = tuple(range(nxt, nxt + k - 2))
        nxt += k - 2
        edges.append((u, v) + fresh)
    return UniformHypergraph.canonical(k, g.n + (k - 2) * len(g.edges), edges)


def star_graph(leaves: int) -> Graph:
    """Center vertex 1 joined to `leaves` pendant vertices."""
    _require(leaves >= 1, "star needs at least one leaf")
    return Graph.canonical(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def cycle_graph(length: int) -> Graph:
    _require(length >= 3, "cycle needs length >= 3")
    return Graph.canonical(length, [(i, i % length + 1) for i in range(1, length + 1)])


def path_graph(length: int) -> Graph:
    """Path with `length` edges on length+1 vertices."""
    _require(length >= 1, "path needs length >= 1")
    return Graph.canonical(length + 1, [(i, i + 1) for i in range(1, length + 1)])


def generate(spec: FamilySpec) -> UniformHypergraph:
    """Canonical labeled member of the family described by `spec`."""
    fam = spec.family
    if fam == "hyperstar":
        _require(spec.d is not None, "hyperstar needs d")
        return hyperstar(spec.k, spec.d)
    if fam == "hypercycle":
        _require(spec.s is not None, "hypercycle needs s")
        return hypercycle(spec.k, spec.s)
    if fam == "hyperpath":
        _require(spec.d is not None, "hyperpath needs d")
        return hyperpath(spec.k, spec.d)
    if fam == "sunflower":
        return sunflower(spec.k)
    if fam == "complete":
        _require(spec.n is not None, "complete needs n")
        return complete_hypergraph(spec.k, spec.n)
    if fam == "power":
        _require(spec.base is not None, "power needs a base graph")
        return kth_power(spec.base, spec.k)
    raise InvalidFamilyParameter(f"unknown family {fam!r}")


# ---------------------------------------------------------------------------
# family detection (used by closed-form dispatch and lemma applicability)
# ---------------------------------------------------------------------------

def detect_hyperstar(h: UniformHypergraph) -> Optional[int]:
    """Size d if h is a hyperstar: one vertex in all edges, the rest degree 1."""
    deg = degrees(h).per_vertex
    hearts = [v for v in range(1, h.n + 1) if all(v in e for e in h.edges)]
    if not hearts:
        return None
    heart = hearts[0]
    if all(deg[v - 1] == 1 for v in range(1, h.n + 1) if v != heart):
        return len(h.edges)
    return None


def detect_sunflower(h: UniformHypergraph) -> bool:
    """True iff h is the k-uniform sunflower (up to labels)."""
    k = h.k
    if len(h.edges) != k or h.n != (k - 1) * k + 1:
        return False
    deg = degrees(h).per_vertex
    anchors = {v for v in range(1, h.n + 1) if deg[v - 1] == 2}
    if len(anchors) != k - 1 or any(d not in (1, 2) for d in deg):
        return False
    centers = [e for e in h.edges if len(anchors.intersection(e)) == k - 1]
    if len(centers) != 1:
        return False
    petals = [e for e in h.edges if e != centers[0]]
    return all(len(anchors.intersection(e)) == 1 for e in petals)


def _junction_chain(h: UniformHypergraph) -> Optional[list[frozenset[int]]]:
    """Per-edge sets of degree-2 vertices if all degrees are 1 or 2."""
    deg = degrees(h).per_vertex
    if any(d > 2 for d in deg):
        return None
    return [frozenset(v for v in e if deg[v - 1] == 2) for e in h.edges]


def detect_hypercycle(h: UniformHypergraph) -> Optional[int]:
    """Size s if h is a hypercycle: every edge holds exactly two junctions
    forming a single closed chain."""
    junctions = _junction_chain(h)
    if junctions is None or len(h.edges) < 2:
        return None
    s = len(h.edges)
    if h.n != s * (h.k - 1) or any(len(j) != 2 for j in junctions):
        return None
    use = [0] * (h.n + 1)
    for j in junctions:
        for v in j:
            use[v] += 1
    if any(c not in (0, 2) for c in use):
        return None
    return s if is_connected(h) else None


def detect_hyperpath(h: UniformHypergraph) -> Optional[int]:
    """Length d if h is a hyperpath: an open chain of edges joined by
    single junctions."""
    junctions = _junction_chain(h)
    if junctions is None:
        return None
    d = len(h.edges)
    if h.n != d * (h.k - 1) + 1:
        return None
    if d == 1:
        return 1 if not junctions[0] else None
    ends = [j for j in junctions if len(j) == 1]
    mids = [j for j in junctions if len(j) == 2]
    if len(ends) != 2 or len(mids) != d - 2:
        return None
    return d if is_connected(h) else None


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------

def write_json_atomic(path: str, payload) -> None:
    """Serialize to a temp file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_hypergraph(h: UniformHypergraph, path: str) -> None:
    write_json_atomic(path, h.to_dict())


def load_hypergraph(path: str) -> UniformHypergraph:
    with open(path, encoding="utf-8") as fh:
        return UniformHypergraph.from_dict(json.load(fh))


def save_graph(g: Graph, path: str) -> None:
    write_json_atomic(path, g.to_dict())


def load_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return Graph.from_dict(json.load(fh))
