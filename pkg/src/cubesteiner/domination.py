"""Dominating and connected dominating sets of the hypercube.

A set dominates Q_n when every vertex either belongs to it or has a
neighbor in it. Constructions provided:

- greedy: repeatedly take the vertex covering the most uncovered vertices
  (ties to the smallest vertex int). Dominating, rarely connected.
- hamming_code: for n = 2^m - 1, the perfect single-error-correcting code
  of length n; its distance-1 balls tile the cube, so it dominates with
  exactly 2^n/(n+1) words, pairwise at distance >= 3 (never connected for
  n >= 3).
- steinerize: connect a disconnected dominating set by repeatedly joining
  the two closest components along a deterministic geodesic.
- exact minima: smallest dominating / connected dominating set by
  increasing-size search (exhaustive for n <= 4, pruned branch and bound
  for connected n = 5).

DominatingSetCertificate re-verifies everything it claims at construction
time, so a certificate that exists is correct; no constructor is trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cube import Dimension, VertexSet
from .errors import DEFAULT_BUDGET, check_budget
from .steiner import shortest_path

METHODS = ("greedy", "hamming_code", "exact", "steinerized")


def closed_neighborhood_masks(dim: Dimension) -> list[int]:
    """closed[v] = membership mask over V(Q_n) of v and its n neighbors."""
    masks = []
    for v in range(dim.num_vertices):
        m = 1 << v
        for b in range(dim.n):
            m |= 1 << (v ^ (1 << b))
        masks.append(m)
    return masks


def _components_of(n: int, vertices: frozenset[int] | set[int]) -> list[list[int]]:
    """Connected components of the induced subgraph, each sorted, ordered
    by smallest member."""
    remaining = set(vertices)
    components = []
    while remaining:
        start = min(remaining)
        comp = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for b in range(n):
                    x = w ^ (1 << b)
                    if x in remaining and x not in comp:
                        comp.add(x)
                        nxt.append(x)
            frontier = nxt
        remaining -= comp
        components.append(sorted(comp))
    return components


def induced_components(members: VertexSet) -> list[list[int]]:
    return _components_of(members.dim.n, set(members))


def is_connected_subset(members: VertexSet) -> bool:
    return len(induced_components(members)) == 1


def is_dominating(members: VertexSet) -> bool:
    """Direct neighborhood check over all 2^n vertices."""
    dim = members.dim
    closed = closed_neighborhood_masks(dim)
    covered = 0
    for v in members:
        covered |= closed[v]
    return covered == (1 << dim.num_vertices) - 1


@dataclass(frozen=True)
class DominatingSetCertificate:
    """A dominating set whose claimed properties are re-checked on build."""

    vertex_set: VertexSet
    connected: bool
    size: int
    method: str

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown construction method {self.method!r}")
        if self.size != len(self.vertex_set):
            raise ValueError("certificate size disagrees with the vertex set")
        if not is_dominating(self.vertex_set):
            raise ValueError(f"{self.method} set does not dominate the cube")
        if self.connected != is_connected_subset(self.vertex_set):
            raise ValueError("certificate connectivity flag is wrong")

    @property
    def dim(self) -> Dimension:
        return self.vertex_set.dim


def _certify(members: VertexSet, method: str) -> DominatingSetCertificate:
    return DominatingSetCertificate(
        vertex_set=members,
        connected=is_connected_subset(members),
        size=len(members),
        method=method,
    )


def sphere_covering_floor(dim: Dimension) -> int:
    """ceil(2^n / (n+1)): each vertex covers itself and n neighbors."""
    return -(dim.num_vertices // -(dim.n + 1))


def greedy_dominating_set(
    dim: Dimension, *, budget: int = DEFAULT_BUDGET
) -> DominatingSetCertificate:
    """Max-coverage greedy; deterministic via smallest-vertex tie-breaks."""
    check_budget("greedy domination sweep", dim.num_vertices, budget)
    closed = closed_neighborhood_masks(dim)
    full = (1 << dim.num_vertices) - 1
    covered = 0
    chosen: list[int] = []
    while covered != full:
        best_v = -1
        best_gain = -1
        for v in range(dim.num_vertices):
            gain = (closed[v] & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_v = v
        chosen.append(best_v)
        covered |= closed[best_v]
    return _certify(VertexSet.of(dim, chosen), "greedy")


def hamming_code_dominating_set(dim: Dimension) -> DominatingSetCertificate:
    """The length-n perfect code as a dominating set, for n = 2^m - 1.

    A word belongs to the code iff the XOR of (i+1) over its set bit
    positions i vanishes. A non-codeword has nonzero syndrome s and is at
    distance 1 from exactly one codeword (flip position s-1), so the
    distance-1 balls tile the cube: 2^n/(n+1) words, perfect covering.
    """
    n = dim.n
    if (n + 1) & n:
        raise ValueError(f"perfect code needs n = 2^m - 1, got n={n}")
    codewords = []
    for v in range(dim.num_vertices):
        syndrome = 0
        bits = v
        while bits:
            low = bits & -bits
            syndrome ^= low.bit_length()
            bits ^= low
        if syndrome == 0:
            codewords.append(v)
    return _certify(VertexSet.of(dim, codewords), "hamming_code")


def steinerize(members: VertexSet) -> DominatingSetCertificate:
    """Connect a dominating set by joining closest component pairs.

    Each round adds the interior of one deterministic geodesic between the
    two components at minimum Hamming distance (ties: smallest vertex
    pair), merging them; a superset of a dominating set still dominates.
    A dominating set's closest components are within distance 3, so each
    merge adds at most min(2, n-1) vertices.
    """
    if not is_dominating(members):
        raise ValueError("steinerize requires a dominating input set")
    dim = members.dim
    current = set(members)
    while True:
        comps = _components_of(dim.n, current)
        if len(comps) == 1:
            break
        best = None  # (distance, low endpoint, high endpoint)
        for ia, ib in combinations(range(len(comps)), 2):
            for u in comps[ia]:
                for v in comps[ib]:
                    d = (u ^ v).bit_count()
                    key = (d, min(u, v), max(u, v))
                    if best is None or key < best:
                        best = key
        _, a, b = best
        for e in shortest_path(dim, a, b):
            current.update(e.endpoints())
    return _certify(VertexSet.of(dim, current), "steinerized")


def exact_domination_number(dim: Dimension, *, budget: int = DEFAULT_BUDGET) -> int:
    """Exact domination number by increasing-size search (tiny n only)."""
    closed = closed_neighborhood_masks(dim)
    full = (1 << dim.num_vertices) - 1
    examined = 0
    for size in range(1, dim.num_vertices + 1):
        for cand in combinations(range(dim.num_vertices), size):
            examined += 1
            check_budget("domination search", examined, budget)
            covered = 0
            for v in cand:
                covered |= closed[v]
            if covered == full:
                return size
    raise AssertionError("the full vertex set always dominates")


def exact_connected_dominating_set(
    dim: Dimension, *, budget: int = DEFAULT_BUDGET
) -> DominatingSetCertificate:
    """Lexicographically first minimum connected dominating set, n <= 4."""
    n = dim.n
    if n > 4:
        raise ValueError("exact witness search limited to n <= 4")
    closed = closed_neighborhood_masks(dim)
    full = (1 << dim.num_vertices) - 1
    examined = 0
    for size in range(1, dim.num_vertices + 1):
        for cand in combinations(range(dim.num_vertices), size):
            examined += 1
            check_budget("connected domination search", examined, budget)
            covered = 0
            for v in cand:
                covered |= closed[v]
            if covered != full:
                continue
            if len(_components_of(n, set(cand))) == 1:
                return _certify(VertexSet.of(dim, cand), "exact")
    raise AssertionError("the full vertex set is connected and dominating")


def _connected_domination_branch_and_bound(
    dim: Dimension, *, budget: int = DEFAULT_BUDGET
) -> int:
    """Branch-and-bound minimum connected dominating set size.

    By vertex-transitivity some minimum certificate contains vertex 0.
    Each node branches on which closed-neighborhood member covers the
    smallest uncovered vertex, with tried candidates excluded down the
    remaining branches.
    """
    n = dim.n
    closed = closed_neighborhood_masks(dim)
    full = (1 << dim.num_vertices) - 1
    ball = n + 1
    nodes = 0

    def search(chosen: list[int], covered: int, excluded: int, limit: int) -> bool:
        # excluded vertices were exhausted in an earlier sibling branch, so
        # no cover using them remains to be found down this subtree
        nonlocal nodes
        nodes += 1
        check_budget("connected domination search", nodes, budget)
        if covered == full:
            return len(_components_of(n, set(chosen))) == 1
        uncovered = full & ~covered
        needed = -(uncovered.bit_count() // -ball)
        slack = limit - len(chosen)
        if needed > slack:
            return False
        # each added vertex can merge at most n of the current components
        comps = len(_components_of(n, set(chosen)))
        if comps - 1 > slack * (n - 1):
            return False
        u = (uncovered & -uncovered).bit_length() - 1
        for v in sorted({u} | {u ^ (1 << b) for b in range(n)}):
            if (excluded >> v) & 1:
                continue
            chosen.append(v)
            if search(chosen, covered | closed[v], excluded, limit):
                return True
            chosen.pop()
            excluded |= 1 << v
        return False

    for limit in range(sphere_covering_floor(dim), dim.num_vertices + 1):
        if search([0], closed[0], 0, limit):
            return limit
    raise AssertionError("unreachable; the full cube dominates itself")


def exact_connected_domination_number(
    dim: Dimension, *, budget: int = DEFAULT_BUDGET
) -> int:
    """Exact minimum size of a connected dominating set for n <= 5.

    n <= 4 enumerates candidate sets by increasing size; n = 5 uses the
    branch and bound.
    """
    if dim.n > 5:
        raise ValueError("exact connected domination limited to n <= 5")
    if dim.n <= 4:
        return exact_connected_dominating_set(dim, budget=budget).size
    return _connected_domination_branch_and_bound(dim, budget=budget)


def certificate_to_text(cert: DominatingSetCertificate) -> str:
    """Serialized block: method, size, connected flag, vertex strings."""
    lines = [
        f"method: {cert.method}",
        f"size: {cert.size}",
        f"connected: {str(cert.connected).lower()}",
        "vertices: " + " ".join(cert.vertex_set.to_strings()),
    ]
    return "\n".join(lines)
