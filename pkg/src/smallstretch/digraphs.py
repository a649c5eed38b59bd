"""Directed multigraphs: exact path counts, girth, layered path certificates,
and a family of shift graphs on residue pairs.

Path counting.  The number of directed walks of length L out of a vertex
v equals the v-th row sum of A^L, A the multiplicity matrix.  Counts are
computed here by exact integer vector iteration over the edge list, so
they cross-check the matrix-power route rather than reusing it.

Layered certificate.  Suppose the vertices split into layers V_1..V_k,
k >= 5, such that (1) every out-degree is at most D, (2) from V_i all
edges go to V_{i+1} (cyclically) except possibly from V_1 and V_3,
(3) V_1 feeds V_2 and V_3 only, (4) V_3 feeds V_3 and V_4 only, and a
second consecutive stay in V_3 is impossible, and (5) every vertex in
V_4..V_k has exactly one outgoing edge.  Then the number of walks of
length k - 1 out of any vertex is at most 4 * D^4, hence the spectral
radius obeys rho(A)^(k-1) <= 4 * D^4.

Shift graphs.  For coprime n, k >= 3 put one vertex u_{i,j} for each
residue pair (i mod n, j mod k), a generic edge u_{i,j} -> u_{i+c,j+c}
with the shift c chosen by the CRT recipe in the number-theory module,
and one extra edge into u_{c,c} from each of the four neighbors u_{0,1},
u_{0,-1}, u_{1,0}, u_{-1,0} of the origin.  The generic edges form a
single cycle through all n*k vertices, every directed cycle is either
that long cycle or passes through u_{c,c}, and the shortest cycle is
longer than n*k/7.  Walks of length ceil(n*k/7) are then too short to
revisit a branching vertex, which caps their number at 2^5 and caps the
weighted count, with weight D on edges leaving the five distinguished
vertices, at 326 * D^5.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from random import Random
from typing import Iterable

from .intmatrix import IntMatrix, SpectralBracket, row_sum_bracket
from .numtheory import coprime_near_half, crt_shift


@dataclass(frozen=True)
class DiGraph:
    """Immutable directed multigraph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]  # (src, dst, multiplicity), sorted

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError("graph needs at least one vertex")
        prev = None
        for u, v, m in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if m < 1:
                raise ValueError("edge multiplicity must be at least 1")
            if prev is not None and (u, v) <= prev:
                raise ValueError("edges must be sorted and unique by (src, dst)")
            prev = (u, v)

    @classmethod
    def from_edges(cls, vertex_count: int,
                   pairs: Iterable[tuple[int, int]]) -> "DiGraph":
        """Build from (src, dst) pairs; repeats accumulate multiplicity."""
        mult: dict[tuple[int, int], int] = {}
        for u, v in pairs:
            mult[(u, v)] = mult.get((u, v), 0) + 1
        edges = tuple((u, v, m) for (u, v), m in sorted(mult.items()))
        return cls(vertex_count, edges)

    def successors(self) -> list[list[tuple[int, int]]]:
        """Adjacency as lists of (target, multiplicity) per vertex."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for u, v, m in self.edges:
            adj[u].append((v, m))
        return adj

    def out_degree(self, v: int) -> int:
        """Outgoing edge count at v, multiplicities included."""
        return sum(m for u, _, m in self.edges if u == v)

    @property
    def edge_count(self) -> int:
        return sum(m for _, _, m in self.edges)


def from_matrix(a: IntMatrix) -> DiGraph:
    edges = []
    for i, row in enumerate(a.rows):
        for j, x in enumerate(row):
            if x:
                edges.append((i, j, x))
    return DiGraph(a.dim, tuple(edges))


def to_matrix(g: DiGraph) -> IntMatrix:
    n = g.vertex_count
    rows = [[0] * n for _ in range(n)]
    for u, v, m in g.edges:
        rows[u][v] = m
    return IntMatrix.from_rows(rows)


def path_counts(g: DiGraph, length: int) -> list[int]:
    """Exact number of directed walks of the given length out of each vertex."""
    if length < 0:
        raise ValueError("path length must be non-negative")
    adj = g.successors()
    counts = [1] * g.vertex_count
    for _ in range(length):
        counts = [sum(m * counts[v] for v, m in adj[u])
                  for u in range(g.vertex_count)]
    return counts


def count_paths(g: DiGraph, v: int, length: int) -> int:
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"vertex {v} out of range")
    return path_counts(g, length)[v]


def max_paths(g: DiGraph, length: int) -> tuple[int, int]:
    """(vertex, count) maximizing the walk count; lowest vertex wins ties."""
    counts = path_counts(g, length)
    best = max(counts)
    return counts.index(best), best


def girth_directed(g: DiGraph) -> int | float:
    """Length of the shortest directed cycle, via BFS from every vertex.

    Returns math.inf for acyclic graphs.  A self-loop gives girth 1.
    Multiplicities play no role.
    """
    n = g.vertex_count
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v, _ in g.edges:
        adj[u].append(v)
    best: int | float = math.inf
    for s in range(n):
        if best == 1:
            break
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if du + 1 >= best:
                continue
            for w in adj[u]:
                if w == s:
                    best = du + 1
                    queue.clear()
                    break
                if dist[w] < 0:
                    dist[w] = du + 1
                    queue.append(w)
    return best


# --- layered path certificate ------------------------------------------------

@dataclass(frozen=True)
class LayeredPartition:
    """Assignment of each vertex to a layer 1..layer_count, with degree cap D."""

    assignment: tuple[int, ...]
    layer_count: int
    max_out_degree: int

    def __post_init__(self) -> None:
        if self.layer_count < 5:
            raise ValueError("layered certificate needs at least 5 layers")
        if self.max_out_degree < 1:
            raise ValueError("degree cap must be at least 1")
        for layer in self.assignment:
            if not 1 <= layer <= self.layer_count:
                raise ValueError(f"layer {layer} outside 1..{self.layer_count}")

    def layer_members(self, layer: int) -> tuple[int, ...]:
        return tuple(v for v, l in enumerate(self.assignment) if l == layer)


@dataclass(frozen=True)
class LayeredReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_layered_partition(g: DiGraph, part: LayeredPartition) -> LayeredReport:
    """Verify the five layered hypotheses literally, one violation per breach.

    Condition 5 requires a single outgoing edge counting multiplicity:
    the walk continuation must be unique there, otherwise the 4 * D^4
    count can be beaten by multiple parallel edges.
    """
    if len(part.assignment) != g.vertex_count:
        raise ValueError("partition does not cover the vertex set")
    k = part.layer_count
    D = part.max_out_degree
    lay = part.assignment
    adj = g.successors()
    bad: list[str] = []
    for v in range(g.vertex_count):
        out_mult = sum(m for _, m in adj[v])
        targets = {w for w, _ in adj[v]}
        i = lay[v]
        if out_mult > D:
            bad.append(f"condition 1: vertex {v} has out-degree {out_mult} > {D}")
        if i == 1:
            if not all(lay[w] in (2, 3) for w in targets):
                bad.append(f"condition 3: vertex {v} in layer 1 leaves layers 2/3")
        elif i == 3:
            if not all(lay[w] in (3, 4) for w in targets):
                bad.append(f"condition 4: vertex {v} in layer 3 leaves layers 3/4")
            for w in targets:
                if lay[w] == 3 and not all(lay[x] == 4 for x, _ in adj[w]):
                    bad.append(
                        f"condition 4: second stay in layer 3 at vertex {w} "
                        "does not force layer 4")
        else:
            nxt = i % k + 1
            if not all(lay[w] == nxt for w in targets):
                bad.append(f"condition 2: vertex {v} in layer {i} leaves layer {nxt}")
        if i > 3:
            if out_mult != 1:
                bad.append(
                    f"condition 5: vertex {v} in layer {i} has {out_mult} outgoing "
                    "edges instead of exactly one")
    return LayeredReport(tuple(bad))


@dataclass(frozen=True)
class LayeredBoundReport:
    max_count: int
    cap: int
    bound_holds: bool
    length: int
    bracket: SpectralBracket
    spectral_consistent: bool


def layered_path_bound(g: DiGraph, part: LayeredPartition) -> LayeredBoundReport:
    """Exhaustive walk counts of length layer_count - 1 against the 4*D^4 cap.

    The row-sum bracket of A at power layer_count - 1 certifies
    rho(A)^(layer_count - 1) <= max_count independently of the walk
    enumeration; both routes must agree up to root rounding.
    """
    if len(part.assignment) != g.vertex_count:
        raise ValueError("partition does not cover the vertex set")
    length = part.layer_count - 1
    counts = path_counts(g, length)
    max_count = max(counts)
    cap = 4 * part.max_out_degree ** 4
    bracket = row_sum_bracket(to_matrix(g), length)
    spectral_ok = bracket.upper ** length <= max_count * (1.0 + 1e-9) + 1e-9
    return LayeredBoundReport(
        max_count=max_count,
        cap=cap,
        bound_holds=max_count <= cap,
        length=length,
        bracket=bracket,
        spectral_consistent=spectral_ok,
    )


def random_layered_graph(layer_count: int, max_out_degree: int,
                         seed: int) -> tuple[DiGraph, LayeredPartition]:
    """Seeded random graph satisfying the five layered hypotheses.

    Layer sizes are drawn from 1..2D.  Layer 3 is split into a first and
    a second stage so that a walk can linger in layer 3 exactly once;
    second-stage vertices feed layer 4 only.  Out-degrees in layers 1..3
    are biased toward the cap D so the 4*D^4 bound gets exercised, and
    repeated target choices accumulate edge multiplicity.  Identical
    (layer_count, max_out_degree, seed) give the identical graph.
    """
    if layer_count < 5:
        raise ValueError("layered certificate needs at least 5 layers")
    if max_out_degree < 1:
        raise ValueError("degree cap must be at least 1")
    rng = Random(seed)
    D = max_out_degree
    sizes = [rng.randint(1, 2 * D) for _ in range(layer_count)]
    layers: list[list[int]] = []
    v = 0
    for s in sizes:
        layers.append(list(range(v, v + s)))
        v += s
    total = v

    pairs: list[tuple[int, int]] = []

    def fan_out(u: int, pool: list[int]) -> None:
        width = D if rng.random() < 0.5 else rng.randint(1, D)
        for _ in range(width):
            pairs.append((u, rng.choice(pool)))

    second_stage = [u for u in layers[2] if rng.random() < 0.5]
    for u in layers[0]:
        fan_out(u, layers[1] + layers[2])
    for u in layers[1]:
        fan_out(u, layers[2])
    for u in layers[2]:
        if u in second_stage:
            fan_out(u, layers[3])
        else:
            fan_out(u, second_stage + layers[3])
    for i in range(4, layer_count + 1):
        nxt = layers[i % layer_count]  # layer i + 1, cyclically
        for u in layers[i - 1]:
            pairs.append((u, rng.choice(nxt)))

    assignment = [0] * total
    for i, members in enumerate(layers, start=1):
        for u in members:
            assignment[u] = i
    graph = DiGraph.from_edges(total, pairs)
    part = LayeredPartition(tuple(assignment), layer_count, D)
    return graph, part


# --- shift graphs on residue pairs -------------------------------------------

def path_type_count() -> int:
    """Number of ways a short walk can thread up to five distinguished
    vertices in some order: sum over t of C(5, t) * t! = 326."""
    return sum(math.comb(5, t) * math.factorial(t) for t in range(6))


def weighted_path_cap(max_out_degree: int) -> int:
    """Cap 326 * D^5 on D-weighted short walk counts in a shift graph."""
    if max_out_degree < 1:
        raise ValueError("degree cap must be at least 1")
    return path_type_count() * max_out_degree ** 5


@dataclass(frozen=True)
class ShiftGraph:
    """Shift graph on residue pairs with its CRT shift and special vertices."""

    n: int
    k: int
    shift: int
    graph: DiGraph

    def vertex(self, i: int, j: int) -> int:
        return (i % self.n) * self.k + (j % self.k)

    def pair(self, v: int) -> tuple[int, int]:
        return divmod(v, self.k)

    @property
    def origin(self) -> int:
        return self.vertex(0, 0)

    @property
    def branch_vertices(self) -> tuple[int, int, int, int]:
        """The four out-degree-2 vertices: u_{0,1}, u_{0,-1}, u_{1,0}, u_{-1,0}."""
        return (self.vertex(0, 1), self.vertex(0, -1),
                self.vertex(1, 0), self.vertex(-1, 0))

    @property
    def special_vertices(self) -> tuple[int, int, int, int, int]:
        """Origin plus the four branch vertices."""
        return (self.origin,) + self.branch_vertices

    @property
    def exceptional_target(self) -> int:
        """Common endpoint u_{c,c} of the four exceptional edges."""
        return self.vertex(self.shift, self.shift)


def build_shift_graph(n: int, k: int) -> ShiftGraph:
    """Materialize the shift graph for a coprime pair n, k >= 3.

    Every vertex u_{i,j} has the generic edge to u_{i+c,j+c}; the four
    branch vertices carry one extra edge each into u_{c,c}.  The shift c
    is coprime to n*k, so the generic edges form one cycle of length n*k.
    """
    if n < 3 or k < 3:
        raise ValueError("both moduli must be at least 3")
    if math.gcd(n, k) != 1:
        raise ValueError("moduli must be coprime")
    c = crt_shift(n, k)
    pairs = []
    for i in range(n):
        for j in range(k):
            pairs.append((i * k + j, ((i + c) % n) * k + (j + c) % k))
    target = (c % n) * k + c % k
    for (i, j) in ((0, 1), (0, k - 1), (1, 0), (n - 1, 0)):
        pairs.append((i * k + j, target))
    graph = DiGraph.from_edges(n * k, pairs)
    return ShiftGraph(n, k, c, graph)


def validate_shift_graph(sg: ShiftGraph) -> tuple[str, ...]:
    """Structural audit: degree profile, exceptional targets, generic cycle."""
    bad: list[str] = []
    n, k, c = sg.n, sg.k, sg.shift
    if math.gcd(c, n * k) != 1:
        bad.append(f"shift {c} shares a factor with {n * k}")
    adj = sg.graph.successors()
    branch = set(sg.branch_vertices)
    for v in range(n * k):
        deg = sum(m for _, m in adj[v])
        want = 2 if v in branch else 1
        if deg != want:
            bad.append(f"vertex {v} has out-degree {deg}, expected {want}")
    target = sg.exceptional_target
    for v in branch:
        i, j = sg.pair(v)
        generic = sg.vertex(i + c, j + c)
        targets = sorted(w for w, _ in adj[v])
        if targets != sorted({generic, target}):
            bad.append(f"branch vertex {v} edges {targets} are not generic+exceptional")
    # The generic edges alone must form a single cycle through all vertices.
    seen = 0
    i, j = 0, 0
    for _ in range(n * k):
        i, j = (i + c) % n, (j + c) % k
        seen += 1
        if (i, j) == (0, 0):
            break
    if seen != n * k:
        bad.append(f"generic cycle closes after {seen} steps, expected {n * k}")
    return tuple(bad)


def shift_graph_girth(n: int, k: int) -> int:
    """Girth of the shift graph without materializing it.

    Any cycle avoiding the exceptional edges is the full generic cycle of
    length n*k; any other cycle passes through u_{c,c}, so one BFS from
    u_{c,c} over the implicit successor map settles the girth.  Works for
    n*k far beyond what the materialized BFS handles.
    """
    if n < 3 or k < 3:
        raise ValueError("both moduli must be at least 3")
    if math.gcd(n, k) != 1:
        raise ValueError("moduli must be coprime")
    c = crt_shift(n, k)
    target = (c % n, c % k)
    branch = {(0, 1), (0, k - 1), (1, 0), (n - 1, 0)}
    dist = {target: 0}
    queue = deque([target])
    best = n * k
    while queue:
        u = queue.popleft()
        du = dist[u]
        if du + 1 >= best:
            continue
        succ = [((u[0] + c) % n, (u[1] + c) % k)]
        if u in branch:
            succ.append(target)
        for w in succ:
            if w == target:
                best = min(best, du + 1)
            elif w not in dist:
                dist[w] = du + 1
                queue.append(w)
    return best


def predicted_girth(n: int, k: int) -> int:
    """Candidate shortest cycle length from the congruence case analysis.

    A cycle through one exceptional edge out of u_{0,+-1} has length a
    multiple of n congruent to +-(near-half residue of k) mod k, and
    symmetrically for u_{+-1,0}; the generic cycle contributes n*k.
    """
    nb = coprime_near_half(n)
    kb = coprime_near_half(k)
    return min(n * k,
               n * (kb % k), n * ((-kb) % k),
               k * (nb % n), k * ((-nb) % n))


@dataclass(frozen=True)
class GirthCheck:
    n: int
    k: int
    girth: int
    threshold: float
    holds: bool
    predicted: int


def check_girth_threshold(n: int, k: int, method: str = "bfs") -> GirthCheck:
    """Girth of the shift graph against the n*k/7 threshold.

    method "bfs" runs the all-vertex BFS on the materialized graph;
    "implicit" uses the single-source scan that never builds the graph.
    The predicted value from the congruence analysis is reported for
    comparison but not asserted.
    """
    if method == "bfs":
        sg = build_shift_graph(n, k)
        girth = girth_directed(sg.graph)
        assert isinstance(girth, int)
    elif method == "implicit":
        girth = shift_graph_girth(n, k)
    else:
        raise ValueError(f"unknown method {method!r}")
    threshold = n * k / 7.0
    return GirthCheck(n, k, girth, threshold, girth > threshold, predicted_girth(n, k))


@dataclass(frozen=True)
class PathCountCheck:
    n: int
    k: int
    max_out_degree: int
    length: int
    unweighted_max: int
    unweighted_cap: int
    weighted_max: int
    weighted_cap: int
    holds: bool


def check_path_counts(n: int, k: int, max_out_degree: int = 2) -> PathCountCheck:
    """Walk counts of length ceil(n*k/7) against the 2^5 and 326*D^5 caps.

    The weighted count gives every edge leaving one of the five special
    vertices weight D, modeling up to D parallel continuations there; all
    other edges weigh 1.  Counts are exact integers for integer D.
    """
    if max_out_degree < 1:
        raise ValueError("degree cap must be at least 1")
    sg = build_shift_graph(n, k)
    length = -(-n * k // 7)
    adj = sg.graph.successors()
    special = set(sg.special_vertices)
    D = max_out_degree

    plain = [1] * sg.graph.vertex_count
    weighted = [1] * sg.graph.vertex_count
    for _ in range(length):
        plain = [sum(m * plain[w] for w, m in adj[u])
                 for u in range(sg.graph.vertex_count)]
        weighted = [(D if u in special else 1) * sum(m * weighted[w] for w, m in adj[u])
                    for u in range(sg.graph.vertex_count)]
    unweighted_max = max(plain)
    weighted_max = max(weighted)
    w_cap = weighted_path_cap(D)
    return PathCountCheck(
        n=n, k=k, max_out_degree=D, length=length,
        unweighted_max=unweighted_max, unweighted_cap=2 ** 5,
        weighted_max=weighted_max, weighted_cap=w_cap,
        holds=unweighted_max <= 2 ** 5 and weighted_max <= w_cap,
    )


def shift_graph_dot(sg: ShiftGraph) -> str:
    """GraphViz rendering with the five special vertices double-circled."""
    lines = [f"digraph shift_{sg.n}_{sg.k} {{"]
    special = set(sg.special_vertices)
    for v in range(sg.graph.vertex_count):
        i, j = sg.pair(v)
        shape = " [shape=doublecircle]" if v in special else ""
        lines.append(f'  u_{i}_{j}{shape};')
    for u, v, m in sg.graph.edges:
        ui, uj = sg.pair(u)
        vi, vj = sg.pair(v)
        for _ in range(m):
            lines.append(f"  u_{ui}_{uj} -> u_{vi}_{vj};")
    lines.append("}")
    return "\n".join(lines) + "\n"
