"""Simple graphs, their independence and clique complexes, and graph-side predicates."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .complex import SimplicialComplex, bits, default_labels, maximal_sets
from .errors import MalformedInputError, RecipeError
from .homology import QQ, FieldSpec
from .invariants import depth


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; edges are index pairs ``(i, j)`` with ``i < j``."""

    vertices: tuple[str, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        vertices = tuple(self.vertices)
        if len(set(vertices)) != len(vertices):
            raise MalformedInputError("duplicate vertex labels")
        n = len(vertices)
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise MalformedInputError(f"loop at vertex {vertices[i] if 0 <= i < n else i!r}")
            if not (0 <= i < n and 0 <= j < n):
                raise MalformedInputError(f"edge {e!r} leaves the vertex range 0..{n - 1}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset(norm))
        adj = [0] * n
        for i, j in norm:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        object.__setattr__(self, "_adj", tuple(adj))

    @classmethod
    def from_edges(cls, vertices: Sequence[str] | int, edges: Iterable[tuple]) -> "Graph":
        """Edges may be given as label pairs or as index pairs."""
        labels = default_labels(vertices) if isinstance(vertices, int) else tuple(vertices)
        index = {v: i for i, v in enumerate(labels)}
        out = []
        for a, b in edges:
            if isinstance(a, str) or isinstance(b, str):
                try:
                    a, b = index[a], index[b]
                except KeyError as exc:
                    raise MalformedInputError(f"unknown vertex label {exc.args[0]!r}") from None
            out.append((a, b))
        return cls(labels, frozenset(out))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood bitmask of each vertex."""
        return self._adj  # type: ignore[attr-defined]

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        es = " ".join(f"{self.vertices[i]}-{self.vertices[j]}" for i, j in self.sorted_edges())
        return f"Graph([{' '.join(self.vertices)}]: {es})"


def complement(g: Graph) -> Graph:
    n = g.n
    return Graph(g.vertices, frozenset((i, j) for i in range(n) for j in range(i + 1, n) if not g.has_edge(i, j)))


def _maximal_cliques(adj: Sequence[int]) -> list[int]:
    """Bron-Kerbosch with Tomita pivoting over bitmask adjacency."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                out.append(r)
            return
        px = p | x
        pivot = max(bits(px), key=lambda u: (p & adj[u]).bit_count())
        for v in bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << len(adj)) - 1, 0)
    return out


def maximal_independent_sets(g: Graph) -> tuple[int, ...]:
    full = (1 << g.n) - 1
    co_adj = [full & ~a & ~(1 << v) for v, a in enumerate(g.adjacency)]
    return maximal_sets(_maximal_cliques(co_adj))


def independence_complex(g: Graph) -> SimplicialComplex:
    return SimplicialComplex(g.vertices, maximal_independent_sets(g))


def clique_complex(g: Graph) -> SimplicialComplex:
    return SimplicialComplex(g.vertices, maximal_sets(_maximal_cliques(g.adjacency)))


def hypergraph_independence_complex(vertices: Sequence[str] | int, edges: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Independence complex of a set system, by brute force over vertex subsets."""
    labels = default_labels(vertices) if isinstance(vertices, int) else tuple(vertices)
    index = {v: i for i, v in enumerate(labels)}
    masks = []
    for e in edges:
        m = 0
        for lab in e:
            m |= 1 << index[lab]
        masks.append(m)
    independent = [s for s in range(1 << len(labels)) if not any(e & ~s == 0 for e in masks)]
    return SimplicialComplex(labels, maximal_sets(independent))


def _is_clique(adj: Sequence[int], mask: int) -> bool:
    for v in bits(mask):
        if (mask & ~(1 << v)) & ~adj[v]:
            return False
    return True


def max_cardinality_search(g: Graph) -> list[int]:
    """Visit order of maximum cardinality search, ties broken by smallest index."""
    n = g.n
    weight = [0] * n
    visited = 0
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not visited >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        visited |= 1 << v
        for u in bits(g.adjacency[v] & ~visited):
            weight[u] += 1
    return order


def is_chordal(g: Graph) -> bool:
    """Reverse MCS order must be a perfect elimination ordering."""
    adj = g.adjacency
    earlier = 0
    for v in max_cardinality_search(g):
        if not _is_clique(adj, adj[v] & earlier):
            return False
        earlier |= 1 << v
    return True


def has_induced_long_cycle(g: Graph) -> bool:
    """Brute-force search for an induced cycle on at least four vertices."""
    adj = g.adjacency
    for size in range(4, g.n + 1):
        for combo in combinations(range(g.n), size):
            s = 0
            for v in combo:
                s |= 1 << v
            if all((adj[v] & s).bit_count() == 2 for v in combo):
                # 2-regular induced subgraph; connected means a single cycle
                seen = 1 << combo[0]
                frontier = seen
                while frontier:
                    nxt = 0
                    for v in bits(frontier):
                        nxt |= adj[v] & s
                    frontier = nxt & ~seen
                    seen |= nxt
                if seen == s:
                    return True
    return False


def path_graph(n: int) -> Graph:
    if n < 1:
        raise MalformedInputError("path graphs need n >= 1")
    return Graph(default_labels(n), frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise MalformedInputError("cycle graphs need n >= 3")
    return Graph(default_labels(n), frozenset([(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]))


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise MalformedInputError("complete graphs need n >= 0")
    return Graph(default_labels(n), frozenset(combinations(range(n), 2)))


def empty_graph(n: int) -> Graph:
    return Graph(default_labels(n), frozenset())


@dataclass(frozen=True)
class DTreeRecipe:
    """Gluing steps ``(d_i, attachment)``.

    The first step creates ``K_{d_1}`` on vertices ``0..d_1-1``.  Every later
    step adds one new vertex joined to ``attachment``, which must be a clique
    of size ``d_i - 1`` among the vertices built so far.
    """

    steps: tuple[tuple[int, frozenset[int]], ...]

    def __post_init__(self):
        steps = tuple((int(d), frozenset(a)) for d, a in self.steps)
        object.__setattr__(self, "steps", steps)
        if not steps:
            raise RecipeError("a recipe needs at least one step")
        prev = None
        for k, (d, att) in enumerate(steps):
            if d < 1:
                raise RecipeError(f"step {k}: clique size must be positive, got {d}")
            if prev is not None and d > prev:
                raise RecipeError(f"step {k}: clique sizes must be non-increasing ({d} > {prev})")
            if k == 0 and att:
                raise RecipeError("the first step takes no attachment")
            if k > 0 and len(att) != d - 1:
                raise RecipeError(f"step {k}: attachment must have {d - 1} vertices, got {len(att)}")
            prev = d

    @property
    def n(self) -> int:
        return self.steps[0][0] + len(self.steps) - 1

    @classmethod
    def parse(cls, text: str) -> "DTreeRecipe":
        """``"3;3@0,1;2@2"``: steps separated by ``;``, attachments after ``@``."""
        steps = []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            d, _, att = chunk.partition("@")
            try:
                members = frozenset(int(a) for a in att.split(",") if a.strip())
                steps.append((int(d), members))
            except ValueError:
                raise RecipeError(f"cannot parse recipe step {chunk!r}") from None
        return cls(tuple(steps))

    def __str__(self) -> str:
        parts = []
        for d, att in self.steps:
            parts.append(str(d) if not att else f"{d}@{','.join(map(str, sorted(att)))}")
        return ";".join(parts)


def dtree(recipe: DTreeRecipe) -> Graph:
    d1 = recipe.steps[0][0]
    edges = set(combinations(range(d1), 2))
    adj = {v: set(range(d1)) - {v} for v in range(d1)}
    nxt = d1
    for k, (d, att) in enumerate(recipe.steps[1:], start=1):
        for a in att:
            if a not in adj:
                raise RecipeError(f"step {k}: attachment vertex {a} does not exist yet")
        for a, b in combinations(att, 2):
            if b not in adj[a]:
                raise RecipeError(f"step {k}: attachment {sorted(att)} is not a clique")
        adj[nxt] = set(att)
        for a in att:
            adj[a].add(nxt)
            edges.add((a, nxt))
        nxt += 1
    return Graph(default_labels(nxt), frozenset(edges))


def random_dtree_recipe(seed: int, steps: int, dmax: int) -> DTreeRecipe:
    """Pseudorandom valid recipe with ``steps`` gluing steps after the first clique."""
    rng = random.Random(seed)
    d1 = rng.randint(1, dmax)
    out = [(d1, frozenset())]
    adj = {v: set(range(d1)) - {v} for v in range(d1)}
    prev = d1
    for _ in range(steps):
        d = rng.randint(1, prev)
        cliques = [
            c for c in combinations(sorted(adj), d - 1)
            if all(b in adj[a] for a, b in combinations(c, 2))
        ]
        att = frozenset(rng.choice(cliques))
        v = len(adj)
        adj[v] = set(att)
        for a in att:
            adj[a].add(v)
        out.append((d, att))
        prev = d
    return DTreeRecipe(tuple(out))


def is_dtree(g: Graph) -> bool:
    """Decide whether ``g`` can be produced by some recipe.

    Undoes gluing steps: repeatedly delete a vertex whose remaining
    neighbourhood is a clique, with clique sizes non-decreasing in removal
    order, until a single clique of size at least the last removed step is
    left.  Exponential in the worst case; meant for small graphs.
    """
    adj = g.adjacency
    if g.n == 0:
        return False

    @lru_cache(maxsize=None)
    def reducible(rem: int, lb: int) -> bool:
        if _is_clique(adj, rem) and rem.bit_count() >= lb:
            return True
        for v in bits(rem):
            nb = adj[v] & rem
            d = nb.bit_count() + 1
            if d >= lb and _is_clique(adj, nb) and reducible(rem & ~(1 << v), d):
                return True
        return False

    return reducible((1 << g.n) - 1, 1)


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.n)), default=0)


def free_vertices(cx: SimplicialComplex) -> int:
    """Bitmask of vertices lying in exactly one facet."""
    once = twice = 0
    for f in cx.facets:
        twice |= once & f
        once |= f
    return once & ~twice


def minimum_facets(cx: SimplicialComplex) -> tuple[int, ...]:
    if cx.is_void:
        return ()
    least = min(f.bit_count() for f in cx.facets)
    return tuple(f for f in cx.facets if f.bit_count() == least)


def has_free_vertex_in_minimum_facet(cx: SimplicialComplex) -> bool:
    free = free_vertices(cx)
    return any(f & free for f in minimum_facets(cx))


def bight_equals_maxdeg(g: Graph) -> bool:
    cx = independence_complex(g)
    return g.n - (int(cx.indim) + 1) == max_degree(g)


def pdim_equals_maxdeg(g: Graph, field: FieldSpec = QQ) -> bool:
    cx = independence_complex(g)
    return g.n - depth(cx, field) == max_degree(g)
