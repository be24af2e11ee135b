"""Vertex-deletion modulators and modular decomposition.

Two modulator kinds are supported: deleting the set must leave either a
cluster graph (disjoint union of cliques) or a disjoint union of paths.
Both finders are bounded search trees; the budget-free entry points grow the
budget from zero, so the first hit has minimum size.

The modular decomposition is the classic recursive one: split a disconnected
graph into components (union node), a co-disconnected graph into
co-components (join node), and otherwise compute the maximal proper modules,
which partition the vertex set and leave a prime quotient pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import MespError
from .graph import Graph, _bits

CLUSTER = "cluster"
DISJOINT_PATHS = "disjoint-paths"


@dataclass(frozen=True)
class Modulator:
    """A deletion set whose removal leaves a graph of the named kind."""

    kind: str
    vertices: frozenset[int]

    def __post_init__(self):
        if self.kind not in (CLUSTER, DISJOINT_PATHS):
            raise ValueError(f"unknown modulator kind {self.kind!r}")

    @property
    def size(self) -> int:
        return len(self.vertices)


def _mask_of(vertices: Iterable[int]) -> int:
    mk = 0
    for v in vertices:
        mk |= 1 << v
    return mk


# ---------------------------------------------------------------------------
# residual predicates


def residual_is_cluster(graph: Graph, removed: Iterable[int]) -> bool:
    """True iff deleting ``removed`` leaves a disjoint union of cliques."""
    live = ((1 << graph.n) - 1) & ~_mask_of(removed)
    adj = graph.adj_mask
    for v in _bits(live):
        nv = adj[v] & live
        # every two live neighbors of v must be adjacent (no induced P3 center)
        for u in _bits(nv):
            if nv & ~adj[u] & ~(1 << u):
                return False
    return True


def residual_is_disjoint_paths(graph: Graph, removed: Iterable[int]) -> bool:
    """True iff deleting ``removed`` leaves a disjoint union of paths."""
    live = ((1 << graph.n) - 1) & ~_mask_of(removed)
    adj = graph.adj_mask
    nverts = 0
    nedges = 0
    for v in _bits(live):
        deg = (adj[v] & live).bit_count()
        if deg > 2:
            return False
        nverts += 1
        nedges += deg
    # max degree <= 2: paths iff no cycle iff every component is a tree
    return nedges // 2 == nverts - _count_components(adj, live)


def _count_components(adj: list[int], live: int) -> int:
    count = 0
    todo = live
    while todo:
        count += 1
        start = todo & -todo
        reach = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & live & ~reach
            reach |= frontier
        todo &= ~reach
    return count


def modulator_is_valid(graph: Graph, mod: Modulator) -> bool:
    if mod.kind == CLUSTER:
        return residual_is_cluster(graph, mod.vertices)
    return residual_is_disjoint_paths(graph, mod.vertices)


# ---------------------------------------------------------------------------
# cluster modulator: branch on the three vertices of an induced P3


def _first_p3(graph: Graph, removed: int) -> tuple[int, int, int] | None:
    """Lexicographically first (a, b, c) with b adjacent to both a and c and
    a, c non-adjacent, among vertices not yet removed."""
    live = ((1 << graph.n) - 1) & ~removed
    adj = graph.adj_mask
    for a in _bits(live):
        for b in _bits(adj[a] & live):
            cand = adj[b] & live & ~adj[a] & ~(1 << a) & ~(1 << b)
            if cand:
                return a, b, (cand & -cand).bit_length() - 1
    return None


def _branch_cluster(graph: Graph, removed: int, budget: int) -> int | None:
    p3 = _first_p3(graph, removed)
    if p3 is None:
        return removed
    if budget == 0:
        return None
    for v in p3:
        got = _branch_cluster(graph, removed | 1 << v, budget - 1)
        if got is not None:
            return got
    return None


def find_cluster_modulator(graph: Graph, budget: int) -> Modulator | None:
    """A deletion set of size <= budget leaving a cluster graph, or None."""
    got = _branch_cluster(graph, 0, budget)
    if got is None:
        return None
    return Modulator(CLUSTER, frozenset(_bits(got)))


def minimum_cluster_modulator(graph: Graph, cap: int | None = None) -> Modulator | None:
    """Smallest cluster modulator, budgets tried in increasing order.

    With a cap, gives up (returns None) once the budget would exceed it.
    """
    top = graph.n if cap is None else min(cap, graph.n)
    for budget in range(top + 1):
        got = find_cluster_modulator(graph, budget)
        if got is not None:
            return got
    return None


# ---------------------------------------------------------------------------
# disjoint-paths modulator: branch on a vertex of degree >= 3


def _max_high_degree(graph: Graph, removed: int) -> int | None:
    """Live vertex of maximum residual degree, if that degree is >= 3."""
    live = ((1 << graph.n) - 1) & ~removed
    adj = graph.adj_mask
    best, best_deg = None, 2
    for v in _bits(live):
        deg = (adj[v] & live).bit_count()
        if deg > best_deg:
            best, best_deg = v, deg
    return best


def _residual_cycle_minima(graph: Graph, removed: int) -> list[int] | None:
    """Smallest vertex of each cycle of the residual graph (max degree <= 2)."""
    live = ((1 << graph.n) - 1) & ~removed
    adj = graph.adj_mask
    minima = []
    todo = live
    while todo:
        start = todo & -todo
        reach = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & live & ~reach
            reach |= frontier
        todo &= ~reach
        nverts = reach.bit_count()
        nedges = sum((adj[v] & reach).bit_count() for v in _bits(reach)) // 2
        if nedges == nverts:  # the component is a cycle
            minima.append((reach & -reach).bit_length() - 1)
    return minima


def _branch_paths(graph: Graph, removed: int, budget: int) -> int | None:
    u = _max_high_degree(graph, removed)
    if u is None:
        minima = _residual_cycle_minima(graph, removed)
        if len(minima) > budget:
            return None
        return removed | _mask_of(minima)
    if budget == 0:
        return None
    got = _branch_paths(graph, removed | 1 << u, budget - 1)
    if got is not None:
        return got
    # u survives: its final degree is <= 2, so all but two of its current
    # neighbors must go; the subsets each swallow deg-2 budget at once
    live = ((1 << graph.n) - 1) & ~removed
    nbrs = tuple(_bits(graph.adj_mask[u] & live))
    need = len(nbrs) - 2
    if need > budget:
        return None
    for sub in combinations(nbrs, need):
        got = _branch_paths(graph, removed | _mask_of(sub), budget - need)
        if got is not None:
            return got
    return None


def find_disjoint_paths_modulator(graph: Graph, budget: int) -> Modulator | None:
    """A deletion set of size <= budget leaving disjoint paths, or None."""
    got = _branch_paths(graph, 0, budget)
    if got is None:
        return None
    return Modulator(DISJOINT_PATHS, frozenset(_bits(got)))


def minimum_disjoint_paths_modulator(graph: Graph, cap: int | None = None) -> Modulator | None:
    top = graph.n if cap is None else min(cap, graph.n)
    for budget in range(top + 1):
        got = find_disjoint_paths_modulator(graph, budget)
        if got is not None:
            return got
    return None


# ---------------------------------------------------------------------------
# modular decomposition


@dataclass(frozen=True)
class MDNode:
    """Node of a modular decomposition tree.

    kind is one of ``leaf`` (single vertex), ``union`` (children are the
    connected components), ``join`` (children are the co-components) or
    ``prime`` (children are the maximal proper modules; ``pattern`` is the
    quotient graph, its vertex i standing for ``children[i]``).
    """

    kind: str
    vertex: int = -1
    children: tuple["MDNode", ...] = ()
    pattern: Graph | None = None

    def vertex_mask(self) -> int:
        if self.kind == "leaf":
            return 1 << self.vertex
        mk = 0
        for ch in self.children:
            mk |= ch.vertex_mask()
        return mk

    def vertices(self) -> tuple[int, ...]:
        return tuple(_bits(self.vertex_mask()))

    def min_vertex(self) -> int:
        if self.kind == "leaf":
            return self.vertex
        return min(ch.min_vertex() for ch in self.children)


def is_module(graph: Graph, vertices: Iterable[int]) -> bool:
    """True iff every vertex outside the set sees all of it or none of it."""
    mk = _mask_of(vertices)
    full = (1 << graph.n) - 1
    for v in _bits(full & ~mk):
        inter = graph.adj_mask[v] & mk
        if inter and inter != mk:
            return False
    return True


def modular_decomposition(graph: Graph) -> MDNode:
    adj = graph.adj_mask
    full = (1 << graph.n) - 1

    def components(mask: int, complement: bool) -> list[int]:
        comps = []
        todo = mask
        while todo:
            start = todo & -todo
            reach = start
            frontier = start
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    av = adj[v]
                    if complement:
                        av = ~av & ~(1 << v)
                    nxt |= av
                frontier = nxt & mask & ~reach
                reach |= frontier
            comps.append(reach)
            todo &= ~reach
        return comps

    def modules_avoiding(mask: int, v: int) -> list[int]:
        # maximal modules of the induced subgraph that do not contain v:
        # refine {N(v), non-neighbors} by every outside splitter until stable
        av = adj[v] & mask
        parts = [p for p in (av, mask & ~av & ~(1 << v)) if p]
        changed = True
        while changed:
            changed = False
            for z in _bits(mask):
                az = adj[z]
                zb = 1 << z
                nxt = []
                for part in parts:
                    if part & zb:
                        nxt.append(part)
                        continue
                    inter = part & az
                    if inter and inter != part:
                        nxt.append(inter)
                        nxt.append(part & ~az)
                        changed = True
                    else:
                        nxt.append(part)
                parts = nxt
        return parts

    def min_module_containing(mask: int, seed: int) -> int:
        # grow the seed set: any outside vertex adjacent to part of it must join
        w = seed
        while True:
            grow = 0
            rest = mask & ~w
            if not rest:
                return w
            for z in _bits(rest):
                inter = adj[z] & w
                if inter and inter != w:
                    grow |= 1 << z
            if not grow:
                return w
            w |= grow
            if w == mask:
                return w

    def maximal_proper_modules(mask: int) -> list[int]:
        # connected and co-connected here, so the maximal proper modules
        # partition the vertex set and the quotient is prime
        v0 = (mask & -mask).bit_length() - 1
        v0b = 1 << v0
        part_of_v0 = v0b
        rest = mask & ~v0b
        while rest & ~part_of_v0:
            u = (rest & ~part_of_v0) & -(rest & ~part_of_v0)
            grown = min_module_containing(mask, part_of_v0 | u)
            if grown != mask:
                part_of_v0 = grown  # still inside the same maximal proper module
            rest &= ~u
        parts = [part_of_v0]
        for cls in modules_avoiding(mask, v0):
            if cls & part_of_v0 == 0:
                parts.append(cls)
        got = 0
        for part in parts:
            if got & part:
                raise MespError("modular decomposition produced overlapping parts")
            got |= part
        if got != mask:
            raise MespError("modular decomposition lost vertices")
        for part in parts:
            for z in _bits(mask & ~part):
                inter = adj[z] & part
                if inter and inter != part:
                    raise MespError("modular decomposition produced a non-module part")
        return parts

    def decompose(mask: int) -> MDNode:
        if mask & (mask - 1) == 0:
            return MDNode("leaf", vertex=mask.bit_length() - 1)
        comps = components(mask, complement=False)
        if len(comps) > 1:
            comps.sort(key=lambda c: c & -c)
            return MDNode("union", children=tuple(decompose(c) for c in comps))
        cocomps = components(mask, complement=True)
        if len(cocomps) > 1:
            cocomps.sort(key=lambda c: c & -c)
            return MDNode("join", children=tuple(decompose(c) for c in cocomps))
        parts = maximal_proper_modules(mask)
        parts.sort(key=lambda c: c & -c)
        reps = [(p & -p).bit_length() - 1 for p in parts]
        edges = [
            (i, j)
            for i, j in combinations(range(len(parts)), 2)
            if adj[reps[i]] >> reps[j] & 1
        ]
        pattern = Graph(len(parts), edges)
        return MDNode("prime", children=tuple(decompose(p) for p in parts), pattern=pattern)

    root = decompose(full)
    return root


def modular_width(node: MDNode) -> int:
    """Largest child count over prime nodes; 0 when the tree has none."""
    w = len(node.children) if node.kind == "prime" else 0
    for ch in node.children:
        w = max(w, modular_width(ch))
    return w


def mdtree_to_sexpr(node: MDNode) -> str:
    if node.kind == "leaf":
        return f"(leaf {node.vertex})"
    inner = " ".join(mdtree_to_sexpr(ch) for ch in node.children)
    return f"({node.kind} {inner})"


def expand_mdtree(node: MDNode) -> set[tuple[int, int]]:
    """Edge set the tree describes, for checking it reproduces the graph."""
    if node.kind == "leaf":
        return set()
    edges: set[tuple[int, int]] = set()
    child_masks = [ch.vertex_mask() for ch in node.children]
    for ch in node.children:
        edges |= expand_mdtree(ch)
    for i, j in combinations(range(len(node.children)), 2):
        joined = node.kind == "join" or (
            node.kind == "prime" and node.pattern.has_edge(i, j)
        )
        if joined:
            for u in _bits(child_masks[i]):
                for v in _bits(child_masks[j]):
                    edges.add((min(u, v), max(u, v)))
    return edges
