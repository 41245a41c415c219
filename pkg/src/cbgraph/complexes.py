"""Finite fragments of the compression-body graph and torus complexes.

A fragment stores explicit vertices (marked compression bodies or
curves), its adjacency, and for torus complexes the simplices up to a
dimension bound, together with the provenance that regenerates it.
Compression-body fragments only admit vertex sets on which containment
is decidable in both directions, so the fragment is exactly the induced
subgraph, never an approximation.  Clique and chromatic numbers are
computed exactly by branch and bound (fragments stay small).
"""

from __future__ import annotations

import json
from itertools import combinations

from cbgraph import ops
from cbgraph.cb import Containment, MarkedCB, contains
from cbgraph.curves import CurveClass
from cbgraph.surface import standard_triangulation

MAX_EXACT_VERTICES = 64


class ComplexFragment:
    """An explicit finite piece of one of the curve-based complexes."""

    __slots__ = ("kind", "vertices", "edges", "simplices", "provenance")

    def __init__(self, kind, vertices, edges, simplices=(), provenance=None):
        self.kind = kind
        self.vertices = tuple(vertices)
        self.edges = frozenset(tuple(sorted(e)) for e in edges)
        self.simplices = tuple(sorted(tuple(sorted(s)) for s in simplices))
        self.provenance = dict(provenance or {})

    def __len__(self):
        return len(self.vertices)

    def adjacent(self, i: int, j: int) -> bool:
        return tuple(sorted((i, j))) in self.edges

    def neighbors(self, i: int) -> list[int]:
        return sorted(
            j for j in range(len(self.vertices)) if j != i and self.adjacent(i, j)
        )

    def index(self, v) -> int:
        return self.vertices.index(v)

    def __repr__(self):
        return (
            f"ComplexFragment(kind={self.kind!r}, n={len(self.vertices)}, "
            f"edges={len(self.edges)})"
        )

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": [v.to_json() for v in self.vertices],
            "edges": sorted(list(e) for e in self.edges),
            "simplices": [list(s) for s in self.simplices],
            "provenance": self.provenance,
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "ComplexFragment":
        if isinstance(data, str):
            data = json.loads(data)
        if data["kind"] == "cb":
            vertices = [MarkedCB.from_json(v) for v in data["vertices"]]
        else:
            vertices = [CurveClass.from_json(v) for v in data["vertices"]]
        return cls(
            data["kind"],
            vertices,
            [tuple(e) for e in data["edges"]],
            [tuple(s) for s in data["simplices"]],
            data.get("provenance"),
        )

    def to_dot(self) -> str:
        lines = [f'graph "{self.kind}" {{']
        for i, v in enumerate(self.vertices):
            lines.append(f'  v{i} [label="{v!r}"];')
        for i, j in sorted(self.edges):
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines)


def build_cb_fragment(bodies, provenance=None) -> ComplexFragment:
    """Induced subgraph of the compression-body graph on the given bodies.

    Fails listing the offending pair if any containment query is
    undecided: approximate fragments are never produced.
    """
    bodies = list(dict.fromkeys(bodies))
    for b in bodies:
        if b.derived_type.is_trivial:
            raise ValueError("the trivial body is not a vertex of the graph")
    edges = []
    for i, u in enumerate(bodies):
        for j in range(i + 1, len(bodies)):
            v = bodies[j]
            fwd = contains(u, v)
            bwd = contains(v, u)
            if Containment.TRUE in (fwd, bwd):
                # Containment is strict, so the other direction is settled.
                edges.append((i, j))
            elif Containment.UNDECIDED in (fwd, bwd):
                raise ValueError(
                    f"containment undecided between vertices {i} and {j}: "
                    f"{u!r} vs {v!r}"
                )
    return ComplexFragment("cb", bodies, edges, provenance=provenance)


def links(f: ComplexFragment, v) -> dict:
    """Uplink (strictly containing) and downlink (strictly contained) of v."""
    if f.kind != "cb":
        raise ValueError("links are defined on compression-body fragments")
    i = f.index(v) if not isinstance(v, int) else v
    u = f.vertices[i]
    up, down = [], []
    for j in f.neighbors(i):
        w = f.vertices[j]
        if contains(u, w) is Containment.TRUE:
            up.append(j)
        elif contains(w, u) is Containment.TRUE:
            down.append(j)
        else:
            raise RuntimeError("fragment edge without a containment direction")
    return {"up": up, "down": down}


def is_join(f: ComplexFragment, part_a, part_b) -> bool:
    """Whether the two parts span a join: every cross pair is an edge."""
    return all(f.adjacent(i, j) for i in part_a for j in part_b)


def induced(f: ComplexFragment, indices) -> tuple[int, frozenset]:
    """Plain (n, edges) graph induced on the given vertex indices."""
    indices = list(indices)
    pos = {v: k for k, v in enumerate(indices)}
    edges = frozenset(
        (pos[i], pos[j])
        for i, j in f.edges
        if i in pos and j in pos
    )
    return len(indices), edges


def _as_graph(g) -> tuple[int, frozenset]:
    if isinstance(g, ComplexFragment):
        return len(g.vertices), g.edges
    n, edges = g
    return n, frozenset(tuple(sorted(e)) for e in edges)


def anti_connected(g) -> bool:
    """Connectivity of the complement graph."""
    n, edges = _as_graph(g)
    if n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        cur = stack.pop()
        for j in range(n):
            if j not in seen and j != cur and tuple(sorted((cur, j))) not in edges:
                seen.add(j)
                stack.append(j)
    return len(seen) == n


def clique_number(g) -> int:
    """Exact maximum clique size via branch and bound."""
    n, edges = _as_graph(g)
    if n > MAX_EXACT_VERTICES:
        raise ValueError("graph too large for exact clique search")
    adj = [set() for _ in range(n)]
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    best = 0

    def grow(clique, candidates):
        nonlocal best
        if not candidates:
            best = max(best, len(clique))
            return
        if len(clique) + len(candidates) <= best:
            return
        cands = sorted(candidates, key=lambda v: -len(adj[v] & candidates))
        for v in cands:
            grow(clique + [v], candidates & adj[v])
            candidates = candidates - {v}
            if len(clique) + len(candidates) <= best:
                return

    grow([], set(range(n)))
    return best


def chromatic_number(g) -> int:
    """Exact chromatic number, seeded by the clique lower bound."""
    n, edges = _as_graph(g)
    if n > MAX_EXACT_VERTICES:
        raise ValueError("graph too large for exact coloring search")
    if n == 0:
        return 0
    adj = [set() for _ in range(n)]
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    order = sorted(range(n), key=lambda v: -len(adj[v]))

    def colorable(k: int) -> bool:
        colors = {}

        def assign(pos: int) -> bool:
            if pos == n:
                return True
            v = order[pos]
            used = {colors[u] for u in adj[v] if u in colors}
            # Break color symmetry: allow one fresh color at most.
            fresh_done = False
            for c in range(k):
                if c in used:
                    continue
                is_fresh = c not in colors.values()
                if is_fresh and fresh_done:
                    break
                if is_fresh:
                    fresh_done = True
                colors[v] = c
                if assign(pos + 1):
                    return True
                del colors[v]
            return False

        return assign(0)

    k = clique_number((n, edges))
    k = max(k, 1)
    while not colorable(k):
        k += 1
    return k


def build_tc_fragment(curves, max_dim: int = 3, provenance=None) -> ComplexFragment:
    """Torus-complex fragment: simplices span sets sharing a punctured torus."""
    curves = list(dict.fromkeys(curves))
    for c in curves:
        if not c.is_connected:
            raise ValueError("torus complex vertices must be connected curves")
        if c.is_separating:
            raise ValueError("torus complex vertices must be nonseparating")
    edges = []
    for i, j in combinations(range(len(curves)), 2):
        if ops.common_punctured_torus([curves[i], curves[j]]):
            edges.append((i, j))
    edge_set = {tuple(e) for e in edges}
    simplices = []
    for size in range(3, max_dim + 2):
        for combo in combinations(range(len(curves)), size):
            if any(
                tuple(sorted(p)) not in edge_set for p in combinations(combo, 2)
            ):
                continue
            if ops.common_punctured_torus([curves[k] for k in combo]):
                simplices.append(combo)
    return ComplexFragment("tc", curves, edges, simplices, provenance)


def empty_triangles(f: ComplexFragment) -> set[tuple[int, int, int]]:
    """Pairwise-adjacent triples that do not span a 2-simplex."""
    if f.kind != "tc":
        raise ValueError("empty triangles live in torus-complex fragments")
    filled = {s for s in f.simplices if len(s) == 3}
    out = set()
    for combo in combinations(range(len(f.vertices)), 3):
        if combo in filled:
            continue
        if all(f.adjacent(i, j) for i, j in combinations(combo, 2)):
            out.add(combo)
    return out


def empty_triangle_family(a, b, d, powers) -> list[tuple]:
    """Empty triangles (a, b, twist(a, d, n)) from a handle-mixing twister.

    Requires i(a, b) = 1, i(a, d) = 1, i(b, d) = 0 with d not parallel
    to b; each power then yields a triple that is pairwise contained in
    punctured tori but shares none.
    """
    if ops.intersect(a, b) != 1 or ops.intersect(a, d) != 1:
        raise ValueError("family needs i(a,b) = i(a,d) = 1")
    if ops.intersect(b, d) != 0 or d == b:
        raise ValueError("family needs d disjoint from and not parallel to b")
    out = []
    for n in powers:
        if n == 0:
            raise ValueError("powers must be nonzero")
        c = ops.twist(a, d, n)
        triple = (a, b, c)
        if not all(
            ops.common_punctured_torus(list(p)) for p in combinations(triple, 2)
        ):
            raise RuntimeError("family member lost a torus edge")
        if ops.common_punctured_torus(list(triple)):
            raise RuntimeError("family member spans a filled triangle")
        out.append(triple)
    return out


def verify_prop_intersection(f: ComplexFragment) -> dict:
    """At most one edge of every empty triangle intersects more than once."""
    triangles = sorted(empty_triangles(f))
    violations = []
    for tri in triangles:
        big = [
            (i, j)
            for i, j in combinations(tri, 2)
            if ops.intersect(f.vertices[i], f.vertices[j]) > 1
        ]
        if len(big) > 1:
            violations.append({"triangle": list(tri), "edges": big})
    return {
        "empty_triangles": len(triangles),
        "violations": violations,
        "ok": not violations,
    }


def schmutz_adjacent(a: CurveClass, b: CurveClass) -> bool:
    """Adjacency in the Schmutz graph: nonseparating curves meeting once."""
    for c in (a, b):
        if not c.is_connected or c.is_separating:
            raise ValueError("Schmutz graph vertices are nonseparating curves")
    return ops.intersect(a, b) == 1


def build_schmutz_fragment(curves, provenance=None) -> ComplexFragment:
    curves = list(dict.fromkeys(curves))
    edges = [
        (i, j)
        for i, j in combinations(range(len(curves)), 2)
        if schmutz_adjacent(curves[i], curves[j])
    ]
    return ComplexFragment("schmutz", curves, edges, provenance=provenance)


def height_coloring_is_proper(f: ComplexFragment) -> bool:
    """Heights color compression-body fragments properly (containment is strict)."""
    return all(
        f.vertices[i].height != f.vertices[j].height for i, j in f.edges
    )


def is_comparability(f: ComplexFragment) -> bool:
    """Whether orienting edges by height gives a transitive orientation."""
    n = len(f.vertices)
    heights = [v.height for v in f.vertices]
    for i, j in f.edges:
        if heights[i] == heights[j]:
            return False
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if (
                    f.adjacent(i, j)
                    and f.adjacent(j, k)
                    and heights[i] < heights[j] < heights[k]
                    and not f.adjacent(i, k)
                ):
                    return False
    return True
