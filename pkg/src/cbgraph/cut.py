"""Cutting the surface along a disjoint curve system.

The normal arcs of the system chop every triangle into corner cells and
one central cell; gluing cells across the triangulation edges (interval
by interval, parameters reversed) assembles the complement regions.
Each region is a graph of disks glued along boundary arcs, so its
Euler characteristic is #cells - #gluings, plus one for the region
that keeps the triangulation vertex; every curve component donates one
boundary circle to the region on each of its two sides, and genus
follows from chi = 2 - 2h - b.

For a single separating curve the two sides split homology, so the
side containing a disjoint nonseparating curve is decided by a rational
span test on signed edge-crossing vectors.
"""

from __future__ import annotations

from fractions import Fraction

from cbgraph.curves import CurveClass, _Tracer, corner_counts
from cbgraph.surface import Triangulation

CENTRAL = -1


class _Regions:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def signed_weights(c: CurveClass) -> tuple[int, ...]:
    """Signed edge-crossing vector; a complete H1 invariant of the class."""
    tri = c.tri
    out = [0] * tri.num_edges
    for word in c.words:
        for lam in word:
            e = tri.side_edge[lam]
            t, s = tri.side_of(lam)
            out[e] += 1 if tri.sides[e][1] == (t, s) else -1
    return tuple(out)


def _in_rational_span(vecs, target) -> bool:
    rows = [[Fraction(x) for x in v] for v in vecs]
    t = [Fraction(x) for x in target]
    cols = len(t)
    pivots = []
    for row in rows:
        r = row[:]
        for j, pr in pivots:
            if r[j]:
                f = r[j]
                r = [a - f * b for a, b in zip(r, pr)]
        lead = next((j for j in range(cols) if r[j]), None)
        if lead is not None:
            r = [a / r[lead] for a in r]
            pivots.append((lead, r))
    for j, pr in pivots:
        if t[j]:
            f = t[j]
            t = [a - f * b for a, b in zip(t, pr)]
    return not any(t)


class CutComplex:
    """The surface cut along a disjoint multicurve system."""

    def __init__(self, tri: Triangulation, system: CurveClass | None):
        self.tri = tri
        self.system = system
        weights = system.weights if system else (0,) * tri.num_edges
        self.corners = []
        for t in range(tri.num_triangles):
            e0, e1, e2 = tri.triangles[t]
            self.corners.append(
                corner_counts(weights[e0], weights[e1], weights[e2])
            )
        self.regions = _Regions()
        for t in range(tri.num_triangles):
            self.regions.add((t, CENTRAL))
            for k in range(3):
                for j in range(self.corners[t][k]):
                    self.regions.add((t, k, j))

        # Glue cells interval-by-interval across every edge.
        self.gluings = []
        for e in range(tri.num_edges):
            (t1, s1), (t2, s2) = tri.sides[e]
            w = weights[e]
            for i in range(w + 1):
                c1 = self._interval_cell(t1, s1, i, w)
                c2 = self._interval_cell(t2, s2, w - i, w)
                self.regions.union(c1, c2)
                self.gluings.append((c1, c2, e, t2, s2))

        cells_of = {}
        glue_count = {}
        for cell in self.regions.parent:
            cells_of.setdefault(self.regions.find(cell), []).append(cell)
        for c1, _, _, _, _ in self.gluings:
            r = self.regions.find(c1)
            glue_count[r] = glue_count.get(r, 0) + 1
        self.chi = {r: len(cs) - glue_count.get(r, 0) for r, cs in cells_of.items()}
        self._cells_of = cells_of

        # All triangle corners are the one vertex of the triangulation;
        # it survives the cut as an interior point of a single region and
        # contributes +1 there (cells away from it are glued along arcs
        # with free endpoints, which the cells-minus-gluings count covers).
        vertex_cells = set()
        for t in range(tri.num_triangles):
            for k in range(3):
                cell = (t, k, 0) if self.corners[t][k] > 0 else (t, CENTRAL)
                vertex_cells.add(self.regions.find(cell))
        if len(vertex_cells) != 1:
            raise RuntimeError("vertex corners landed in several regions")
        self.vertex_region = vertex_cells.pop()
        self.chi[self.vertex_region] += 1

        # Boundary circles: each traced component contributes one circle
        # to the region on each of its sides.
        self.boundary = {r: 0 for r in self.chi}
        self.component_sides = []
        self.component_words = []
        self.component_anchors = []
        if system is not None:
            from cbgraph.kernel import canonical_cyclic

            for cycle in _Tracer(tri, weights).components():
                lam, pos = cycle[0]
                sides = self._arc_cells(lam, pos)
                pair = tuple(self.regions.find(c) for c in sides)
                self.component_sides.append(pair)
                word = tuple(x for x, _ in cycle)
                self.component_words.append(canonical_cyclic(word, tri.mate))
                self.component_anchors.append((lam, pos))
                for r in pair:
                    self.boundary[r] += 1

    def _interval_cell(self, t, slot, i, w):
        n = self.corners[t]
        if i < n[slot]:
            return (t, slot, i)
        if i == n[slot]:
            return (t, CENTRAL)
        return (t, (slot + 1) % 3, w - i)

    def _arc_cells(self, lam, pos):
        # One passage of a component: a corner arc separating a
        # corner-side cell from the next cell inward.
        tri = self.tri
        t, s_in = tri.side_of(lam)
        n = self.corners[t]
        e = tri.side_edge[lam]
        w = self.system.weights[e]
        # Recover the triangle-frame position of the entry point.
        p = pos if tri.sides[e][0] == (t, s_in) else w - 1 - pos
        if p < n[s_in]:
            corner, a = s_in, p + 1
        else:
            corner, a = (s_in + 1) % 3, w - p
        outer = (t, corner, a - 1)
        inner = (t, corner, a) if a < n[corner] else (t, CENTRAL)
        return outer, inner

    def component_index(self, c: CurveClass) -> int:
        """Index of the traced system component isotopic to the curve c."""
        if not c.is_connected:
            raise ValueError("component lookup needs a connected curve")
        try:
            return self.component_words.index(c.words[0])
        except ValueError:
            raise ValueError("curve is not a component of the system") from None

    def sides_of(self, c: CurveClass):
        """The pair of regions on the two sides of the system component c."""
        return self.component_sides[self.component_index(c)]

    def region_genus(self, region) -> int:
        return (2 - self.chi[region] - self.boundary[region]) // 2

    def profile(self):
        """Sorted (genus, boundary_count) records of the cut components."""
        out = []
        for r, chi in self.chi.items():
            b = self.boundary[r]
            h2 = 2 - chi - b
            if h2 % 2:
                raise RuntimeError("non-integral genus in cut component")
            out.append((h2 // 2, b))
        return sorted(out)

    def region_loop_vectors(self, region):
        """Signed edge-crossing vectors spanning H1 images of loops in a region."""
        from collections import deque

        tri = self.tri
        root = self._cells_of[region][0]
        adj = {}
        local = []
        for gi, (c1, c2, e, t2, s2) in enumerate(self.gluings):
            if self.regions.find(c1) != region:
                continue
            sign = 1 if tri.sides[e][1] == (t2, s2) else -1
            local.append((gi, c1, c2, e, sign))
            adj.setdefault(c1, []).append((c2, e, sign, gi))
            adj.setdefault(c2, []).append((c1, e, -sign, gi))
        # BFS spanning tree; every non-tree gluing closes a basis loop.
        vec_to_root = {root: [0] * tri.num_edges}
        tree_glue = set()
        queue = deque([root])
        while queue:
            cur = queue.popleft()
            for nxt, e, sign, gi in adj.get(cur, []):
                if nxt in vec_to_root:
                    continue
                v = list(vec_to_root[cur])
                v[e] += sign
                vec_to_root[nxt] = v
                tree_glue.add(gi)
                queue.append(nxt)
        vectors = []
        for gi, c1, c2, e, sign in local:
            if gi in tree_glue:
                continue
            v = list(vec_to_root[c1])
            v[e] += sign
            loop = [a - b for a, b in zip(v, vec_to_root[c2])]
            if any(loop):
                vectors.append(tuple(loop))
        return vectors

    def region_containing(self, c: CurveClass):
        """Region holding the curve c, for c disjoint from the system.

        Decided geometrically: in the joint normal arrangement of the
        system and c, a crossing point of c lies in a definite interval
        between system points on its edge, which names a cell.
        """
        if not c.is_connected:
            raise ValueError("region lookup needs a connected curve")
        if self.system is None:
            return self.regions.find((0, CENTRAL))
        comps = self.system.components() if not self.system.is_connected else [
            self.system
        ]
        if any(c == x for x in comps):
            raise ValueError("curve is a component of the system itself")
        union = disjoint_union(comps + [c])
        weights = self.system.weights
        c_word = c.words[0]
        c_point = None
        system_points = set()
        for cycle in _Tracer(self.tri, union.weights).components():
            from cbgraph.kernel import canonical_cyclic

            word = canonical_cyclic(tuple(x for x, _ in cycle), self.tri.mate)
            if word == c_word:
                c_point = cycle[0]
            else:
                for lam, pos in cycle:
                    system_points.add((self.tri.side_edge[lam], pos))
        if c_point is None:
            raise RuntimeError("curve not found in the joint trace")
        lam, pos = c_point
        e = self.tri.side_edge[lam]
        below = sum(1 for (e2, p2) in system_points if e2 == e and p2 < pos)
        t1, s1 = self.tri.sides[e][0]
        cell = self._interval_cell(t1, s1, below, weights[e])
        return self.regions.find(cell)

    def nonseparating_in_region(self, region) -> CurveClass:
        """An essential nonseparating curve embedded inside the region.

        Built from a spanning tree of the region's cells: a non-tree
        gluing with homologically nontrivial loop closes up into a
        simple curve (the shared tree prefix cancels on reduction).
        """
        from collections import deque

        tri = self.tri
        root = self._cells_of[region][0]
        adj = {}
        locals_ = []
        for gi, (c1, c2, e, t2, s2) in enumerate(self.gluings):
            if self.regions.find(c1) != region:
                continue
            fwd = 3 * t2 + s2
            sign = 1 if tri.sides[e][1] == (t2, s2) else -1
            locals_.append((gi, c1, c2, e, sign, fwd))
            adj.setdefault(c1, []).append((c2, e, sign, gi, fwd))
            adj.setdefault(c2, []).append((c1, e, -sign, gi, tri.mate[fwd]))
        vec = {root: [0] * tri.num_edges}
        path = {root: ()}
        tree = set()
        queue = deque([root])
        while queue:
            cur = queue.popleft()
            for nxt, e, sign, gi, letter in adj.get(cur, []):
                if nxt in vec:
                    continue
                v = list(vec[cur])
                v[e] += sign
                vec[nxt] = v
                path[nxt] = path[cur] + (letter,)
                tree.add(gi)
                queue.append(nxt)
        from cbgraph.kernel import reverse_word

        for gi, c1, c2, e, sign, fwd in locals_:
            if gi in tree:
                continue
            loop = [a - b for a, b in zip(vec[c1], vec[c2])]
            loop[e] += sign
            if not any(loop):
                continue
            word = path[c1] + (fwd,) + reverse_word(path[c2], tri.mate)
            return CurveClass.from_word(tri, word)
        raise ValueError("region carries no nonseparating curve")

    def side_containing(self, c: CurveClass):
        """Region holding the nonseparating curve c, for a separating system.

        Requires the system to be a single separating curve disjoint
        from c, so that the two sides split H1 and the signed-weight
        span decides membership.
        """
        if self.system is None or not self.system.is_connected:
            raise ValueError("side analysis needs a single separating curve")
        if not self.system.is_separating:
            raise ValueError("side analysis needs a separating curve")
        if c.is_connected and c.is_separating:
            raise ValueError("side analysis needs a nonseparating curve")
        target = signed_weights(c)
        hits = [
            r
            for r in self.chi
            if _in_rational_span(self.region_loop_vectors(r), target)
        ]
        if len(hits) != 1:
            raise RuntimeError("homology did not decide the side")
        return hits[0]


def disjoint_union(system) -> CurveClass | None:
    """The multicurve union of pairwise disjoint classes (None if empty)."""
    from cbgraph import ops

    curves = sorted(set(system))
    if not curves:
        return None
    tri = curves[0].tri
    for i, a in enumerate(curves):
        for b in curves[i + 1 :]:
            if ops.intersect(a, b) != 0:
                raise ValueError("system is not pairwise disjoint")
    weights = [0] * tri.num_edges
    for c in curves:
        weights = [x + y for x, y in zip(weights, c.weights)]
    return CurveClass.from_weights(tri, weights)


def cut_profile(tri: Triangulation, system):
    """Sorted (genus, boundary_count) records of S cut along the system."""
    union = disjoint_union(system)
    return CutComplex(tri, union).profile()


def dual_curve(a: CurveClass, avoid=()) -> CurveClass:
    """A curve crossing a exactly once and missing every curve in avoid.

    Found as a shortest cell path through the complement of the whole
    system from one side of a to the other, closed up across a; the
    path crosses no system arc, so the result is disjoint from the
    avoided curves, and a single transversal point with nonzero mod-2
    pairing pins the intersection number with a at one.  Fails when the
    two sides of a cannot be joined in the complement.
    """
    from collections import deque

    tri = a.tri
    if not a.is_connected:
        raise ValueError("dual_curve needs a connected curve")
    union = disjoint_union([a, *avoid])
    cc = CutComplex(tri, union)
    lam, pos = cc.component_anchors[cc.component_index(a)]
    outer, inner = cc._arc_cells(lam, pos)

    adj = {}
    for c1, c2, e, t2, s2 in cc.gluings:
        fwd = 3 * t2 + s2
        adj.setdefault(c1, []).append((c2, fwd))
        adj.setdefault(c2, []).append((c1, tri.mate[fwd]))
    prev = {inner: None}
    queue = deque([inner])
    while queue and outer not in prev:
        cur = queue.popleft()
        for nxt, letter in adj.get(cur, []):
            if nxt not in prev:
                prev[nxt] = (cur, letter)
                queue.append(nxt)
    if outer not in prev:
        raise ValueError("the two sides of the curve do not meet in the complement")
    word = []
    cell = outer
    while prev[cell] is not None:
        cell, letter = prev[cell]
        word.append(letter)
    word.reverse()
    return CurveClass.from_word(tri, word)
