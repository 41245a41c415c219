"""Isotopy classes of simple closed multicurves on a triangulated surface.

A curve is stored as a cyclic word of directed-crossing letters: letter
3t + s means "cross the edge at slot s of triangle t, entering t".  Two
triangles of the fan triangulation can share two edges, so letters (not
bare edge ids) are needed to pin down the path.  With the vertex treated
as a marked point the dual graph lifts to a trivalent tree, so cyclically
reduced words are canonical up to rotation and reversal (reversal maps
each letter to its mate) for isotopy in the punctured surface.  Isotopy
in the closed surface additionally allows pushes across the vertex,
which swap a run parallel to the vertex link for the complementary run;
`vertex_canonical` exhausts those, so word equality is isotopy.  The
letter counts per edge are exactly the normal coordinates, and tracing
those coordinates through the triangles recovers the components, which
doubles as an embeddedness check.
"""

from __future__ import annotations

import json

from cbgraph.kernel import canonical_cyclic, cyclic_reduce, reverse_word
from cbgraph.surface import Triangulation, standard_triangulation


def corner_counts(w0: int, w1: int, w2: int) -> tuple[int, int, int]:
    """Arc counts at the three corners of a triangle with side weights.

    Corner k lies between sides k-1 and k; the matching conditions (even
    sum, triangle inequalities) are exactly nonnegativity here.
    """
    total = w0 + w1 + w2
    if total % 2:
        raise ValueError("odd weight sum in a triangle")
    w = (w0, w1, w2)
    counts = tuple((w[k - 1] + w[k] - w[(k + 1) % 3]) // 2 for k in range(3))
    if any(c < 0 for c in counts):
        raise ValueError("triangle inequality violated by weights")
    return counts


class _Tracer:
    """Connects the normal arcs given by an edge-weight vector."""

    def __init__(self, tri: Triangulation, weights):
        self.tri = tri
        self.w = list(weights)
        if len(self.w) != tri.num_edges:
            raise ValueError("weight vector has wrong length")
        if any(x < 0 for x in self.w):
            raise ValueError("negative weight")
        self.corners = []
        for t in range(tri.num_triangles):
            e0, e1, e2 = tri.triangles[t]
            self.corners.append(corner_counts(self.w[e0], self.w[e1], self.w[e2]))

    def _across(self, t: int, slot: int, pos: int) -> tuple[int, int]:
        # Follow the arc through triangle t from the point at index pos on
        # side `slot` (indices count from the slot's start corner).
        n = self.corners[t]
        w_here = self.w[self.tri.edge_of(t, slot)]
        if pos < n[slot]:
            # Arc at the slot's start corner, joining side slot-1.
            out = (slot - 1) % 3
            a = pos + 1
            return out, self.w[self.tri.edge_of(t, out)] - a
        # Arc at the end corner, joining side slot+1.
        out = (slot + 1) % 3
        a = w_here - pos
        return out, a - 1

    def components(self) -> list[list[tuple[int, int]]]:
        """All traced components as cycles of (letter, position) crossings.

        Each step is a directed crossing 3t + s together with the index of
        the crossing point along the edge, counted in the frame of the
        edge's first listed incidence.
        """
        tri = self.tri
        seen = set()
        out = []
        for e in range(tri.num_edges):
            t0, s0 = tri.sides[e][0]
            for p in range(self.w[e]):
                if (e, p) in seen:
                    continue
                cycle = []
                t, slot, pos = t0, s0, p
                while True:
                    ce = tri.edge_of(t, slot)
                    cpos = self._canonical_pos(t, slot, pos)
                    if (ce, cpos) in seen:
                        break
                    seen.add((ce, cpos))
                    cycle.append((3 * t + slot, cpos))
                    # Pass through triangle t, then cross the exit edge.
                    out_slot, out_pos = self._across(t, slot, pos)
                    t2, s2 = tri.opposite(t, out_slot)
                    pos2 = self.w[tri.edge_of(t, out_slot)] - 1 - out_pos
                    t, slot, pos = t2, s2, pos2
                out.append(cycle)
        return out

    def _canonical_pos(self, t: int, slot: int, pos: int) -> int:
        e = self.tri.edge_of(t, slot)
        if self.tri.sides[e][0] == (t, slot):
            return pos
        return self.w[e] - 1 - pos


def trace_components(tri: Triangulation, weights) -> list[tuple[int, ...]]:
    """Component words of the multicurve with these normal coordinates."""
    cycles = _Tracer(tri, weights).components()
    return [tuple(x for x, _ in cycle) for cycle in cycles]


def validate_word(tri: Triangulation, word) -> None:
    """Check that a cyclic letter sequence is a valid reduced dual path."""
    n = len(word)
    if n == 0:
        raise ValueError("empty word")
    top = 3 * tri.num_triangles
    for x in word:
        if not 0 <= x < top:
            raise ValueError(f"unknown letter {x}")
    for i in range(n):
        a, b = word[i], word[(i + 1) % n]
        # After entering triangle t via letter a, the next crossing must
        # exit t through a different slot: b's mate sits in t.
        t, slot = tri.side_of(a)
        t2, slot2 = tri.side_of(tri.mate[b])
        if t2 != t:
            raise ValueError("consecutive letters do not share a triangle")
        if slot2 == slot:
            raise ValueError("word has a backtrack")


def vertex_canonical(tri: Triangulation, word) -> tuple[int, ...]:
    """Shortest canonical dual word of a component under closed isotopy.

    Cyclic reduction is canonical only in the punctured surface; an
    isotopy across the vertex replaces a run parallel to the vertex
    link by the complementary run of the link.  Runs covering at least
    half the link never lengthen the word under this swap, so the
    closure under those moves is finite; the lexicographically smallest
    of its shortest words is the canonical representative.  A swap is
    only an isotopy when no other strand of the curve separates the run
    from the vertex, so swapped words that fail to retrace as normal
    words are discarded.  The empty word comes back exactly for
    null-isotopic inputs (such as the vertex link itself).
    """
    mate = tri.mate
    start = cyclic_reduce(tuple(word), mate)
    if not start:
        return ()
    link = tuple(tri.vertex_link)
    links = (link, reverse_word(link, mate))
    n = len(link)
    min_len = n // 2
    seen = {canonical_cyclic(start, mate)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            m = len(w)
            for cycle in links:
                dbl = cycle + cycle
                for j in range(n):
                    for i in range(m):
                        k = 0
                        while k < m and k < n and w[(i + k) % m] == dbl[j + k]:
                            k += 1
                        if k < min_len:
                            continue
                        anchored = tuple(w[(i + t) % m] for t in range(m))
                        for kk in range(min_len, k + 1):
                            v = dbl[j + kk : j + n]
                            cand = canonical_cyclic(
                                reverse_word(v, mate) + anchored[kk:], mate
                            )
                            if len(cand) > len(w) or cand in seen:
                                continue
                            if cand and [
                                canonical_cyclic(t2, mate)
                                for t2 in trace_components(
                                    tri, word_weights(tri, [cand])
                                )
                            ] != [cand]:
                                continue
                            seen.add(cand)
                            nxt.append(cand)
        frontier = nxt
        if len(seen) > 20000:
            raise RuntimeError("vertex reduction closure exploded")
    best = min(len(w) for w in seen)
    if best == 0:
        return ()
    return min(w for w in seen if len(w) == best)


def word_weights(tri: Triangulation, words) -> tuple[int, ...]:
    w = [0] * tri.num_edges
    for word in words:
        for x in word:
            w[tri.side_edge[x]] += 1
    return tuple(w)


class CurveClass:
    """An essential simple closed multicurve up to isotopy."""

    __slots__ = ("tri", "words", "_weights")

    def __init__(self, tri: Triangulation, words: tuple[tuple[int, ...], ...]):
        # Internal: use the constructors below, which validate.
        self.tri = tri
        self.words = words
        self._weights = word_weights(tri, words)

    @classmethod
    def from_weights(cls, tri: Triangulation, weights) -> "CurveClass":
        words = trace_components(tri, weights)
        if not words:
            raise ValueError("zero weights: empty multicurve is not essential")
        return cls.from_words(tri, words)

    @classmethod
    def from_word(cls, tri: Triangulation, word) -> "CurveClass":
        return cls.from_words(tri, [word])

    @classmethod
    def from_words(cls, tri: Triangulation, words) -> "CurveClass":
        """Build from component dual words, verifying embeddedness.

        The words are reduced, then the normal multicurve with the summed
        coordinates is traced; it must reproduce the words exactly.  That
        round trip fails precisely when a word is non-simple or two
        components cannot be made disjoint.
        """
        reduced = []
        for word in words:
            w = vertex_canonical(tri, word)
            if not w:
                raise ValueError("a component reduces to the trivial loop")
            validate_word(tri, w)
            reduced.append(w)
        traced = sorted(
            canonical_cyclic(w, tri.mate)
            for w in trace_components(tri, word_weights(tri, reduced))
        )
        if traced != sorted(reduced):
            raise ValueError(
                "words are not an embedded multicurve (round trip failed)"
            )
        return cls._from_traced(tri, reduced)

    @classmethod
    def _from_traced(cls, tri: Triangulation, words) -> "CurveClass":
        link = canonical_cyclic(tri.vertex_link, tri.mate)
        canon = tuple(sorted(canonical_cyclic(w, tri.mate) for w in words))
        for w in canon:
            if w == link:
                raise ValueError("vertex-linking component is inessential")
        return cls(tri, canon)

    @property
    def weights(self) -> tuple[int, ...]:
        return self._weights

    @property
    def component_count(self) -> int:
        return len(self.words)

    @property
    def is_connected(self) -> bool:
        return len(self.words) == 1

    @property
    def word(self) -> tuple[int, ...]:
        if len(self.words) != 1:
            raise ValueError("multicurve has no single word")
        return self.words[0]

    @property
    def edge_words(self) -> tuple[tuple[int, ...], ...]:
        """Component words as the edges crossed, forgetting directions."""
        return tuple(
            tuple(self.tri.side_edge[x] for x in w) for w in self.words
        )

    @property
    def is_separating(self) -> bool:
        """Whether the (connected) curve disconnects the surface.

        A curve on a one-vertex triangulation is null-homologous mod 2
        iff it crosses every edge an even number of times.
        """
        if len(self.words) != 1:
            raise ValueError("is_separating needs a connected curve")
        return all(w % 2 == 0 for w in self._weights)

    @property
    def mod2_class(self) -> tuple[int, ...]:
        return tuple(w % 2 for w in self._weights)

    def components(self) -> list["CurveClass"]:
        return [CurveClass(self.tri, (w,)) for w in self.words]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CurveClass)
            and self.tri == other.tri
            and self.words == other.words
        )

    def __hash__(self) -> int:
        return hash((self.tri.checksum, self.words))

    def __lt__(self, other: "CurveClass") -> bool:
        return (self._weights, self.words) < (other._weights, other.words)

    def __repr__(self) -> str:
        return f"CurveClass(g={self.tri.genus}, words={list(self.words)})"

    def to_json(self) -> dict:
        return {
            "genus": self.tri.genus,
            "weights": list(self._weights),
            "checksum": self.tri.checksum,
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "CurveClass":
        if isinstance(data, str):
            data = json.loads(data)
        tri = standard_triangulation(data["genus"])
        if "checksum" in data and data["checksum"] != tri.checksum:
            raise ValueError("curve was saved against a different triangulation")
        return cls.from_weights(tri, data["weights"])
