"""Authoring curves as chord sequences on the identified 4g-gon.

The genus-g surface is the quotient of a convex 4g-gon with the side
word a b a' b' c d c' d' ...; a curve is given by the ordered points
where it crosses the sides, and the chords between consecutive points
are traced through the fan diagonals with exact rational arithmetic to
produce the curve's dual word.
"""

from __future__ import annotations

from fractions import Fraction

from cbgraph.curves import CurveClass
from cbgraph.surface import Triangulation


def polygon_vertices(genus: int) -> list[tuple[Fraction, Fraction]]:
    """Rational points on the unit circle in convex ccw position."""
    m = 4 * genus
    out = []
    for k in range(m):
        phi = Fraction(2 * k + 1, m) - 1
        u = phi / (1 - phi * phi)
        d = 1 + u * u
        out.append(((1 - u * u) / d, 2 * u / d))
    return out


def partner_side(j: int) -> int:
    # Sides pair as a b a' b' per handle: 4k <-> 4k+2, 4k+1 <-> 4k+3.
    k, r = divmod(j, 4)
    return 4 * k + (r + 2) % 4


def _side_point(verts, j: int, t: Fraction):
    m = len(verts)
    a, b = verts[j], verts[(j + 1) % m]
    return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _segment_param(p, q, a, b):
    """Parameter along pq of its crossing with ab, or None."""
    d1 = _cross(p, q, a)
    d2 = _cross(p, q, b)
    d3 = _cross(a, b, p)
    d4 = _cross(a, b, q)
    if 0 in (d1, d2, d3, d4):
        raise ValueError("degenerate chord touches a diagonal endpointwise")
    if (d1 > 0) == (d2 > 0) or (d3 > 0) == (d4 > 0):
        return None
    return d3 / (d3 - d4)


def _side_incidence(genus: int, p: int) -> tuple[int, int]:
    # Fan triangle and slot carrying polygon side p.
    n = 4 * genus
    if p == 0:
        return 0, 0
    if p == n - 1:
        return n - 3, 2
    return p - 1, 1


def handle_curves(tri: Triangulation) -> list[CurveClass]:
    """The 2g standard handle curves, alternating duals per handle.

    Entries 2k, 2k+1 intersect once; curves of different handles are
    disjoint.
    """
    out = []
    for k in range(tri.genus):
        out.append(curve_from_chords(tri, [(4 * k, Fraction(1, 2))]))
        out.append(curve_from_chords(tri, [(4 * k + 1, Fraction(1, 2))]))
    return out


def chain_connector(tri: Triangulation, k: int) -> CurveClass:
    """A curve joining handles k and k+1, crossing each of their a-curves once."""
    if not 0 <= k < tri.genus - 1:
        raise ValueError("no such adjacent handle pair")
    return curve_from_chords(
        tri, [(4 * k + 1, Fraction(1, 3)), (4 * k + 5, Fraction(1, 3))]
    )


def curve_from_chords(tri: Triangulation, crossings) -> CurveClass:
    """Curve through the given (side, parameter) boundary points in order.

    After crossing side j at parameter t the curve re-enters at the
    partner point (partner_side(j), 1 - t) and runs straight to the next
    listed point.  The result is the directed-crossing word: one letter
    for the side crossing, then one per fan diagonal the chord meets.
    """
    g = tri.genus
    m = 4 * g
    verts = polygon_vertices(g)
    specs = [(j, Fraction(t)) for j, t in crossings]
    for j, t in specs:
        if not (0 < t < 1):
            raise ValueError("side parameters must lie strictly inside (0,1)")

    word = []
    for idx, (j, t) in enumerate(specs):
        p = partner_side(j)
        t_in, slot_in = _side_incidence(g, p)
        word.append(3 * t_in + slot_in)
        start = _side_point(verts, p, 1 - t)
        j2, t2 = specs[(idx + 1) % len(specs)]
        end = _side_point(verts, j2, t2)
        t_out, _ = _side_incidence(g, j2)
        # The fan triangles are angular sectors around vertex 0, so the
        # chord crosses exactly the diagonals between the two sectors, in
        # order.  The exact predicates double-check that and reject
        # chords through a polygon vertex.
        hit = set()
        for d in range(2, m - 1):
            if _segment_param(start, end, verts[0], verts[d]) is not None:
                hit.add(d)
        lo, hi = min(t_in, t_out), max(t_in, t_out)
        if hit != set(range(lo + 2, hi + 2)):
            raise RuntimeError("chord does not cross the expected diagonals")
        if t_out > t_in:
            word.extend(3 * t_mid for t_mid in range(t_in + 1, t_out + 1))
        else:
            word.extend(3 * t_mid + 2 for t_mid in range(t_in - 1, t_out - 1, -1))
    return CurveClass.from_word(tri, word)
