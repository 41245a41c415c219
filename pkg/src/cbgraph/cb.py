"""Compression-body calculus over a fixed exterior surface.

The abstract side works purely with homeomorphism types: a compression body
is determined by the genus of its exterior boundary together with the
multiset of genera of its interior boundary components.  Heights, gluings,
minimal compressions and the separating/non-separating dichotomy are all
exact integer bookkeeping on those types.

The marked side (standard-form compressing systems, small bodies, meridian
tests, containment) lives further down and builds on the curve engine.
"""

from __future__ import annotations

import json
from enum import Enum
from typing import Iterable, Iterator

MAX_SCAN_GENUS = 6
MAX_CHAIN_HEIGHT = 12


class CBType:
    """Homeomorphism type: exterior genus plus interior boundary genera."""

    __slots__ = ("exterior_genus", "interior_genera")

    def __init__(self, exterior_genus: int, interior_genera: Iterable[int] = ()):
        interior = tuple(sorted(interior_genera))
        if exterior_genus < 1:
            raise ValueError("exterior genus must be >= 1")
        if any(g < 1 for g in interior):
            raise ValueError("interior genera must be >= 1 (spheres are capped)")
        if sum(interior) > exterior_genus:
            raise ValueError("interior genera exceed exterior genus")
        self.exterior_genus = exterior_genus
        self.interior_genera = interior

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CBType)
            and self.exterior_genus == other.exterior_genus
            and self.interior_genera == other.interior_genera
        )

    def __hash__(self) -> int:
        return hash((self.exterior_genus, self.interior_genera))

    def __repr__(self) -> str:
        inner = ",".join(map(str, self.interior_genera))
        return f"CB({self.exterior_genus};{inner})"

    def __lt__(self, other: "CBType") -> bool:
        return (self.exterior_genus, self.interior_genera) < (
            other.exterior_genus,
            other.interior_genera,
        )

    @property
    def is_trivial(self) -> bool:
        """The product exterior x [0,1]."""
        return self.interior_genera == (self.exterior_genus,)

    @property
    def is_handlebody(self) -> bool:
        return not self.interior_genera

    def to_json(self) -> dict:
        return {"g": self.exterior_genus, "interior": list(self.interior_genera)}

    @classmethod
    def from_json(cls, data: dict | str) -> "CBType":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["g"], data["interior"])


def trivial_type(g: int) -> CBType:
    return CBType(g, (g,))


def height(t: CBType) -> int:
    """Length of every sequence of minimal compressions building t."""
    return (2 * t.exterior_genus - 1) - sum(2 * g - 1 for g in t.interior_genera)


def glue(c: CBType, comp_genus: int, d: CBType) -> CBType:
    """Glue d onto an interior boundary component of c of genus comp_genus.

    The component disappears and d's interior boundary takes its place;
    heights add.
    """
    if comp_genus not in c.interior_genera:
        raise ValueError(f"{c} has no interior component of genus {comp_genus}")
    if d.exterior_genus != comp_genus:
        raise ValueError(
            f"exterior genus {d.exterior_genus} does not match component {comp_genus}"
        )
    interior = list(c.interior_genera)
    interior.remove(comp_genus)
    interior.extend(d.interior_genera)
    return CBType(c.exterior_genus, interior)


def minimal_moves(t: CBType) -> set[CBType]:
    """Types reachable from t by gluing one minimal compression body.

    Gluing a solid torus deletes a torus component; gluing a separating
    small compression body splits a genus-f component into genera j, f-j.
    Every result has height(t) + 1.
    """
    out = set()
    for idx, f in enumerate(t.interior_genera):
        rest = t.interior_genera[:idx] + t.interior_genera[idx + 1 :]
        if f == 1:
            out.add(CBType(t.exterior_genus, rest))
        else:
            for j in range(1, f // 2 + 1):
                out.add(CBType(t.exterior_genus, rest + (j, f - j)))
    return out


def all_minimal_sequences(t: CBType) -> set[tuple[CBType, ...]]:
    """All chains of minimal compressions from the trivial type to t.

    Chains are returned without the trivial starting type; each has length
    height(t).
    """
    h = height(t)
    if h > MAX_CHAIN_HEIGHT:
        raise ValueError(f"height {h} exceeds the enumeration guard {MAX_CHAIN_HEIGHT}")
    start = trivial_type(t.exterior_genus)
    chains: set[tuple[CBType, ...]] = set()

    def extend(cur: CBType, chain: tuple[CBType, ...]) -> None:
        if cur == t:
            chains.add(chain)
            return
        if height(cur) >= h:
            return
        for nxt in minimal_moves(cur):
            if _could_reach(nxt, t):
                extend(nxt, chain + (nxt,))

    extend(start, ())
    return chains


def _could_reach(c: CBType, t: CBType) -> bool:
    # c can still be compressed down to t: t's interior genera must be
    # obtainable by iterated splitting/deletion from c's.
    return _refines(c.interior_genera, t.interior_genera)


def _refines(src: tuple[int, ...], dst: tuple[int, ...]) -> bool:
    # Can dst be reached from src by replacing f with j, f-j and deleting 1s?
    if not src:
        return not dst
    if sum(src) < sum(dst):
        return False
    # Match the largest source genus: it is either kept, split, or (if 1)
    # deleted.  Exhaustive branching is fine at desk scale.
    f = src[-1]
    rest = src[:-1]
    if f in dst:
        i = dst.index(f)
        if _refines(rest, dst[:i] + dst[i + 1 :]):
            return True
    if f == 1:
        return _refines(rest, dst)
    for j in range(1, f // 2 + 1):
        merged = tuple(sorted(rest + (j, f - j)))
        if _refines(merged, dst):
            return True
    return False


def enumerate_types(g: int, include_trivial: bool = True) -> list[CBType]:
    """All compression-body types with exterior genus g, sorted."""
    out = []
    for total in range(0, g + 1):
        for part in _partitions(total):
            t = CBType(g, part)
            if include_trivial or not t.is_trivial:
                out.append(t)
    return sorted(out)


def _partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in _partitions(n - first, first):
            yield rest + (first,)


def classify_short(g: int) -> dict[str, set[CBType]]:
    """The height-one and height-two types with exterior genus g >= 2."""
    if g < 2:
        raise ValueError("needs exterior genus >= 2")
    height1 = {CBType(g, (j, g - j)) for j in range(1, g // 2 + 1)}
    height2 = {CBType(g, (g - 1,))}
    for j in range(1, g + 1):
        for k in range(j, g + 1):
            m = g - j - k
            if m >= k:
                height2.add(CBType(g, (j, k, m)))
    return {"height1": height1, "height2": height2}


def purely_separating(t: CBType) -> bool:
    """Whether every compressing system for t consists of separating curves.

    Holds exactly when the interior genera sum to the exterior genus.
    """
    return sum(t.interior_genera) == t.exterior_genus


def nonsep_system_exists(t: CBType) -> bool:
    """Whether t can be compressed along only non-separating curves.

    Equivalent, at the type level, to having a non-separating meridian:
    the interior genera must sum to less than the exterior genus (or the
    type is trivial, compressed along nothing at all).
    """
    return t.is_trivial or not purely_separating(t)


def composable_pairs(gmax: int) -> Iterator[tuple[CBType, int, CBType]]:
    """All (c, component genus, d) triples gluable at exterior genus <= gmax."""
    for g in range(1, gmax + 1):
        for c in enumerate_types(g):
            for f in sorted(set(c.interior_genera)):
                for d in enumerate_types(f):
                    yield c, f, d


# ---------------------------------------------------------------------------
# Marked compression bodies over a fixed triangulated surface.


class Containment(Enum):
    """Tri-state answer of the certified containment fragment."""

    TRUE = "true"
    FALSE = "false"
    UNDECIDED = "undecided"


def _placement(tri, ordered, a):
    """How the curve a sits in the capped surface compressed along `ordered`.

    Returns (separates, eligible, repairable): `separates` within its
    capped component, `eligible` when compressing a adds exactly one to
    the height (essential in a torus component, or separating a capped
    component into two positive-genus pieces), `repairable` when the
    standard-form repair (inserting a punctured-torus boundary around a)
    applies.
    """
    from cbgraph import cut

    union = cut.disjoint_union(list(ordered) + [a])
    cc = cut.CutComplex(tri, union)
    rp, rm = cc.sides_of(a)
    if rp != rm:
        gp, gm = cc.region_genus(rp), cc.region_genus(rm)
        return True, gp >= 1 and gm >= 1, False
    # Regluing a returns its capped component, of genus one more than
    # the cut region's.
    g_comp = cc.region_genus(rp) + 1
    return False, g_comp == 1, g_comp >= 2


class MarkedCB:
    """A compression body given by a standard-form compressing system.

    The input curves are reordered, and punctured-torus boundaries are
    inserted where needed, so that each system curve compresses its
    component of the previously compressed surface by exactly one
    height step; the system length then equals the height of the
    derived type.
    """

    __slots__ = ("tri", "system", "derived_type", "small_base")

    def __init__(self, tri, system, small_base=None):
        from cbgraph import cut, ops

        self.tri = tri
        curves = sorted(set(system))
        for c in curves:
            if not c.is_connected:
                raise ValueError("system curves must be connected")
            if c.tri != tri:
                raise ValueError("system curve on a different triangulation")
        cut.disjoint_union(curves)

        ordered: list = []
        remaining = list(curves)
        rounds = 0
        while remaining:
            rounds += 1
            if rounds > 4 * len(curves) + 8:
                raise RuntimeError("standard form ordering did not stabilize")
            placed = False
            for a in remaining:
                separates, eligible, repairable = _placement(tri, ordered, a)
                if eligible:
                    ordered.append(a)
                    remaining.remove(a)
                    placed = True
                    break
            if placed:
                continue
            for a in remaining:
                separates, eligible, repairable = _placement(tri, ordered, a)
                if not repairable:
                    continue
                others = ordered + [x for x in remaining if x != a]
                try:
                    d = cut.dual_curve(a, others)
                except ValueError:
                    continue
                b = ops.band_sum(a, d)
                if b in ordered or b in remaining:
                    continue
                if any(ops.intersect(b, x) != 0 for x in others + [a]):
                    continue
                remaining.insert(0, b)
                placed = True
                break
            if not placed:
                raise ValueError("system admits no standard-form ordering")

        self.system = tuple(ordered)
        profile = cut.cut_profile(tri, ordered)
        interior = [h for h, _ in profile if h >= 1]
        self.derived_type = CBType(tri.genus, interior)
        if height(self.derived_type) != len(self.system):
            raise RuntimeError("standard form length disagrees with height")
        self.small_base = small_base

    @property
    def height(self) -> int:
        return height(self.derived_type)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MarkedCB)
            and self.tri == other.tri
            and set(self.system) == set(other.system)
        )

    def __hash__(self) -> int:
        return hash((self.tri.checksum, frozenset(self.system)))

    def __repr__(self) -> str:
        return f"MarkedCB(type={self.derived_type!r}, |system|={len(self.system)})"

    def to_json(self) -> dict:
        data = {
            "system": [c.to_json() for c in self.system],
            "type": self.derived_type.to_json(),
        }
        if self.small_base is not None:
            data["small_base"] = self.small_base.to_json()
        return data

    @classmethod
    def from_json(cls, data: dict | str) -> "MarkedCB":
        from cbgraph.curves import CurveClass
        from cbgraph.surface import standard_triangulation

        if isinstance(data, str):
            data = json.loads(data)
        tri = standard_triangulation(data["type"]["g"])
        curves = [CurveClass.from_json(c) for c in data["system"]]
        base = data.get("small_base")
        got = cls(
            tri,
            curves,
            small_base=CurveClass.from_json(base) if base else None,
        )
        if got.derived_type != CBType.from_json(data["type"]):
            raise ValueError("serialized type disagrees with the system")
        return got


def small_cb(a) -> MarkedCB:
    """The small compression body obtained by compressing the single curve a."""
    if not a.is_connected:
        raise ValueError("small compression body needs a connected curve")
    return MarkedCB(a.tri, [a], small_base=a)


def meridian_of_small(a, c) -> bool:
    """Whether c bounds a disk in the small compression body of a.

    For separating a only a itself does; for nonseparating a the
    meridians are a and the boundaries of embedded punctured tori
    containing a.
    """
    from cbgraph import cut, ops

    if not a.is_connected:
        raise ValueError("meridian test needs a connected base curve")
    if c == a:
        return True
    if a.is_separating:
        return False
    if not c.is_connected or not c.is_separating:
        return False
    if ops.intersect(a, c) != 0:
        return False
    cc = cut.CutComplex(a.tri, c)
    side = cc.side_containing(a)
    return cc.region_genus(side) == 1


def contains(c: MarkedCB, d: MarkedCB) -> Containment:
    """Certified containment of compression bodies: is c inside d?

    TRUE when every system curve of c is a certified meridian of d
    (subset of d's system, or the complete small-body meridian rule);
    FALSE when d is small and some curve of c's system is certifiably
    not a meridian; UNDECIDED otherwise.
    """
    if c.tri != d.tri:
        raise ValueError("bodies live over different triangulations")
    if set(c.system) <= set(d.system):
        return Containment.TRUE
    if not d.system:
        # The trivial body has no meridians at all.
        return Containment.FALSE
    if d.small_base is not None:
        if all(meridian_of_small(d.small_base, x) for x in c.system):
            return Containment.TRUE
        return Containment.FALSE
    return Containment.UNDECIDED
