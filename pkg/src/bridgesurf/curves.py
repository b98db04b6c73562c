"""Multicurves as canonical taut normal coordinates on a surface complex.

A ``MultiCurve`` wraps a taut :class:`~bridgesurf.web.Web` together with its
component count and exposes the coordinate-level operations: normalization
of raw coordinate vectors, component counting, exact geometric intersection
numbers, and isotopy testing (equality of canonical coordinates).

Raw admissible coordinates determine a normal curve family uniquely (corner
arcs in every triangle), but that family need not be taut or essential:
normalization rebuilds the corner-arc web, tautens it, and strips every
component that bounds a disk with fewer than two marked points.
"""

from . import position
from .strands import (
    DEFAULT_SLOT_BUDGET,
    component_count_exact,
    slot_orbits,
)
from .taut import tauten
from .web import End, Passage, Web


class MultiCurve:
    """An isotopy class of an essential multicurve, canonically represented.

    Instances are immutable in spirit: the wrapped web is the unique taut
    representative and must not be mutated.  ``component_count`` is exact.
    """

    def __init__(self, cx, web, component_count):
        assert web.cx is cx
        self.cx = cx
        self.web = web
        self.component_count = component_count
        self._coords = tuple(web.coordinates())

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def empty(cls, cx):
        return cls(cx, Web(cx), 0)

    @classmethod
    def from_taut_web(cls, cx, web, component_count):
        """Wrap an already-taut web whose component count is known."""
        return cls(cx, web, component_count)

    @classmethod
    def from_web(cls, cx, web, budget=DEFAULT_SLOT_BUDGET):
        """Tauten a raw web and count components by walking strands."""
        work = web.copy()
        tauten(work)
        n = component_count_exact(work, budget)
        return cls(cx, work, n)

    # ------------------------------------------------------------------
    # queries

    def coordinates(self):
        """Normal coordinates as a list of per-edge nonnegative integers."""
        return list(self._coords)

    def is_empty(self):
        return self.component_count == 0

    def __eq__(self, other):
        return (
            isinstance(other, MultiCurve)
            and self.cx is other.cx
            and self._coords == other._coords
        )

    def __hash__(self):
        return hash(self._coords)

    def __repr__(self):
        return "MultiCurve(components=%d, total_weight=%d)" % (
            self.component_count,
            sum(self._coords),
        )


def admissibility_failure(cx, coords):
    """Why a coordinate vector is inadmissible, or None if it is fine."""
    if len(coords) != len(cx.edges):
        return "expected %d edge coordinates, got %d" % (
            len(cx.edges),
            len(coords),
        )
    for e, w in enumerate(coords):
        if w < 0:
            return "negative weight %d on edge %d" % (w, e)
    for t, (e0, e1, e2) in enumerate(cx.tri_edges):
        a, b, c = coords[e0], coords[e1], coords[e2]
        if (a + b + c) % 2 != 0:
            return "odd weight sum in triangle %d" % t
        if a > b + c or b > a + c or c > a + b:
            return "triangle inequality fails in triangle %d" % t
    return None


def web_from_coordinates(cx, coords):
    """The unique normal-position web realizing admissible coordinates.

    Every triangle is filled with its three corner-arc bundles; the bundle
    cutting off the corner at vertex ``i+1`` of a triangle joins sides ``i``
    and ``i+1`` and has weight ``(w_i + w_{i+1} - w_{i+2}) / 2``.
    """
    reason = admissibility_failure(cx, coords)
    if reason is not None:
        raise ValueError("invalid coordinates: %s" % reason)
    web = Web(cx)
    corner_passages = {}
    for t, (e0, e1, e2) in enumerate(cx.tri_edges):
        w = (coords[e0], coords[e1], coords[e2])
        for i in range(3):
            c = (w[i] + w[(i + 1) % 3] - w[(i + 2) % 3]) // 2
            if c == 0:
                continue
            p = Passage(t, i, (i + 1) % 3, c)
            web.passages.append(p)
            corner_passages[(t, i)] = p
    ordered = {}
    for e in range(len(cx.edges)):
        if coords[e] == 0:
            continue
        for k, (t, i) in enumerate(cx.edge_sides[e]):
            # Ascending ccw along side i: first the bundle hugging vertex
            # i (corner i-1, which ends here as side_b), then the bundle
            # hugging vertex i+1 (corner i, ending here as side_a).
            lst = []
            p = corner_passages.get((t, (i - 1) % 3))
            if p is not None:
                lst.append(End(p, 1))
            p = corner_passages.get((t, i))
            if p is not None:
                lst.append(End(p, 0))
            ordered[(e, k)] = lst
    web.rebuild_from_passages(ordered)
    return web


def normalize(coords, cx, budget=DEFAULT_SLOT_BUDGET):
    """Canonical essential MultiCurve of a raw coordinate vector.

    Returns ``(curve, stripped)`` where ``stripped`` counts the components
    removed for bounding a disk with fewer than two marked points.  Raises
    ``ValueError`` on inadmissible coordinates.
    """
    if all(w == 0 for w in coords):
        if admissibility_failure(cx, coords) is not None:
            raise ValueError("invalid coordinates: wrong length")
        return MultiCurve.empty(cx), 0
    web = web_from_coordinates(cx, coords)
    raw_components = component_count_exact(web, budget)
    web.component_count = raw_components
    stripped = tauten(web)
    n = raw_components - stripped
    assert n == (0 if web.is_empty() else component_count_exact(web, budget))
    return MultiCurve.from_taut_web(cx, web, n), stripped


def count_components(curve):
    """Number of connected components of the canonical representative."""
    return curve.component_count


def geometric_intersection(x, y):
    """Exact geometric intersection number of two multicurves."""
    if x.cx is not y.cx:
        raise ValueError("curves live on different complexes")
    if x.is_empty() or y.is_empty():
        return 0
    return position.geometric_intersection(x.web, y.web)


def is_isotopic(x, y):
    """Whether two multicurves are isotopic (canonical coordinates equal)."""
    if x.cx is not y.cx:
        raise ValueError("curves live on different complexes")
    return x._coords == y._coords


class TracedCurve:
    """An explicit taut representative: per-component crossing cycles.

    ``cycles[i]`` is component ``i``'s cyclic list of directed slot
    crossings ``(edge, side, pos)``; reading off per-edge crossing counts
    reproduces the multicurve's normal coordinates.  Tracing walks strands,
    so it is only available within a slot budget.
    """

    def __init__(self, curve, cycles):
        self.curve = curve
        self.cycles = cycles

    def coordinates(self):
        counts = [0] * len(self.curve.cx.edges)
        for cyc in self.cycles:
            for e, _k, _x in cyc:
                counts[e] += 1
        return counts


def trace(curve, budget=DEFAULT_SLOT_BUDGET):
    """Trace a multicurve into explicit per-component crossing cycles."""
    if curve.is_empty():
        return TracedCurve(curve, [])
    orbits = slot_orbits(curve.web, budget)
    orbits.sort(key=lambda orbit: min(orbit))
    cycles = []
    covered = set()
    for orbit in orbits:
        if orbit[0] in covered:
            continue
        cycles.append(orbit)
        w_of = curve.web.edge_weight
        for e, k, x in orbit:
            covered.add((e, k, x))
            covered.add((e, 1 - k, w_of(e) - 1 - x))
    assert len(cycles) == curve.component_count
    return TracedCurve(curve, cycles)
