"""Exact tracing of drawn polyline curves into strand webs.

Construction curves (decomposition circles, seed seams, the serpentine arc
through the marked disk, ...) are specified as closed rational polylines on
the planar sheets of a ``SurfaceComplex``.  This module intersects them
exactly with the triangulation and produces the crossing sequences consumed
by ``Web.from_crossing_sequences``; the rational crossing positions double
as the initial transverse order along each edge.

A drawn closed curve is a list of *pieces* ``(sheet, [points...])``.  A
single-piece curve closes up inside its sheet.  A multi-piece curve hops
sheets: each piece's first and last point must lie in the interior of a
shared boundary edge, and consecutive pieces (cyclically) must agree there.
All other polyline vertices must sit in open triangles, and crossings must
avoid triangulation vertices; the drawings in this package are chosen
generically so these assertions never fire.
"""

from fractions import Fraction

from .complexes import SHARED, TOP, BOTTOM


def orient(a, b, c):
    """Sign of the signed area of triangle (a, b, c)."""
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def point_in_triangle(pt, corners):
    """Strictly-inside test against a ccw or cw triangle."""
    s = {orient(corners[0], corners[1], pt),
         orient(corners[1], corners[2], pt),
         orient(corners[2], corners[0], pt)}
    return 0 not in s and len(s) == 1


def segment_crossing(p, q, a, b):
    """Exact crossing of open segment (p, q) with open segment (a, b).

    Returns (t, u) with p + t(q-p) = a + u(b-a), both strictly in (0, 1),
    or None.  Collinear overlaps raise (drawings must avoid them).
    """
    r = (q[0] - p[0], q[1] - p[1])
    s = (b[0] - a[0], b[1] - a[1])
    denom = r[0] * s[1] - r[1] * s[0]
    w = (a[0] - p[0], a[1] - p[1])
    if denom == 0:
        cross = w[0] * r[1] - w[1] * r[0]
        if cross == 0 and _overlap(p, q, a, b):
            raise AssertionError("polyline segment collinear with an edge")
        return None
    t = Fraction(w[0] * s[1] - w[1] * s[0], denom)
    u = Fraction(w[0] * r[1] - w[1] * r[0], denom)
    if 0 < t < 1 and 0 < u < 1:
        return t, u
    return None


def _overlap(p, q, a, b):
    def box(u, v):
        return (min(u[0], v[0]), min(u[1], v[1]), max(u[0], v[0]), max(u[1], v[1]))

    b1, b2 = box(p, q), box(a, b)
    return not (b1[2] < b2[0] or b2[2] < b1[0] or b1[3] < b2[1] or b2[3] < b1[1])


class SheetIndex:
    """Per-sheet triangle and edge tables for exact tracing."""

    def __init__(self, cx):
        self.cx = cx
        self.tris = {TOP: [], BOTTOM: []}
        for t in range(len(cx.triangles)):
            self.tris[cx.tri_sheets[t]].append(t)
        # Interior edges per sheet (shared edges handled only at junctions).
        self.edges = {TOP: [], BOTTOM: []}
        for e in range(len(cx.edges)):
            sheets = {cx.tri_sheets[t] for t, _ in cx.edge_sides[e]}
            if len(sheets) == 1:
                self.edges[sheets.pop()].append(e)

    def locate(self, sheet, pt):
        for t in self.tris[sheet]:
            if point_in_triangle(pt, self.cx.triangle_corners(t)):
                return t
        raise AssertionError("point %r not interior to any %s triangle" % (pt, sheet))

    def shared_edge_at(self, pt):
        """The shared boundary edge whose open interior contains pt."""
        cx = self.cx
        for e in range(len(cx.edges)):
            sheets = {cx.tri_sheets[t] for t, _ in cx.edge_sides[e]}
            if len(sheets) != 2:
                continue
            (ax, ay), (bx, by) = cx.edge_endpoints(e)
            if orient((ax, ay), (bx, by), pt) != 0:
                continue
            if min(ax, bx) <= pt[0] <= max(ax, bx) and min(ay, by) <= pt[1] <= max(ay, by):
                if pt != (ax, ay) and pt != (bx, by):
                    return e
        raise AssertionError("point %r not on a shared boundary edge" % (pt,))


def edge_param(cx, e, pt):
    """Position of pt along edge e in its canonical (u -> v) direction."""
    (ax, ay), (bx, by) = cx.edge_endpoints(e)
    if ax != bx:
        t = Fraction(pt[0] - ax, bx - ax)
    else:
        t = Fraction(pt[1] - ay, by - ay)
    assert 0 < t < 1, "crossing at or beyond an edge endpoint"
    return t


def trace_drawn_curve(index, pieces):
    """Crossing sequence of one drawn closed curve.

    Returns a list of (edge, position_key, next_tri) records suitable for
    ``Web.from_crossing_sequences``.  Every crossing's entered triangle is
    located exactly from a sample point strictly between it and the next
    crossing along the curve.
    """
    cx = index.cx
    multi = len(pieces) > 1
    records = []  # (edge, param) per crossing, in travel order
    tris = []     # entered triangle per crossing (parallel list)
    pending = None  # index of a junction crossing awaiting its triangle
    first_junction = None
    for sheet, pts in pieces:
        segs = list(zip(pts, pts[1:]))
        if not multi:
            segs.append((pts[-1], pts[0]))
        events = []  # (segment index, t, edge or None, point)
        for si, (p, q) in enumerate(segs):
            hits = []
            for e in index.edges[sheet]:
                a, b = cx.edge_endpoints(e)
                hit = segment_crossing(p, q, a, b)
                if hit is not None:
                    hits.append((hit[0], e))
            hits.sort()
            for t, e in hits:
                pt = (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))
                events.append((si, t, e, pt))
        if multi:
            # Entry and exit junctions delimit the piece.
            entry = (0, Fraction(0), None, pts[0])
            exit_e = index.shared_edge_at(pts[-1])
            events = [entry] + events + [(len(segs) - 1, Fraction(1), exit_e, pts[-1])]
        assert events, "piece crosses no edges"
        m = len(events)
        for j in range(m):
            si, t, e, pt = events[j]
            if not multi:
                nj = (j + 1) % m
            else:
                nj = j + 1
                if nj >= m:
                    break  # exit junction's triangle resolved by next piece
            nsi, _nt, _ne, npt = events[nj]
            if nsi == si:
                sample = _midpoint(pt, npt)
            else:
                # The end vertex of the current segment is crossing-free
                # and strictly inside a triangle.
                sample = segs[si][1]
            tri = index.locate(sheet, sample)
            if e is None:
                # Entry junction: this triangle belongs to the previous
                # piece's exit crossing.
                if pending is not None:
                    tris[pending] = tri
                else:
                    first_junction = tri
                continue
            records.append((e, edge_param(cx, e, pt)))
            tris.append(tri)
        if multi:
            # The exit junction crossing itself.
            si, t, e, pt = events[-1]
            records.append((e, edge_param(cx, e, pt)))
            tris.append(None)
            pending = len(tris) - 1
    if multi:
        assert pending is not None
        tris[pending] = first_junction
    assert all(t is not None for t in tris)
    return [(e, param, tri) for (e, param), tri in zip(records, tris)]


def _midpoint(p, q):
    return (Fraction(p[0] + q[0], 2), Fraction(p[1] + q[1], 2))
