"""Weighted strand webs: exact taut representatives of multicurves.

A *web* stores a disjoint family of closed strands on a ``SurfaceComplex``
as run-length bundles.  A bundle ("passage") is a weighted family of
parallel chords through one triangle, entering one side and leaving
another.  Per edge we keep the bundle ends in their transverse order, so
the web records not just normal coordinates but a genuine embedded picture
of the curve family; weights are arbitrary-precision integers, so towers of
Dehn twists stay polynomial in the number of bundles rather than in total
weight.

Coordinate conventions
----------------------
Each edge has a canonical direction (from its smaller to its larger vertex
id).  A *side* of an edge is one of its two incident (triangle, side-index)
pairs, in the order stored by ``SurfaceComplex.edge_sides``.  Within a
triangle, side ``i`` runs counterclockwise from vertex ``i`` to vertex
``i+1``; the two sides of an edge therefore traverse it in opposite
directions.  Transverse positions along an edge are kept per side in that
side's counterclockwise coordinate.  A chord bundle through a triangle
always reverses the counterclockwise coordinate between its two ends, and
crossing an edge into the neighbouring triangle reverses it again, so the
relative order of parallel strands is preserved along any corridor — the
fact all the walking code below relies on.
"""

import bisect


class Passage:
    """A weighted bundle of parallel chords through one triangle.

    ``side_a`` and ``side_b`` are triangle side indices (0..2, distinct
    after normalization).  ``a_pos``/``b_pos`` are the starting side-ccw
    coordinates of the bundle's two end intervals; the bundle occupies
    ``[a_pos, a_pos + weight)`` on side_a and ``[b_pos, b_pos + weight)``
    on side_b, matched in reverse: offset ``k`` on side_a pairs with offset
    ``weight - 1 - k`` on side_b.
    """

    __slots__ = ("tri", "side_a", "side_b", "weight", "a_pos", "b_pos", "comp")

    def __init__(self, tri, side_a, side_b, weight, comp=0):
        self.tri = tri
        self.side_a = side_a
        self.side_b = side_b
        self.weight = weight
        self.a_pos = None
        self.b_pos = None
        self.comp = comp

    def end_side(self, which):
        return self.side_a if which == 0 else self.side_b

    def __repr__(self):
        return "Passage(t=%d, %d->%d, w=%d)" % (
            self.tri, self.side_a, self.side_b, self.weight)


class End:
    """One end of a passage as it sits on an edge side list."""

    __slots__ = ("passage", "which")

    def __init__(self, passage, which):
        self.passage = passage
        self.which = which

    @property
    def weight(self):
        return self.passage.weight

    def pos(self):
        return self.passage.a_pos if self.which == 0 else self.passage.b_pos

    def set_pos(self, x):
        if self.which == 0:
            self.passage.a_pos = x
        else:
            self.passage.b_pos = x

    def __repr__(self):
        return "End(%r, %d)" % (self.passage, self.which)


class Germ:
    """A half-open interval of parallel strands about to enter a triangle.

    ``edge``: edge id; ``side``: index (0/1) into ``edge_sides[edge]`` of the
    side the strands are about to enter; ``lo``/``hi``: the side-ccw
    coordinate interval [lo, hi) of the strands, measured in the ccw frame
    of the *entered* side.
    """

    __slots__ = ("edge", "side", "lo", "hi")

    def __init__(self, edge, side, lo, hi):
        self.edge = edge
        self.side = side
        self.lo = lo
        self.hi = hi

    @property
    def weight(self):
        return self.hi - self.lo

    def key(self):
        return (self.edge, self.side, self.lo, self.hi)

    def __repr__(self):
        return "Germ(e=%d, s=%d, [%d,%d))" % (self.edge, self.side, self.lo, self.hi)


class Web:
    """A taut weighted representative of a multicurve on a SurfaceComplex.

    ``side_lists[e][k]`` lists the passage Ends on side ``k`` of edge ``e``
    in ascending side-ccw coordinate.  The opposite sides of an edge carry
    the same total weight and are matched pointwise in *reversed* ccw
    coordinate (their ccw frames run in opposite directions along the edge).
    """

    def __init__(self, cx):
        self.cx = cx
        self.passages = []
        self.side_lists = {}
        self.component_count = 0

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def from_crossing_sequences(cls, cx, components):
        """Build a weight-1 web from explicit crossing sequences.

        ``components``: list of closed strands; each strand is a list of
        ``(edge_id, position_key)`` or ``(edge_id, position_key, next_tri)``
        crossings in travel order, where ``position_key`` is any totally
        ordered exact key (e.g. a Fraction) giving the crossing's position
        along the edge's canonical direction, and ``next_tri`` (optional)
        names the triangle entered after the crossing.  Consecutive
        crossings (cyclically) must be joinable through a common triangle.
        """
        components = [
            [(rec[0], rec[1], rec[2] if len(rec) > 2 else None) for rec in strand]
            for strand in components
        ]
        web = cls(cx)
        # Transverse order along each edge comes from the geometric keys.
        order = {}
        for ci, strand in enumerate(components):
            for si, (e, key, _nt) in enumerate(strand):
                order.setdefault(e, []).append((key, ci, si))
        placed = {}
        for e, items in order.items():
            items.sort()
            for canon_pos, (_k, ci, si) in enumerate(items):
                placed[(ci, si)] = canon_pos
        # Create weight-1 passages between consecutive crossings.
        pass_at = {}
        for ci, strand in enumerate(components):
            n = len(strand)
            if n < 2:
                raise ValueError("closed strand must cross at least 2 edges")
            for si in range(n):
                e1 = strand[si][0]
                e2 = strand[(si + 1) % n][0]
                t, i1, i2 = _common_triangle(cx, e1, e2, strand[si][2], ci, si)
                p = Passage(t, i1, i2, 1, comp=ci)
                web.passages.append(p)
                pass_at[(ci, si)] = p
        web.component_count = len(components)
        # Assemble side lists: for each edge, each canonical slot joins the
        # outgoing passage of crossing si and the incoming one of si.
        for e in order:
            u_w = len(order[e])
            ends_by_side = {0: [], 1: []}
            items = sorted(order[e])
            for canon_pos, (_k, ci, si) in enumerate(items):
                n = len(components[ci])
                p_out = pass_at[(ci, si)]            # leaves through e's exit
                p_in = pass_at[(ci, (si - 1) % n)]   # arrived at e
                for p, which_edge in ((p_out, "a"), (p_in, "b")):
                    side = p.side_a if which_edge == "a" else p.side_b
                    t = p.tri
                    k = _side_index(cx, e, t, side)
                    ccw = _canon_to_ccw(cx, e, k, canon_pos, u_w)
                    ends_by_side[k].append((ccw, End(p, 0 if which_edge == "a" else 1)))
            for k in (0, 1):
                ends_by_side[k].sort(key=lambda it: it[0])
                lst = []
                run = 0
                for ccw, end in ends_by_side[k]:
                    assert ccw == run, "non-contiguous placement on edge %d" % e
                    end.set_pos(ccw)
                    lst.append(end)
                    run += 1
                web.side_lists.setdefault(e, [[], []])[k] = lst
        web._check()
        return web

    def copy(self):
        other = Web(self.cx)
        clone = {}
        for p in self.passages:
            q = Passage(p.tri, p.side_a, p.side_b, p.weight, p.comp)
            q.a_pos, q.b_pos = p.a_pos, p.b_pos
            clone[id(p)] = q
            other.passages.append(q)
        for e, sides in self.side_lists.items():
            other.side_lists[e] = [
                [End(clone[id(end.passage)], end.which) for end in sides[0]],
                [End(clone[id(end.passage)], end.which) for end in sides[1]],
            ]
        other.component_count = self.component_count
        return other

    # ------------------------------------------------------------------
    # invariants and coordinates

    def _check(self):
        cx = self.cx
        for e, sides in self.side_lists.items():
            tot = [0, 0]
            for k in (0, 1):
                run = 0
                for end in sides[k]:
                    assert end.pos() == run, (e, k, end.pos(), run)
                    t, i = cx.edge_sides[e][k]
                    assert end.passage.tri == t
                    assert end.passage.end_side(end.which) == i
                    run += end.weight
                tot[k] = run
            assert tot[0] == tot[1], "weight mismatch on edge %d" % e
        for p in self.passages:
            assert p.weight > 0

    def edge_weight(self, e):
        sides = self.side_lists.get(e)
        if not sides:
            return 0
        return sum(end.weight for end in sides[0])

    def coordinates(self):
        """Normal coordinates: per-edge total weights."""
        return [self.edge_weight(e) for e in range(len(self.cx.edges))]

    def total_weight(self):
        return sum(self.edge_weight(e) for e in self.side_lists)

    def is_empty(self):
        return not self.passages

    # ------------------------------------------------------------------
    # elementary geometry helpers

    def side_index(self, e, t, i):
        return _side_index(self.cx, e, t, i)

    def ends_overlapping(self, e, k, lo, hi):
        """Ends on side k of e whose intervals meet [lo, hi), with overlap."""
        sides = self.side_lists.get(e)
        if not sides:
            return
        lst = sides[k]
        starts = [end.pos() for end in lst]
        j = bisect.bisect_right(starts, lo) - 1
        if j < 0:
            j = 0
        while j < len(lst):
            end = lst[j]
            s = end.pos()
            if s >= hi:
                break
            t = s + end.weight
            if t > lo:
                yield end, max(lo, s), min(hi, t)
            j += 1

    def step(self, germ):
        """Advance a germ through the triangle it is entering.

        Returns a list of germs (the interval may split across several
        passage ends), each positioned on the far edge of its passage and
        about to enter the *next* triangle.
        """
        cx = self.cx
        out = []
        for end, lo, hi in self.ends_overlapping(germ.edge, germ.side, germ.lo, germ.hi):
            p = end.passage
            w = p.weight
            start = end.pos()
            o_lo, o_hi = lo - start, hi - start
            # Reversed matching within the bundle.
            far_lo, far_hi = w - o_hi, w - o_lo
            far_which = 1 - end.which
            far_side = p.end_side(far_which)
            far_pos = p.a_pos if far_which == 0 else p.b_pos
            e2 = cx.tri_edges[p.tri][far_side]
            k2 = _side_index(cx, e2, p.tri, far_side)
            w2 = self.edge_weight(e2)
            lo2 = far_pos + far_lo
            hi2 = far_pos + far_hi
            # Convert from the exit side's ccw frame to the opposite side's:
            # the two frames run oppositely, x -> W - 1 - x on slots, hence
            # [lo, hi) -> [W - hi, W - lo).
            out.append((Germ(e2, 1 - k2, w2 - hi2, w2 - lo2), p, end.which, (lo, hi)))
        return out

    # ------------------------------------------------------------------
    # rebuilding after rewrites

    def rebuild_from_passages(self, ordered_ends):
        """Reinstall side lists from an explicit per-(edge, side) end order.

        ``ordered_ends``: dict (e, k) -> list of Ends in ccw order.  Weights
        and positions are recomputed; invariants are checked.
        """
        self.side_lists = {}
        for (e, k), lst in ordered_ends.items():
            self.side_lists.setdefault(e, [[], []])[k] = lst
            run = 0
            for end in lst:
                end.set_pos(run)
                run += end.weight
        self._check()


def _side_index(cx, e, t, i):
    (t1, i1), (t2, i2) = cx.edge_sides[e]
    if (t1, i1) == (t, i):
        return 0
    assert (t2, i2) == (t, i), (e, t, i)
    return 1


def _canon_to_ccw(cx, e, k, canon_pos, total):
    """Convert a canonical-direction slot to the side's ccw coordinate."""
    t, i = cx.edge_sides[e][k]
    if cx.edge_direction_in(t, i) == 1:
        return canon_pos
    return total - 1 - canon_pos


def _common_triangle(cx, e1, e2, next_tri, ci, si):
    """The triangle joining consecutive crossings of e1 then e2.

    ``next_tri``, when given, names the triangle explicitly (needed when
    two triangles share both edges).  Raises if the edges share no
    triangle; an ambiguous choice without ``next_tri`` also raises.
    """
    cands = []
    for (t1, i1) in cx.edge_sides[e1]:
        for (t2, i2) in cx.edge_sides[e2]:
            if t1 == t2 and (i1 != i2 or e1 == e2):
                cands.append((t1, i1, i2))
    if next_tri is not None:
        cands = [c for c in cands if c[0] == next_tri]
    if not cands:
        raise ValueError(
            "crossing %d of strand %d: edges %d, %d share no usable triangle"
            % (si, ci, e1, e2)
        )
    if len(cands) > 1:
        raise ValueError(
            "crossing %d of strand %d: ambiguous triangle between edges %d, %d"
            % (si, ci, e1, e2)
        )
    return cands[0]
