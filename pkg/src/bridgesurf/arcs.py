"""Arc census of a multicurve against a small decomposition.

Cutting a curve family ``gamma`` along a pants decomposition leaves arcs,
and each arc lives in one complement piece with its endpoints on the
piece's boundary circles: a *seam* joins two distinct circles, a *wave*
returns to the circle it started on, and in a twice-marked disk every
essential arc separates the two marked points — the disk's single seam
class, since an arc cutting off neither point would bound a bigon with
the boundary circle and minimal position excludes bigons.  This module
counts the arcs in every class exactly.

The whole census reads off a single joint minimal position: each
component of ``gamma`` runs its cut itinerary against the decomposition's
*union* web, so every crossing is localized at an exact slot of the
component's walk and an exact strand of the union, and all crossings
share one consistent picture by construction.  (Solving the components of
the decomposition against ``gamma`` pairwise instead is unsound: the
pairwise minimal positions can disagree about which side of an edge a
crossing sits on, and such positions need not extend to a joint one.)

The itinerary's greedy walk only ever crosses union chords whose corner
contains its entry gap — veering toward vertex ``s + 1`` from entry side
``s`` crosses the vertex-``s`` family nested outside the gap, veering
toward ``s + 2`` crosses the vertex-``s + 1`` family nested inside it,
and both families' corners contain the gap.  Every crossing therefore
exits a corner: the arc ahead of it lies on the crossed chord's outer
side and the arc behind it on the inner side, so consecutive crossings
along the walk bound one arc each and the census is immediate.

Separation of marked points is still measured outright — a parity check
that doubles as a bigon-freeness audit of the realized position.  The
arc, closed up along a stretch of the piece's boundary circle, is a
closed curve inside the closed disk piece, hence null-homologous; a
marked point is then on the arc's far side exactly when a fixed skeleton
path from the piece's other marked point crosses the closed-up curve an
odd number of times.  Both crossing counts are available exactly: the
arc's edge crossings from its slot span, the boundary stretch's from the
circle's slot cycle.
"""

from .cuts import CutItinerary
from .strands import DEFAULT_SLOT_BUDGET, orientation_orbits
from .taut import tauten
from .web import Web, _canon_to_ccw


class ArcCensus:
    """Exact per-class arc counts of ``gamma`` cut by a decomposition.

    ``counts`` maps each piece index to a dict from class key to the
    number of parallel arcs: pants keys are ``("seam", c1, c2)`` and
    ``("wave", c)``, disk keys are ``("seam", c)`` (separating the two
    marked points; the only class minimal position allows, though a
    non-separating arc would still be reported as ``("trivial", c)``),
    with circles named as ``(component, side)`` pairs.  ``K`` is the
    total crossing count and
    ``comp_K[ci]`` its share on decomposition component ``ci``.
    """

    def __init__(self, pieces, gamma, budget=DEFAULT_SLOT_BUDGET):
        assert pieces.cx is gamma.cx
        self.pieces = pieces
        self.gamma = gamma
        self.cx = pieces.cx
        self._chord_at = {}
        for t in range(len(self.cx.triangles)):
            for ch in pieces.chords_in(t):
                for (si, sp) in ch.ends:
                    self._chord_at[(t, si, sp)] = ch
        self._disk_paths = {}
        self.counts = {}
        self.K = 0
        self.comp_K = {ci: 0 for ci in range(pieces.curve.component_count)}
        self.itineraries = []
        for comp_web in self._gamma_components(budget):
            it = CutItinerary(pieces.web, comp_web, budget, tables=False)
            self.itineraries.append(it)
            self.K += it.K
            self._census_component(it)

    def _gamma_components(self, budget):
        """The components of ``gamma`` as standalone connected webs."""
        if self.gamma.web.is_empty():
            return []
        orbits = orientation_orbits(self.gamma.web, budget)
        if len(orbits) == 1:
            return [self.gamma.web]
        cx = self.cx
        gweb = self.gamma.web
        out = []
        for orbit in orbits:
            recs = []
            for (e, k, pos) in orbit:
                w = gweb.edge_weight(e)
                p0 = pos if k == 0 else w - 1 - pos
                recs.append((e, _canon_to_ccw(cx, e, 0, p0, w),
                             cx.edge_sides[e][k][0]))
            comp_web = Web.from_crossing_sequences(cx, [recs])
            stripped = tauten(comp_web)
            assert stripped == 0, "curve component was not taut"
            out.append(comp_web)
        return out

    # ------------------------------------------------------------------
    # census of one component's itinerary

    def _census_component(self, it):
        """Count the arcs between consecutive crossings of one walk."""
        flat = []
        for u, step in enumerate(it.steps):
            if not step.crossed:
                continue
            e, k, _pos = step.slot
            t, i = self.cx.edge_sides[e][k]
            for (_end, plo, phi) in step.crossed:
                rng = range(plo, phi)
                for p in (rng if step.case_a else reversed(rng)):
                    flat.append((u, self._chord_at[(t, i, p)]))
        if not flat:
            return
        n = len(it.steps)
        for j, (u1, ch1) in enumerate(flat):
            u2, ch2 = flat[(j + 1) % len(flat)]
            wrap = j + 1 == len(flat)
            if u1 == u2 and not wrap:
                hits = {}
            else:
                hits = {}
                u = u1
                while True:
                    u = (u + 1) % n
                    e = it.steps[u].slot[0]
                    hits[e] = hits.get(e, 0) + 1
                    if u == u2:
                        break
            self.comp_K[ch1.step[0]] += 1
            self._record(ch1, ch2, hits)

    # ------------------------------------------------------------------
    # classification

    def _record(self, ch_a, ch_b, hits):
        """One arc leaving ``ch_a`` on its outer side, reaching ``ch_b``
        on its inner side."""
        node = ch_a.outer
        assert node == ch_b.inner, "arc endpoints disagree about their piece"
        piece = self.pieces._node_piece[node]
        c_a = ch_a.outer_circle
        c_b = ch_b.inner_circle
        if piece.kind == "pants":
            if c_a == c_b:
                key = ("wave", c_a)
            else:
                key = ("seam",) + tuple(sorted((c_a, c_b)))
        else:
            assert c_a == c_b == piece.circles[0]
            odd = self._separates(piece, ch_a, ch_b, hits)
            key = ("seam", c_a) if odd else ("trivial", c_a)
        per = self.counts.setdefault(piece.index, {})
        per[key] = per.get(key, 0) + 1

    def _separates(self, piece, ch_a, ch_b, hits):
        """Does the arc separate the disk piece's two marked points?"""
        path = self._disk_path(piece)
        alpha = sum(hits.get(e, 0) for e in path)
        ci, u1 = ch_a.step
        cj, u2 = ch_b.step
        assert ci == cj == piece.circles[0][0]
        orbit = self.pieces._circle_steps[ci]
        beta = 0
        idx = u1
        while idx != u2:
            idx = (idx + 1) % len(orbit)
            if orbit[idx][0] in path:
                beta += 1
        return (alpha + beta) % 2 == 1

    def _disk_path(self, piece):
        """A fixed skeleton path between the piece's two marked points."""
        path = self._disk_paths.get(piece.index)
        if path is not None:
            return path
        v1, v2 = piece.marked
        adj = {}
        for ei, (a, b) in enumerate(self.cx.edges):
            adj.setdefault(a, []).append((b, ei))
            adj.setdefault(b, []).append((a, ei))
        prev = {v1: None}
        queue = [v1]
        while queue and v2 not in prev:
            nxt = []
            for v in queue:
                for (u, ei) in adj[v]:
                    if u not in prev:
                        prev[u] = (v, ei)
                        nxt.append(u)
            queue = nxt
        edges = set()
        v = v2
        while prev[v] is not None:
            v, ei = prev[v]
            edges.add(ei)
        self._disk_paths[piece.index] = edges
        return edges
