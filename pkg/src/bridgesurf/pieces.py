"""Complementary pieces of a small multicurve on a marked surface.

Cutting the surface along a disjoint family of curves leaves *pieces*; a
curve family is a pants decomposition exactly when every piece is a pair
of pants or a disk containing two marked points.  This module computes the
piece structure at strand level (the cutting family is always small): the
complement of the family's chords inside each triangle is a nest of
regions, regions glue across edges into global pieces, and following each
curve once labels its two sides with the pieces they face.

The structure records everything the arc-classification machinery needs:

* for every triangle, the cutting chords with their flanking regions;
* for every strand crossing of every edge, the circle (curve component
  plus side) seen from below and from above;
* for every piece, its kind, its boundary circles, and the marked
  vertices it contains.
"""

from .strands import DEFAULT_SLOT_BUDGET, orientation_orbits


class Piece:
    """One complement component of the cutting family."""

    __slots__ = ("index", "kind", "circles", "marked")

    def __init__(self, index, kind, circles, marked):
        self.index = index
        self.kind = kind          # "pants" or "disk"
        self.circles = circles    # tuple of (component, side) circle ids
        self.marked = marked      # tuple of marked vertex ids inside

    def __repr__(self):
        return "Piece(%d, %s, circles=%r, marked=%r)" % (
            self.index, self.kind, self.circles, self.marked)


class Chord:
    """One cutting strand through one triangle, with its local geometry.

    ``ends`` holds the two endpoints as ``(side, pos)`` in each side's ccw
    frame; ``vertex`` is the triangle corner the chord cuts off; ``inner``
    and ``outer`` are the flanking global piece indices (inner toward the
    cut-off corner); ``inner_circle``/``outer_circle`` are the circle ids
    facing those regions.
    """

    __slots__ = ("tri", "vertex", "depth", "ends", "inner", "outer",
                 "inner_circle", "outer_circle", "step")

    def __init__(self, tri, vertex, depth, ends):
        self.tri = tri
        self.vertex = vertex
        self.depth = depth
        self.ends = ends
        self.inner = None
        self.outer = None
        self.inner_circle = None
        self.outer_circle = None
        self.step = None    # (component, index along the component's orbit)


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        if p != x:
            p = self.parent[x] = self.find(p)
        return p

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


class PieceStructure:
    """Pieces, circles and chords of a small multicurve's complement.

    Raises ``ValueError`` when some complement piece is neither a pair of
    pants nor a disk with exactly two marked points, so constructing one
    doubles as the pants-decomposition validity check.
    """

    def __init__(self, curve, budget=DEFAULT_SLOT_BUDGET):
        self.curve = curve
        self.cx = curve.cx
        self.web = curve.web
        self.orbits = orientation_orbits(self.web, budget)
        assert len(self.orbits) == curve.component_count
        self._local = {}        # triangle -> (region_of_gap, region_of_vertex)
        self._chords = {}       # triangle -> list of Chord
        self._strand_chord = {} # (edge, side-0 pos) -> Chord entered forward
        self._build_regions()
        self._glue()
        self._walk_circles()
        self._assemble_pieces()

    # ------------------------------------------------------------------
    # per-triangle regions

    def _side_frames(self, t):
        """Per side: (edge, side index, weight) in that side's ccw frame."""
        out = []
        for i in range(3):
            e = self.cx.tri_edges[t][i]
            k = self.web.side_index(e, t, i)
            out.append((e, k, self.web.edge_weight(e)))
        return out

    def _build_regions(self):
        for t in range(len(self.cx.triangles)):
            frames = self._side_frames(t)
            w = [f[2] for f in frames]
            n = tuple((w[v - 1] + w[v] - w[(v + 1) % 3]) // 2
                      for v in range(3))
            if any(c < 0 for c in n) or \
                    any(w[i] != n[i] + n[(i + 1) % 3] for i in range(3)):
                raise AssertionError("web weights not taut in triangle %d" % t)
            chords = {}
            for v in range(3):
                for d in range(n[v]):
                    side_prev = (v - 1) % 3
                    ends = ((side_prev, w[side_prev] - 1 - d), (v, d))
                    chords[(v, d)] = Chord(t, v, d, ends)
            # Walk the triangle boundary, maintaining the nest of open
            # chords; the stack state names the region of each gap.
            region_of_gap = {}
            region_of_vertex = {}
            interned = {}

            def rid(stack):
                key = tuple(stack)
                return interned.setdefault(key, len(interned))

            stack = []
            opened = set()
            for i in range(3):
                region_of_vertex[i] = rid(stack)
                for p in range(w[i]):
                    region_of_gap[(i, p)] = rid(stack)
                    if p < n[i]:
                        key = (i, p)
                    else:
                        key = ((i + 1) % 3, w[i] - 1 - p)
                    if key in opened:
                        assert stack and stack[-1] == key, \
                            "cutting chords cross in triangle %d" % t
                        stack.pop()
                    else:
                        opened.add(key)
                        chords[key].outer = rid(stack)
                        stack.append(key)
                        chords[key].inner = rid(stack)
                region_of_gap[(i, w[i])] = rid(stack)
            assert not stack, "unbalanced chords in triangle %d" % t
            assert len(opened) == len(chords)
            # The walk starts at vertex 0, i.e. *inside* the corner cut
            # off by the vertex-0 family, so for those chords the pushed
            # state is the far side; swap to keep "inner = cut-off corner".
            for ch in chords.values():
                if ch.vertex == 0:
                    ch.inner, ch.outer = ch.outer, ch.inner
            self._local[t] = (region_of_gap, region_of_vertex)
            self._chords[t] = list(chords.values())

    def _glue(self):
        uf = _UnionFind()
        cx = self.cx
        for e in range(len(cx.edges)):
            (t1, i1), (t2, i2) = cx.edge_sides[e]
            w = self.web.edge_weight(e)
            g1 = self._local[t1][0]
            g2 = self._local[t2][0]
            for g in range(w + 1):
                uf.union((t1, g1[(i1, g)]), (t2, g2[(i2, w - g)]))
        self._uf = uf

    def _gap_piece_node(self, t, i, g):
        return self._uf.find((t, self._local[t][0][(i, g)]))

    # ------------------------------------------------------------------
    # circles

    def _walk_circles(self):
        self._strand_sides = {}   # (edge, p0) -> (below0, above0) circles
        self._strand_comp = {}    # (edge, p0) -> component index
        self._circle_node = {}    # (component, side) -> piece node
        self._circle_steps = {}   # component -> list of slots (its orbit)
        cx = self.cx
        for ci, orbit in enumerate(self.orbits):
            self._circle_steps[ci] = orbit
            left_nodes = set()
            right_nodes = set()
            for u, (e, k, pos) in enumerate(orbit):
                t, i = cx.edge_sides[e][k]
                w = self.web.edge_weight(e)
                left_nodes.add(self._gap_piece_node(t, i, pos))
                right_nodes.add(self._gap_piece_node(t, i, pos + 1))
                p0 = pos if k == 0 else w - 1 - pos
                if k == 0:
                    sides = ((ci, 0), (ci, 1))
                else:
                    sides = ((ci, 1), (ci, 0))
                prev = self._strand_sides.get((e, p0))
                assert prev is None or prev == sides
                self._strand_sides[(e, p0)] = sides
                self._strand_comp[(e, p0)] = ci
                self._attach_chord(ci, u, e, k, pos, t, i)
            assert len(left_nodes) == 1, \
                "left side of component %d is not a single piece" % ci
            assert len(right_nodes) == 1
            self._circle_node[(ci, 0)] = left_nodes.pop()
            self._circle_node[(ci, 1)] = right_nodes.pop()

    def _attach_chord(self, ci, u, e, k, pos, t, i):
        """Identify the chord entered at orbit step ``u`` and label it."""
        for ch in self._chords[t]:
            for (si, sp) in ch.ends:
                if si == i and sp == pos:
                    assert ch.step is None, "chord entered twice"
                    ch.step = (ci, u)
                    return
        raise AssertionError("no chord at entry slot (%d, %d, %d)" % (e, k, pos))

    # ------------------------------------------------------------------
    # pieces

    def _assemble_pieces(self):
        # Complete chord annotations now that every strand is labelled.
        for t, chords in self._chords.items():
            for ch in chords:
                iv, d = ch.vertex, ch.depth
                ev = self.cx.tri_edges[t][iv]
                kv = self.web.side_index(ev, t, iv)
                wv = self.web.edge_weight(ev)
                p0 = d if kv == 0 else wv - 1 - d
                below0, above0 = self._strand_sides[(ev, p0)]
                if kv == 0:
                    ch.inner_circle, ch.outer_circle = below0, above0
                else:
                    ch.inner_circle, ch.outer_circle = above0, below0
                ch.inner = self._uf.find((t, ch.inner))
                ch.outer = self._uf.find((t, ch.outer))
                assert ch.inner == self._circle_node[ch.inner_circle]
                assert ch.outer == self._circle_node[ch.outer_circle]
        # Marked vertices live in well-defined pieces.
        marked_in = {}
        for v in self.cx.marked_vertices:
            nodes = set()
            for t, corner in self.cx.vertex_star(v):
                nodes.add(self._uf.find((t, self._local[t][1][corner])))
            assert len(nodes) == 1, "marked vertex %d on a cutting curve" % v
            marked_in.setdefault(nodes.pop(), []).append(v)
        # Group circles by piece node and classify.
        by_node = {}
        for circ, node in sorted(self._circle_node.items()):
            by_node.setdefault(node, []).append(circ)
        if self.curve.is_empty():
            raise ValueError("empty curve family cuts off no pieces")
        assert not set(marked_in) - set(by_node), \
            "marked points in a region with no circles"
        self.pieces = []
        self._node_piece = {}
        for node in sorted(by_node, key=lambda nd: sorted(by_node[nd])[0]
                           if by_node[nd] else (-1,)):
            circles = tuple(sorted(by_node[node]))
            marked = tuple(sorted(marked_in.get(node, ())))
            if len(circles) == 3 and not marked:
                kind = "pants"
            elif len(circles) == 1 and len(marked) == 2:
                kind = "disk"
            else:
                raise ValueError(
                    "complement piece with %d boundary circles and %d marked "
                    "points is neither a pants nor a twice-marked disk"
                    % (len(circles), len(marked)))
            piece = Piece(len(self.pieces), kind, circles, marked)
            self.pieces.append(piece)
            self._node_piece[node] = piece
        self.piece_of_circle = {
            circ: self._node_piece[node]
            for circ, node in self._circle_node.items()
        }

    # ------------------------------------------------------------------
    # queries

    def chords_in(self, t):
        return self._chords.get(t, [])

    def gap_piece(self, t, i, g):
        """Piece containing gap ``g`` of side ``i`` (side-ccw frame)."""
        return self._node_piece[self._gap_piece_node(t, i, g)]

    def strand_circles(self, e, p0):
        """(circle below, circle above) of the strand at side-0 ``p0``."""
        return self._strand_sides[(e, p0)]

    def strand_component(self, e, p0):
        return self._strand_comp[(e, p0)]

    def disk_pieces(self):
        return [p for p in self.pieces if p.kind == "disk"]

    def pants_pieces(self):
        return [p for p in self.pieces if p.kind == "pants"]
