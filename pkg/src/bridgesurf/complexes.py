"""Canonical combinatorial models of closed orientable marked surfaces.

A surface of genus ``g`` with ``2b`` marked points is modelled as the double
of a planar disk with ``g`` holes: two mirror-image copies of a triangulated
grid region ("top" and "bottom" sheets) glued pointwise along the outer
rectangle and the hole squares.  All vertices carry exact rational plane
coordinates, so named curves can later be drawn as polylines and traced
exactly, and the whole complex renders for free.

Conventions
-----------
* The sheet is the rectangle ``[0, W] x [0, H]`` with ``W = 2g + 3`` and
  ``H = 5``.  Hole ``i`` (1-based) is the removed unit cell
  ``[2i-1, 2i] x [2, 3]``.
* When ``2b > 0`` the unit cell ``[W-2, W-1] x [2, 3]`` of the top sheet is
  the marked disk ``D``: the ``2b`` marked points sit on its horizontal
  midline in label order, and the cell is triangulated by two fans so every
  marked point is a vertex.
* Top-sheet triangles are listed counterclockwise in plane coordinates and
  bottom-sheet triangles clockwise, which orients the glued closed surface
  consistently (each edge is traversed once in each direction).
"""

from fractions import Fraction

TOP = "top"
BOTTOM = "bottom"
SHARED = "shared"


class MarkedSurface:
    """A closed orientable surface of genus g with 2b labelled marked points."""

    def __init__(self, genus, marked_point_count):
        if genus < 0:
            raise ValueError("genus must be nonnegative")
        if marked_point_count < 0 or marked_point_count % 2 != 0:
            raise ValueError(
                "marked point count must be even and nonnegative, got %r"
                % (marked_point_count,)
            )
        self.genus = genus
        self.marked_point_count = marked_point_count
        self.marked_point_labels = list(range(1, marked_point_count + 1))

    @property
    def bridge_number(self):
        return self.marked_point_count // 2

    def admits_splitting_construction(self):
        """Whether the bridge-splitting constructions apply to this surface.

        The sphere needs at least six marked points and the torus at least
        two; other surfaces are unrestricted.
        """
        if self.genus == 0:
            return self.marked_point_count >= 6
        if self.genus == 1:
            return self.marked_point_count >= 2 or self.marked_point_count == 0
        return True

    def __eq__(self, other):
        return (
            isinstance(other, MarkedSurface)
            and self.genus == other.genus
            and self.marked_point_count == other.marked_point_count
        )

    def __hash__(self):
        return hash((self.genus, self.marked_point_count))

    def __repr__(self):
        return "MarkedSurface(genus=%d, marked_point_count=%d)" % (
            self.genus,
            self.marked_point_count,
        )


class SurfaceComplex:
    """An oriented triangulation of a marked surface with plane coordinates.

    Attributes
    ----------
    surface : MarkedSurface
    vertex_sheets : list of TOP | BOTTOM | SHARED per vertex.
    vertex_coords : list of (Fraction, Fraction) plane coordinates.
    triangles : list of (v0, v1, v2), positively oriented on the surface.
    tri_sheets : sheet tag per triangle.
    edges : list of (u, v) vertex pairs.
    tri_edges : per triangle, edge ids (side i joins vertices i, i+1 mod 3).
    edge_sides : per edge, the two (triangle, side) incidences.
    marked_vertices : vertex ids of the marked points in label order.
    d_triangles : triangle ids of the marked disk D (empty when 2b = 0).
    d_boundary : vertex cycle around D.
    """

    def __init__(self, surface):
        self.surface = surface
        self.vertex_sheets = []
        self.vertex_coords = []
        self.triangles = []
        self.tri_sheets = []
        self.edges = []
        self.tri_edges = []
        self.edge_sides = []
        self.marked_vertices = []
        self.d_triangles = []
        self.d_boundary = []
        self._vertex_index = {}
        self._edge_index = {}
        self._build()
        self._finish()

    # ------------------------------------------------------------------
    # construction

    @property
    def genus(self):
        return self.surface.genus

    @property
    def marked_count(self):
        return self.surface.marked_point_count

    @property
    def width(self):
        return 2 * self.genus + 3

    @property
    def height(self):
        return 5

    def hole_cell(self, i):
        """Lower-left corner of the i-th (1-based) removed hole cell."""
        return (2 * i - 1, 2)

    @property
    def disk_cell(self):
        """Lower-left corner of the cell carrying the marked disk D."""
        return (self.width - 2, 2)

    def _on_boundary(self, x, y):
        if x == 0 or x == self.width or y == 0 or y == self.height:
            return True
        for i in range(1, self.genus + 1):
            hx, hy = self.hole_cell(i)
            if hx <= x <= hx + 1 and hy <= y <= hy + 1:
                # Corner of the hole square (the only grid points on it).
                if (x in (hx, hx + 1)) and (y in (hy, hy + 1)):
                    return True
        return False

    def _is_boundary_segment(self, p, q):
        (x1, y1), (x2, y2) = p, q
        if x1 == x2 and x1 in (0, self.width):
            return True
        if y1 == y2 and y1 in (0, self.height):
            return True
        for i in range(1, self.genus + 1):
            hx, hy = self.hole_cell(i)
            corners = {(hx, hy), (hx + 1, hy), (hx + 1, hy + 1), (hx, hy + 1)}
            if {p, q} <= corners and (x1 == x2 or y1 == y2):
                return True
        return False

    def _vertex(self, sheet, x, y):
        x = Fraction(x)
        y = Fraction(y)
        grid = x.denominator == 1 and y.denominator == 1
        if grid and self._on_boundary(x, y):
            key = (SHARED, x, y)
        else:
            key = (sheet, x, y)
        v = self._vertex_index.get(key)
        if v is None:
            v = len(self.vertex_coords)
            self._vertex_index[key] = v
            self.vertex_sheets.append(key[0])
            self.vertex_coords.append((x, y))
        return v

    def _edge(self, sheet, u, v):
        pu, pv = self.vertex_coords[u], self.vertex_coords[v]
        if (
            self.vertex_sheets[u] == SHARED
            and self.vertex_sheets[v] == SHARED
            and self._is_boundary_segment(pu, pv)
        ):
            key = (SHARED, min(u, v), max(u, v))
        else:
            key = (sheet, min(u, v), max(u, v))
        e = self._edge_index.get(key)
        if e is None:
            e = len(self.edges)
            self._edge_index[key] = e
            self.edges.append((min(u, v), max(u, v)))
            self.edge_sides.append([])
        return e

    def _add_triangle(self, sheet, verts):
        t = len(self.triangles)
        self.triangles.append(tuple(verts))
        self.tri_sheets.append(sheet)
        es = []
        for i in range(3):
            e = self._edge(sheet, verts[i], verts[(i + 1) % 3])
            es.append(e)
            self.edge_sides[e].append((t, i))
        self.tri_edges.append(tuple(es))
        return t

    def _build(self):
        g, b2 = self.genus, self.marked_count
        holes = {self.hole_cell(i) for i in range(1, g + 1)}
        dcell = self.disk_cell if b2 > 0 else None
        for sheet in (TOP, BOTTOM):
            for cx in range(self.width):
                for cy in range(self.height):
                    if (cx, cy) in holes:
                        continue
                    if sheet == TOP and (cx, cy) == dcell:
                        self._build_disk_cell(cx, cy)
                        continue
                    bl = self._vertex(sheet, cx, cy)
                    br = self._vertex(sheet, cx + 1, cy)
                    tr = self._vertex(sheet, cx + 1, cy + 1)
                    tl = self._vertex(sheet, cx, cy + 1)
                    if sheet == TOP:
                        self._add_triangle(sheet, (bl, br, tr))
                        self._add_triangle(sheet, (bl, tr, tl))
                    else:
                        self._add_triangle(sheet, (bl, tr, br))
                        self._add_triangle(sheet, (bl, tl, tr))

    def _build_disk_cell(self, cx, cy):
        b2 = self.marked_count
        c00 = self._vertex(TOP, cx, cy)
        c10 = self._vertex(TOP, cx + 1, cy)
        c11 = self._vertex(TOP, cx + 1, cy + 1)
        c01 = self._vertex(TOP, cx, cy + 1)
        mid = Fraction(2 * cy + 1, 2)
        pts = [
            self._vertex(TOP, cx + Fraction(k, b2 + 1), mid)
            for k in range(1, b2 + 1)
        ]
        self.marked_vertices = pts
        tris = []
        tris.append(self._add_triangle(TOP, (c00, pts[0], c01)))
        for k in range(b2 - 1):
            tris.append(self._add_triangle(TOP, (c00, pts[k + 1], pts[k])))
        tris.append(self._add_triangle(TOP, (c00, c10, pts[-1])))
        for k in range(b2 - 1):
            tris.append(self._add_triangle(TOP, (c01, pts[k], pts[k + 1])))
        tris.append(self._add_triangle(TOP, (c01, pts[-1], c11)))
        tris.append(self._add_triangle(TOP, (pts[-1], c10, c11)))
        self.d_triangles = tris
        self.d_boundary = [c00, c10, c11, c01]

    def _finish(self):
        del self._vertex_index
        self._edge_index = None
        for e, sides in enumerate(self.edge_sides):
            if len(sides) != 2:
                raise AssertionError(
                    "edge %d has %d incident triangle sides" % (e, len(sides))
                )
        # Orientation check: each edge appears once in each direction.
        for e, (u, v) in enumerate(self.edges):
            dirs = set()
            for t, i in self.edge_sides[e]:
                a = self.triangles[t][i]
                dirs.add(a == u)
            assert dirs == {True, False}, "inconsistent orientation on edge %d" % e
        chi = len(self.vertex_coords) - len(self.edges) + len(self.triangles)
        assert chi == 2 - 2 * self.genus, "Euler characteristic %d" % chi
        # Fast lookups used by the curve machinery.
        self.edge_of_pair = {}
        for t, (e0, e1, e2) in enumerate(self.tri_edges):
            self.edge_of_pair[(t, 0)] = e0
            self.edge_of_pair[(t, 1)] = e1
            self.edge_of_pair[(t, 2)] = e2
        self.vertex_is_marked = [False] * len(self.vertex_coords)
        for v in self.marked_vertices:
            self.vertex_is_marked[v] = True

    # ------------------------------------------------------------------
    # queries

    def other_side(self, e, t):
        """The (triangle, side) across edge e from triangle t."""
        (t1, i1), (t2, i2) = self.edge_sides[e]
        return (t2, i2) if t1 == t else (t1, i1)

    def triangle_corners(self, t):
        """Plane coordinates of the triangle's vertices."""
        return tuple(self.vertex_coords[v] for v in self.triangles[t])

    def edge_endpoints(self, e):
        u, v = self.edges[e]
        return self.vertex_coords[u], self.vertex_coords[v]

    def side_vertices(self, t, i):
        tri = self.triangles[t]
        return tri[i], tri[(i + 1) % 3]

    def edge_direction_in(self, t, i):
        """+1 if side i of t runs along its edge's canonical (u, v) order."""
        e = self.tri_edges[t][i]
        u, _v = self.edges[e]
        a, _b = self.side_vertices(t, i)
        return 1 if a == u else -1

    def vertex_star(self, v):
        """Triangle corners around v as a list of (triangle, corner index)."""
        out = []
        for t, tri in enumerate(self.triangles):
            for i in range(3):
                if tri[i] == v:
                    out.append((t, i))
        return out

    def stats(self):
        return {
            "vertices": len(self.vertex_coords),
            "edges": len(self.edges),
            "triangles": len(self.triangles),
            "euler_characteristic": len(self.vertex_coords)
            - len(self.edges)
            + len(self.triangles),
        }

    def to_json_dict(self):
        return {
            "schema_version": 1,
            "genus": self.genus,
            "marked_point_count": self.marked_count,
            "vertices": [
                {"sheet": s, "x": [str(x.numerator), str(x.denominator)],
                 "y": [str(y.numerator), str(y.denominator)]}
                for s, (x, y) in zip(self.vertex_sheets, self.vertex_coords)
            ],
            "triangles": [list(t) for t in self.triangles],
            "triangle_edges": [list(t) for t in self.tri_edges],
            "edges": [list(e) for e in self.edges],
            "marked_vertices": list(self.marked_vertices),
            "d_triangles": list(self.d_triangles),
            "d_boundary": list(self.d_boundary),
        }

    def __repr__(self):
        return "SurfaceComplex(genus=%d, marked=%d, triangles=%d)" % (
            self.genus,
            self.marked_count,
            len(self.triangles),
        )


def build_surface(genus, marked_points):
    """Build the canonical (MarkedSurface, SurfaceComplex) pair.

    Deterministic: identical inputs yield identical complexes.  Odd
    ``marked_points`` is rejected.  Surfaces outside the splitting
    constructions' hypotheses (e.g. a sphere with fewer than six marked
    points) are still built; construction entry points check separately.
    """
    surface = MarkedSurface(genus, marked_points)
    return surface, SurfaceComplex(surface)
