"""Validate PieceStructure on hand-built decompositions."""
from fractions import Fraction as F

from bridgesurf.complexes import build_surface, TOP, BOTTOM
from bridgesurf.drawing import SheetIndex, trace_drawn_curve
from bridgesurf.web import Web
from bridgesurf.taut import tauten
from bridgesurf.curves import MultiCurve
from bridgesurf.pieces import PieceStructure


def union_curve(cx, index, drawn):
    recs = [trace_drawn_curve(index, pieces) for pieces in drawn]
    w = Web.from_crossing_sequences(cx, recs)
    stripped = tauten(w)
    assert stripped == 0
    return MultiCurve.from_taut_web(cx, w, len(drawn))


# ----------------------------------------------------------------- (0,6)
_s6, cx6 = build_surface(0, 6)
ix6 = SheetIndex(cx6)
y0 = F(5, 2)


def px(k):
    return 1 + F(k, 7)


def band_pts(i, j, dy, dx):
    return [(px(i) - dx, y0 - dy), (px(j) + dx, y0 - dy),
            (px(j) + dx, y0 + dy), (px(i) - dx, y0 + dy)]


std6 = union_curve(cx6, ix6, [
    [(TOP, band_pts(1, 2, F(1, 5), F(1, 24)))],
    [(TOP, band_pts(3, 4, F(1, 5), F(1, 24)))],
    [(TOP, band_pts(5, 6, F(1, 5), F(1, 24)))],
])
ps = PieceStructure(std6)
kinds = sorted(p.kind for p in ps.pieces)
assert kinds == ["disk", "disk", "disk", "pants"], kinds
for p in ps.pieces:
    print(p)
# each disk's marked pair
pairs = sorted(tuple(cx6.marked_vertices.index(v) + 1 for v in p.marked)
               for p in ps.pieces if p.kind == "disk")
assert pairs == [(1, 2), (3, 4), (5, 6)], pairs
print("(0,6) standard pieces ok")

# ----------------------------------------------------------------- (1,2)
_s12, cx12 = build_surface(1, 2)
ix12 = SheetIndex(cx12)
# width = 5, hole at cell (1,2), disk cell (3,2); marked points on y=5/2
m_pts = [(F(3, 7), F(16, 11)), (F(17, 7), F(16, 11)),
         (F(17, 7), F(39, 11)), (F(3, 7), F(39, 11))]
pair_pts = band_pts(1, 2, F(1, 5), F(1, 24))
pair_pts = [(x + 2, y) for (x, y) in pair_pts]  # disk cell starts at x=3


def px12(k):
    return 3 + F(k, 3)


pair_pts = [(px12(1) - F(1, 24), y0 - F(1, 5)),
            (px12(2) + F(1, 24), y0 - F(1, 5)),
            (px12(2) + F(1, 24), y0 + F(1, 5)),
            (px12(1) - F(1, 24), y0 + F(1, 5))]
dec12 = union_curve(cx12, ix12, [
    [(TOP, m_pts)],
    [(TOP, pair_pts)],
])
ps12 = PieceStructure(dec12)
kinds = sorted(p.kind for p in ps12.pieces)
assert kinds == ["disk", "pants"], kinds
for p in ps12.pieces:
    print(p)
pants = [p for p in ps12.pieces if p.kind == "pants"][0]
comps = sorted(c[0] for c in pants.circles)
assert comps == [0, 0, 1], comps  # both sides of m plus one side of the pair
print("(1,2) m + pair pieces ok")

# ----------------------------------------------------------------- (2,0)
_s2, cx2 = build_surface(2, 0)
ix2 = SheetIndex(cx2)
a1_pts = [(F(3, 7), F(16, 11)), (F(17, 7), F(16, 11)),
          (F(17, 7), F(39, 11)), (F(3, 7), F(39, 11))]
a2_pts = [(F(19, 7), F(19, 11)), (F(31, 7), F(19, 11)),
          (F(31, 7), F(36, 11)), (F(19, 7), F(36, 11))]
c12_pts = [(F(2, 7), F(14, 11)), (F(32, 7), F(14, 11)),
           (F(32, 7), F(41, 11)), (F(2, 7), F(41, 11))]
dec2 = union_curve(cx2, ix2, [
    [(TOP, a1_pts)],
    [(TOP, a2_pts)],
    [(TOP, c12_pts)],
])
ps2 = PieceStructure(dec2)
kinds = sorted(p.kind for p in ps2.pieces)
assert kinds == ["pants", "pants"], kinds
for p in ps2.pieces:
    print(p)
print("(2,0) a1+a2+c12 pieces ok")
