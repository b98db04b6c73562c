"""Scratch validation of position.py on sphere pair curves."""
from fractions import Fraction as F

from bridgesurf.complexes import build_surface, TOP
from bridgesurf.drawing import SheetIndex, trace_drawn_curve
from bridgesurf.web import Web
from bridgesurf.taut import tauten
from bridgesurf.position import geometric_intersection

_surf, cx = build_surface(0, 6)
index = SheetIndex(cx)
y0 = F(5, 2)


def px(k):
    return 1 + F(k, 7)


def band(i, j, dy=F(1, 5), dx=F(1, 24)):
    """Rectangle around marked points i..j inside the disk cell."""
    pts = [
        (px(i) - dx, y0 - dy),
        (px(j) + dx, y0 - dy),
        (px(j) + dx, y0 + dy),
        (px(i) - dx, y0 + dy),
    ]
    recs = trace_drawn_curve(index, [(TOP, pts)])
    w = Web.from_crossing_sequences(cx, [recs])
    tauten(w)
    return w


c12 = band(1, 2)
c23 = band(2, 3, dy=F(1, 6), dx=F(1, 30))
c34 = band(3, 4)
c14 = band(1, 4, dy=F(1, 4), dx=F(1, 16))
c25 = band(2, 5, dy=F(2, 7), dx=F(1, 18))

cases = [
    ("i(c12,c12)", c12, c12, 0),
    ("i(c12,c23)", c12, c23, 2),
    ("i(c23,c12)", c23, c12, 2),
    ("i(c12,c34)", c12, c34, 0),
    ("i(c14,c12)", c14, c12, 0),
    ("i(c14,c23)", c14, c23, 0),
    ("i(c14,c25)", c14, c25, 2),
    ("i(c25,c12)", c25, c12, 2),
    ("i(c25,c34)", c25, c34, 0),
]
for name, a, b, want in cases:
    got = geometric_intersection(a, b)
    print(name, "=", got, "(want %d)" % want)
    assert got == want, name
print("OK")
