"""Scratch validation of twist.py on torus and sphere curves."""
from fractions import Fraction as F

from bridgesurf.complexes import build_surface, TOP, BOTTOM
from bridgesurf.drawing import SheetIndex, trace_drawn_curve
from bridgesurf.web import Web
from bridgesurf.taut import tauten
from bridgesurf.curves import MultiCurve, geometric_intersection, is_isotopic
from bridgesurf.twist import dehn_twist

# ---------------------------------------------------------------- torus
_surf, cx = build_surface(1, 0)
index = SheetIndex(cx)


def drawn(pieces):
    recs = trace_drawn_curve(index, pieces)
    w = Web.from_crossing_sequences(cx, [recs])
    tauten(w)
    return MultiCurve.from_taut_web(cx, w, 1)


m = drawn([(TOP, [(F(3, 4), F(5, 3)), (F(9, 4), F(5, 3)),
                  (F(9, 4), F(10, 3)), (F(3, 4), F(10, 3))])])
l = drawn([(TOP, [(F(3, 2), 2), (F(3, 2), 0)]),
           (BOTTOM, [(F(3, 2), 0), (F(3, 2), 2)])])

assert geometric_intersection(m, l) == 1, geometric_intersection(m, l)
print("torus i(m,l) = 1 ok")

for n in (1, 2, 3, 5):
    tm = dehn_twist(m, l, n)
    assert geometric_intersection(tm, m) == n, (n, geometric_intersection(tm, m))
    assert geometric_intersection(tm, l) == 1
    back = dehn_twist(tm, l, -n)
    assert is_isotopic(back, m)
    print("torus tau_l^%d ok (i with m = %d, round trip ok)" % (n, n))

t1 = dehn_twist(m, l, 1)
t_1 = dehn_twist(m, l, -1)
assert geometric_intersection(t1, t_1) == 2, geometric_intersection(t1, t_1)
print("torus i(tau_l m, tau_l^-1 m) = 2 ok")

# twist of l along m too (symmetry)
for n in (1, 2):
    tl = dehn_twist(l, m, n)
    assert geometric_intersection(tl, l) == n
    assert geometric_intersection(tl, m) == 1
print("torus twists along m ok")

# composite / iterated
mm = dehn_twist(dehn_twist(m, l, 2), l, 3)
assert is_isotopic(mm, dehn_twist(m, l, 5))
print("torus twist composition ok")

# ---------------------------------------------------------------- sphere
_surf6, cx6 = build_surface(0, 6)
index6 = SheetIndex(cx6)
y0 = F(5, 2)


def px(k):
    return 1 + F(k, 7)


def band(i, j, dy=F(1, 5), dx=F(1, 24)):
    pts = [
        (px(i) - dx, y0 - dy),
        (px(j) + dx, y0 - dy),
        (px(j) + dx, y0 + dy),
        (px(i) - dx, y0 + dy),
    ]
    recs = trace_drawn_curve(index6, [(TOP, pts)])
    w = Web.from_crossing_sequences(cx6, [recs])
    tauten(w)
    return MultiCurve.from_taut_web(cx6, w, 1)


c12 = band(1, 2)
c23 = band(2, 3, dy=F(1, 6), dx=F(1, 30))
c34 = band(3, 4)
c14 = band(1, 4, dy=F(1, 4), dx=F(1, 16))
c25 = band(2, 5, dy=F(2, 7), dx=F(1, 18))

assert geometric_intersection(c12, c23) == 2

# law: i(tau_y^n(x), x) = n * i(x, y)^2
for n in (1, 2, 3):
    t = dehn_twist(c23, c12, n)
    got = geometric_intersection(t, c23)
    assert got == 4 * n, (n, got)
    assert geometric_intersection(t, c12) == 2
    back = dehn_twist(t, c12, -n)
    assert is_isotopic(back, c23)
    print("sphere tau_c12^%d c23 ok (i = %d)" % (n, got))

# disjoint twist curve fixes the curve
assert is_isotopic(dehn_twist(c34, c12, 3), c34)
assert is_isotopic(dehn_twist(c14, c23, 2), c14)
print("sphere disjoint twists fix curves ok")

# commutativity of twists along disjoint curves
a = dehn_twist(dehn_twist(c25, c12, 1), c34, 1)
b = dehn_twist(dehn_twist(c25, c34, 1), c12, 1)
assert is_isotopic(a, b)
print("sphere disjoint twist commutativity ok")

# twisting along a parallel copy fixes the class
assert is_isotopic(dehn_twist(c12, c12, 4), c12)
print("sphere self-parallel twist ok")

print("ALL TWIST CHECKS OK")
