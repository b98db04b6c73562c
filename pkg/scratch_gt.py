"""Ground truth: hand-drawn spiral representative of tau_c25(c12)."""
from fractions import Fraction as F
from bridgesurf.complexes import build_surface, TOP
from bridgesurf.drawing import SheetIndex, trace_drawn_curve, segment_crossing
from bridgesurf.web import Web
import bridgesurf.taut as taut
from bridgesurf.curves import MultiCurve
import bridgesurf.layout as L
from bridgesurf.twist import dehn_twist

_surf, cx = build_surface(0, 6)
index = SheetIndex(cx)
y0 = F(5, 2)
def px(k): return 1 + F(k, 7)

def band(i, j, dy=F(1,5), dx=F(1,24)):
    pts = [(px(i)-dx, y0-dy), (px(j)+dx, y0-dy), (px(j)+dx, y0+dy), (px(i)-dx, y0+dy)]
    recs = trace_drawn_curve(index, [(TOP, pts)])
    w = Web.from_crossing_sequences(cx, [recs]); taut.tauten(w)
    return MultiCurve.from_taut_web(cx, w, 1), pts

c12, _ = band(1, 2)
c25, c25pts = band(2, 5, dy=F(2,7), dx=F(1,18))
x1 = dehn_twist(c12, c25, 1)

A = px(2) - F(1,18); B = px(5) + F(1,18)
yb = y0 - F(2,7); yt = y0 + F(2,7)
C = px(1) - F(1,24); D = px(2) + F(1,24)
hb1 = y0 - F(1,5); hb2 = hb1 - F(1,90)
ht1 = y0 + F(1,5); ht2 = ht1 + F(1,90)
hm = y0 + F(1,50)   # jog height, strictly between hb1 and ht1, off puncture line
u = F(1,100)

def spiral(way):
    # way=+1: spiral1 wraps ccw (down left edge first); way=-1: mirrored (cw).
    if way == 1:
        return [
            (C, hb1),
            (A-F(35,10)*u, hb1),
            (A-F(35,10)*u, yb-3*u),
            (B+F(25,10)*u, yb-3*u),
            (B+F(25,10)*u, yt+2*u),
            (A-F(15,10)*u, yt+2*u),
            (A-F(15,10)*u, hb2),
            (D, hb2),
            (D, ht1),
            (A-F(125,100)*u, ht1),
            (A-F(125,100)*u, yt+F(175,100)*u),
            (B+F(225,100)*u, yt+F(175,100)*u),
            (B+F(225,100)*u, yb-F(275,100)*u),
            (A-F(325,100)*u, yb-F(275,100)*u),
            (A-F(325,100)*u, hm),
            (A-4*u, hm),
            (A-4*u, ht2),
            (C, ht2),
        ]
    # mirror: reflect the route about y = y0 (swap up/down): wrap cw instead.
    pts = spiral(1)
    return [(x, 2*y0 - y) for (x, y) in pts]

def check_embedded(pts):
    n = len(pts)
    segs = [(pts[i], pts[(i+1) % n]) for i in range(n)]
    bad = []
    for i in range(n):
        for j in range(i+1, n):
            if j == i+1 or (i == 0 and j == n-1):
                continue
            hit = segment_crossing(*segs[i], *segs[j])
            if hit is not None:
                bad.append((i, j, hit))
    return bad

def crossings_with_c25(pts):
    n = len(pts)
    cnt = 0
    m = len(c25pts)
    for i in range(n):
        for j in range(m):
            hit = segment_crossing(pts[i], pts[(i+1) % n],
                                   c25pts[j], c25pts[(j+1) % m])
            if hit is not None:
                cnt += 1
    return cnt

for way in (1, -1):
    pts = spiral(way)
    bad = check_embedded(pts)
    print("way", way, "self-crossings:", bad)
    print("way", way, "crossings with c25:", crossings_with_c25(pts))
    recs = trace_drawn_curve(index, [(TOP, pts)])
    w = Web.from_crossing_sequences(cx, [recs])
    wc = w.copy()
    stripped = taut.tauten(wc)
    same = wc.coordinates() == w.coordinates()
    print("way", way, "stripped:", stripped, "taut-stable:", same,
          "coords==x1:", wc.coordinates() == x1.coordinates())
