"""Debug helper: the (0,6) bands and web validity checker, import-safe."""
from fractions import Fraction as F

from bridgesurf.complexes import build_surface, TOP
from bridgesurf.drawing import SheetIndex, trace_drawn_curve
from bridgesurf.web import Web
from bridgesurf.taut import tauten
from bridgesurf.curves import MultiCurve

import scratch_bf

_surf6, cx6 = build_surface(0, 6)
index6 = SheetIndex(cx6)
y0 = F(5, 2)


def px(k):
    return 1 + F(k, 7)


def band(i, j, dy=F(1, 5), dx=F(1, 24)):
    pts = [(px(i) - dx, y0 - dy), (px(j) + dx, y0 - dy),
           (px(j) + dx, y0 + dy), (px(i) - dx, y0 + dy)]
    recs = trace_drawn_curve(index6, [(TOP, pts)])
    w = Web.from_crossing_sequences(cx6, [recs])
    tauten(w)
    return MultiCurve.from_taut_web(cx6, w, 1)


c12 = band(1, 2)
c23 = band(2, 3, dy=F(1, 6), dx=F(1, 30))
c34 = band(3, 4)
c45 = band(4, 5, dy=F(1, 7), dx=F(1, 40))
c25 = band(2, 5, dy=F(2, 7), dx=F(1, 18))
c14 = band(1, 4, dy=F(1, 4), dx=F(1, 16))


def check_embedded_web(web):
    tris = sorted(set(p.tri for p in web.passages))
    for t in tris:
        base = [0, 0, 0]
        tot = 0
        for i in range(3):
            e = web.cx.tri_edges[t][i]
            base[i] = tot
            tot += web.edge_weight(e)
        chords = []
        for ((sa, pa), (sb, pb)) in scratch_bf.chords_of(web, t):
            chords.append(tuple(sorted((base[sa] + pa, base[sb] + pb))))
        for (a1, b1) in chords:
            for (a2, b2) in chords:
                inside = (a1 < a2 < b1) + (a1 < b2 < b1)
                assert inside != 1, ("crossing in tri", t, (a1, b1), (a2, b2))
