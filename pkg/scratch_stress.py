"""Stress twists on spiraling inputs; validate webs and mutual positions."""
import random
from fractions import Fraction as F

from bridgesurf.complexes import build_surface, TOP, BOTTOM
from bridgesurf.drawing import SheetIndex, trace_drawn_curve
from bridgesurf.web import Web
from bridgesurf.taut import tauten
from bridgesurf.curves import MultiCurve, geometric_intersection, is_isotopic
from bridgesurf.cuts import CutItinerary
from bridgesurf.twist import dehn_twist

import scratch_bf


def check_embedded_web(web):
    """Per triangle, strand chords must form a non-crossing matching."""
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


def check_itinerary_vs_bruteforce(x, y):
    """The itinerary's per-edge interleaving must be a brute-force minimum."""
    it = CutItinerary(x.web, y.web)
    assert it.K == geometric_intersection(x, y)
    from math import comb
    space = 1
    for e in set(x.web.side_lists) & set(y.web.side_lists):
        space *= comb(x.web.edge_weight(e) + y.web.edge_weight(e),
                      y.web.edge_weight(e))
    if space <= 200_000:
        best, _sols = scratch_bf.solve(x.web, y.web)
        assert best == it.K, (best, it.K)
    # realize the itinerary as explicit per-edge interleavings and recount
    inter = {}
    for e in set(x.web.side_lists) & set(y.web.side_lists):
        cuts = it.cut_values(e)
        wx = x.web.edge_weight(e)
        seq = []
        j = 0
        for p in range(wx + 1):
            while j < len(cuts) and cuts[j] == p:
                seq.append('y')
                j += 1
            if p < wx:
                seq.append('x')
        assert j == len(cuts)
        inter[e] = tuple(seq)
    total = scratch_bf.recount(x.web, y.web, inter)
    assert total == it.K, (total, it.K)


# ---------------------------------------------------------------- (0,6)
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

# The spiral reproducer: twisting a curve that already spirals around the
# twisting curve (this is where corridor-style order records break down).
x1 = dehn_twist(c12, c25, 1)
check_embedded_web(x1.web)
check_itinerary_vs_bruteforce(x1, c25)
x2 = dehn_twist(x1, c25, 1)
check_embedded_web(x2.web)
assert is_isotopic(x2, dehn_twist(c12, c25, 2))
assert is_isotopic(dehn_twist(x2, c25, -2), c12)
i0 = geometric_intersection(c12, c25)
assert geometric_intersection(x2, c12) == 2 * i0 * i0, \
    geometric_intersection(x2, c12)
print("sphere spiral reproducer ok (i(t^2 c12, c12) = %d)" % (2 * i0 * i0))

for nn in (-3, -1, 1, 2, 3):
    t = dehn_twist(c12, c25, nn)
    check_embedded_web(t.web)
    check_itinerary_vs_bruteforce(t, c25)
    assert geometric_intersection(t, c12) == abs(nn) * i0 * i0
    assert is_isotopic(dehn_twist(t, c25, -nn), c12)
print("sphere tau_c25 powers ok")

# ---------------------------------------------------------------- words
rng = random.Random(7)
twisters = [c12, c23, c34, c45, c25, c14]
for trial in range(30):
    start = twisters[rng.randrange(len(twisters))]
    cur = start
    word = []
    for _ in range(rng.randrange(2, 5)):
        word.append((rng.randrange(len(twisters)),
                     rng.choice([-2, -1, 1, 2])))
    for (ti, nn) in word:
        cur = dehn_twist(cur, twisters[ti], nn)
        check_embedded_web(cur.web)
    back = cur
    for (ti, nn) in reversed(word):
        back = dehn_twist(back, twisters[ti], -nn)
        check_embedded_web(back.web)
    assert is_isotopic(back, start), ("word round trip failed", trial, word)
    # twist law against the last twister, on the possibly heavy curve
    ti, nn = word[-1]
    y = twisters[ti]
    mid = dehn_twist(cur, y, -nn)
    iy = geometric_intersection(mid, y)
    assert geometric_intersection(cur, mid) == abs(nn) * iy * iy, \
        ("twist law failed", trial, word)
print("sphere random word round trips ok (30 trials)")

# ---------------------------------------------------------------- genus 2
_surf2, cx2 = build_surface(2, 0)
index2 = SheetIndex(cx2)


def drawn2(pieces):
    recs = trace_drawn_curve(index2, pieces)
    w = Web.from_crossing_sequences(cx2, [recs])
    tauten(w)
    return MultiCurve.from_taut_web(cx2, w, 1)


a1 = drawn2([(TOP, [(F(3, 7), F(16, 11)), (F(17, 7), F(16, 11)),
                    (F(17, 7), F(39, 11)), (F(3, 7), F(39, 11))])])
a2 = drawn2([(TOP, [(F(19, 7), F(19, 11)), (F(31, 7), F(19, 11)),
                    (F(31, 7), F(36, 11)), (F(19, 7), F(36, 11))])])
b1 = drawn2([(TOP, [(F(3, 2), 2), (F(3, 2), 0)]),
             (BOTTOM, [(F(3, 2), 0), (F(3, 2), 2)])])
b2 = drawn2([(TOP, [(F(7, 2), 2), (F(7, 2), 0)]),
             (BOTTOM, [(F(7, 2), 0), (F(7, 2), 2)])])
ch = drawn2([(TOP, [(2, F(5, 2)), (3, F(5, 2))]),
             (BOTTOM, [(3, F(5, 2)), (2, F(5, 2))])])

assert geometric_intersection(a1, b1) == 1
assert geometric_intersection(a2, b2) == 1
assert geometric_intersection(a1, b2) == 0
assert geometric_intersection(ch, a1) == 1
assert geometric_intersection(ch, a2) == 1
assert geometric_intersection(ch, b1) == 0
print("genus-2 chain intersections ok")

rng = random.Random(11)
twisters2 = [a1, b1, a2, b2, ch]
for trial in range(20):
    start = twisters2[rng.randrange(len(twisters2))]
    cur = start
    word = []
    for _ in range(rng.randrange(2, 5)):
        word.append((rng.randrange(len(twisters2)),
                     rng.choice([-2, -1, 1, 2])))
    for (ti, nn) in word:
        cur = dehn_twist(cur, twisters2[ti], nn)
        check_embedded_web(cur.web)
    back = cur
    for (ti, nn) in reversed(word):
        back = dehn_twist(back, twisters2[ti], -nn)
        check_embedded_web(back.web)
    assert is_isotopic(back, start), ("word round trip failed", trial, word)
    ti, nn = word[-1]
    y = twisters2[ti]
    mid = dehn_twist(cur, y, -nn)
    iy = geometric_intersection(mid, y)
    assert geometric_intersection(cur, mid) == abs(nn) * iy * iy, \
        ("twist law failed", trial, word)
print("genus-2 random word round trips ok (20 trials)")
