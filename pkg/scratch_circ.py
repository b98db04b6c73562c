"""Validate annulus charts and circling numbers."""
from fractions import Fraction as F

from bridgesurf.complexes import build_surface, TOP
from bridgesurf.drawing import SheetIndex, trace_drawn_curve
from bridgesurf.web import Web
from bridgesurf.taut import tauten
from bridgesurf.curves import MultiCurve, geometric_intersection
from bridgesurf.twist import dehn_twist
from bridgesurf.circling import AnnulusChart, circling_number

_s6, cx6 = build_surface(0, 6)
ix6 = SheetIndex(cx6)
y0 = F(5, 2)


def px(k):
    return 1 + F(k, 7)


def band(i, j, dy=F(1, 5), dx=F(1, 24)):
    pts = [(px(i) - dx, y0 - dy), (px(j) + dx, y0 - dy),
           (px(j) + dx, y0 + dy), (px(i) - dx, y0 + dy)]
    recs = trace_drawn_curve(ix6, [(TOP, pts)])
    w = Web.from_crossing_sequences(cx6, [recs])
    tauten(w)
    return MultiCurve.from_taut_web(cx6, w, 1)


c23 = band(2, 3)
b34 = band(3, 4, dy=F(2, 7), dx=F(1, 18))
c14 = band(1, 4, dy=F(1, 4), dx=F(1, 16))

assert geometric_intersection(b34, c23) == 2

# Disjoint test curve: no strand of c14 lies in the chart around c23.
ch = AnnulusChart(c23, b34, c14)
print("fibers:", len(ch.fibers), "runs:", [(r.length, r.wraps) for r in ch.runs])
assert circling_number(c14, c23, b34) == 0

# Parallel copy: gamma = y itself wraps once.
ch = AnnulusChart(c23, b34, c23)
print("self runs:", [(r.length, r.wraps, r.reversed_dir) for r in ch.runs])
assert circling_number(c23, c23, b34) == 1

# Twisted curves wind |n| times.
for n in (1, 2, -2, 3):
    t = dehn_twist(b34, c23, n)
    ch = AnnulusChart(c23, b34, t)
    nums = ch.circling_numbers()
    print("n=%d circling=%s runs=%s" % (n, max(nums) if nums else 0,
          [(r.length, r.wraps, r.reversed_dir) for r in ch.runs]))
    assert max(nums) >= abs(n), (n, nums)

print("circling checks ok")

# --------------------------------------------- mutual efficient position
from bridgesurf.efficiency import bigon_scan, mutual_efficient_position

assert bigon_scan([c23, b34, c14]) == 0
traces = mutual_efficient_position([c23, b34, dehn_twist(b34, c23, 2)])
assert [t.coordinates() for t in traces] == \
    [c23.coordinates(), b34.coordinates(),
     dehn_twist(b34, c23, 2).coordinates()]
traces = mutual_efficient_position([c23])
assert traces[0].coordinates() == c23.coordinates()
print("efficiency checks ok")
