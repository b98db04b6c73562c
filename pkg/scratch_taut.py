"""Scratch validation of taut.py on drawn curves."""
from fractions import Fraction as F

from bridgesurf.complexes import build_surface, TOP, BOTTOM
from bridgesurf.drawing import SheetIndex, trace_drawn_curve
from bridgesurf.web import Web
from bridgesurf.taut import tauten, remove_folds, vertex_sweep


def strand_components(web):
    """Count closed strands by slot-level walking (small webs only)."""
    states = set()
    for e, sides in web.side_lists.items():
        for k in (0, 1):
            for end in sides[k]:
                for o in range(end.weight):
                    states.add((e, k, end.pos() + o))

    def step(state):
        e, k, x = state
        for end, lo, hi in web.ends_overlapping(e, k, x, x + 1):
            p = end.passage
            o = x - end.pos()
            far_which = 1 - end.which
            far_pos = p.a_pos if far_which == 0 else p.b_pos
            far_ccw = far_pos + (p.weight - 1 - o)
            side = p.end_side(far_which)
            e2 = web.cx.tri_edges[p.tri][side]
            (t1, i1), _ = web.cx.edge_sides[e2]
            k2 = 0 if (t1, i1) == (p.tri, side) else 1
            W2 = web.edge_weight(e2)
            return (e2, 1 - k2, W2 - 1 - far_ccw)
        raise AssertionError("no end at %r" % (state,))

    orbits = 0
    seen = set()
    for s in states:
        if s in seen:
            continue
        orbits += 1
        cur = s
        while cur not in seen:
            seen.add(cur)
            cur = step(cur)
        assert cur == s, "walk did not close at its start"
    assert orbits % 2 == 0, orbits
    return orbits // 2


def show(tag, web):
    print(tag, "total_weight=", web.total_weight(), "passages=", len(web.passages),
          "components(walk)=", strand_components(web) if web.passages else 0,
          "component_count=", web.component_count)


_surf, cx = build_surface(0, 6)
index = SheetIndex(cx)

# 1. pair curve around marked points 1 and 2 (raw trace has folds)
p1x, p2x = F(8, 7), F(9, 7)
y0 = F(5, 2)
pair = [(TOP, [
    (p1x - F(1, 20), y0 - F(1, 5)),
    (p2x + F(1, 20), y0 - F(1, 5)),
    (p2x + F(1, 20), y0 + F(1, 5)),
    (p1x - F(1, 20), y0 + F(1, 5)),
])]
recs = trace_drawn_curve(index, pair)
print("pair curve crossings:", len(recs))
web = Web.from_crossing_sequences(cx, [recs])
show("raw pair", web)
s = tauten(web)
show("taut pair", web)
print("stripped:", s)
assert web.component_count == 1

# 2. small circle around an unmarked interior grid vertex (1,1) top sheet
circ = [(TOP, [
    (F(3, 4), 1),
    (F(5, 4), F(3, 4)),
    (F(5, 4), F(5, 4)),
    (F(3, 4), F(5, 4)),
])]
# circle around vertex (1,1): diamond with corners in open triangles
circ = [(TOP, [
    (F(5, 8), F(9, 8)),
    (F(7, 8), F(5, 8)),
    (F(11, 8), F(7, 8)),
    (F(9, 8), F(11, 8)),
])]
recs2 = trace_drawn_curve(index, circ)
print("vertex circle crossings:", len(recs2))
web2 = Web.from_crossing_sequences(cx, [recs2])
show("raw circle", web2)
s2 = tauten(web2)
show("taut circle", web2)
assert web2.is_empty(), "vertex circle should be stripped"
assert web2.component_count == 0

# 3. a curve with a deliberate finger (fold) poked across an edge:
# rectangle in the top sheet around vertical edge x=1, y in [0,1],
# with a zigzag notch.
wig = [(TOP, [
    (F(1, 2), F(1, 4)),
    (F(3, 2), F(1, 4)),
    (F(3, 2), F(3, 4)),
    (F(9, 8), F(3, 4)),       # finger: pokes back across x=1? stays right
    (F(9, 8), F(7, 8)),
    (F(3, 2), F(7, 8)),
    (F(3, 2), F(9, 8)),       # up across y=1
    (F(1, 2), F(9, 8)),
])]
recs3 = trace_drawn_curve(index, wig)
print("wiggly crossings:", len(recs3))
web3 = Web.from_crossing_sequences(cx, [recs3])
show("raw wiggly", web3)
s3 = tauten(web3)
show("taut wiggly", web3)

# 4. two-sheet closed curve from before, should already be taut-ish
loop = [
    (TOP, [(F(1, 2), F(3, 2)), (F(1, 2), F(1, 2)), (F(1, 3), F(2, 5)), (0, F(2, 5))]),
    (BOTTOM, [(0, F(2, 5)), (F(1, 3), F(2, 5)), (F(1, 2), F(1, 2)), (F(1, 2), F(3, 2))]),
]
# close it back: make it a genuine closed curve crossing the shared edge twice
loop = [
    (TOP, [(0, F(2, 5)), (F(1, 2), F(2, 5)), (F(1, 2), F(7, 5)), (0, F(7, 5))]),
    (BOTTOM, [(0, F(7, 5)), (F(1, 2), F(7, 5)), (F(1, 2), F(2, 5)), (0, F(2, 5))]),
]
recs4 = trace_drawn_curve(index, loop)
print("loop crossings:", len(recs4))
web4 = Web.from_crossing_sequences(cx, [recs4])
show("raw loop", web4)
s4 = tauten(web4)
show("taut loop", web4)

# 5. pair curve around p1,p2 drawn the long way around the lower fan apex
# c00 = (1,2): hugs 9 of its 11 fan edges, so a vertex push must fire and
# the taut coordinates must equal the tight pair curve's.
loose = [(TOP, [
    (F(9, 7) + F(1, 24), F(13, 5)),   # above-right of p2
    (F(8, 7) - F(1, 24), F(13, 5)),   # above-left of p1
    (F(4, 5), F(12, 5)),              # left cell
    (F(4, 5), F(7, 4)),               # below-left
    (F(13, 10), F(9, 5)),             # below-right
    (F(13, 10), F(23, 10)),           # back inside the marked disk cell
])]
recs5 = trace_drawn_curve(index, loose)
print("loose pair crossings:", len(recs5))
web5 = Web.from_crossing_sequences(cx, [recs5])
show("raw loose", web5)
s5 = tauten(web5)
show("taut loose", web5)
assert web5.coordinates() == web.coordinates(), "loose != tight pair curve"
assert web5.component_count == 1

print("OK")
