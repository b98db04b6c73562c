"""Tautening of strand webs: fold elimination and vertex moves.

A raw web (traced drawing or fresh twist splice) may fail to be taut in two
local ways:

* a *fold*: a bundle entering and leaving a triangle through the same edge
  side.  The bigon it cobounds with the edge is empty (edge interiors carry
  no vertices), so the bundle can be pulled across, cancelling both
  crossings.  Pulling may chain through further passages of the opposite
  triangle; elimination walks whole chains at bundle granularity and
  reconnects the surviving attachments directly.  Chains that close up are
  circles inside the quadrilateral around the edge, hence trivial, and are
  stripped.

* a reducible *corner run*: an innermost band hugging a vertex through more
  than half of its triangle fan.  Pushing the band across the vertex
  strictly reduces total weight.  Runs around marked vertices are never
  pushed (marked points are punctures).  Bands closing up around a vertex
  bound disks with at most one marked point and are stripped as trivial.

``tauten`` drives both to a fixed point.  All rewrites operate on whole
bundles with arbitrary-precision integer widths, so curves produced by deep
twist towers stay cheap to reduce.
"""

from collections import deque

from .web import End, Passage


# ----------------------------------------------------------------------
# low-level editing helpers


def _reposition_edge(web, e):
    sides = web.side_lists.get(e)
    if sides is None:
        return
    for k in (0, 1):
        run = 0
        for end in sides[k]:
            end.set_pos(run)
            run += end.weight
    if not sides[0] and not sides[1]:
        del web.side_lists[e]


def _rebuild_passages(web):
    seen = set()
    plist = []
    for sides in web.side_lists.values():
        for k in (0, 1):
            for end in sides[k]:
                if id(end.passage) not in seen:
                    seen.add(id(end.passage))
                    plist.append(end.passage)
    web.passages = plist


def _k_of(web, e, t, i):
    (t1, i1), (_t2, _i2) = web.cx.edge_sides[e]
    return 0 if (t1, i1) == (t, i) else 1


def _end_location(web, end):
    """(edge, side index k) on which this end sits."""
    p = end.passage
    side = p.end_side(end.which)
    e = web.cx.tri_edges[p.tri][side]
    return e, _k_of(web, e, p.tri, side)


def _find_end(lst, p, which):
    for i, end in enumerate(lst):
        if end.passage is p and end.which == which:
            return i
    raise AssertionError("end not found in its order list")


def _split_passage(web, p, a_offsets):
    """Split passage p at the given internal a-end offsets.

    Returns the sub-passages in ascending a-offset order; order lists and
    positions are updated in place.
    """
    cuts = sorted(set(a_offsets))
    if not cuts:
        return [p]
    assert all(0 < c < p.weight for c in cuts)
    bounds = [0] + cuts + [p.weight]
    subs = []
    for u, v in zip(bounds, bounds[1:]):
        q = Passage(p.tri, p.side_a, p.side_b, v - u, p.comp)
        q.a_pos = p.a_pos + u
        q.b_pos = p.b_pos + (p.weight - v)
        subs.append(q)
    for which, new in ((0, [End(q, 0) for q in subs]),
                       (1, [End(q, 1) for q in reversed(subs)])):
        e, k = _end_location(web, End(p, which))
        lst = web.side_lists[e][k]
        idx = _find_end(lst, p, which)
        lst[idx:idx + 1] = new
    return subs


def _cut_end_at(web, end, ccw_off):
    """Arrange a sub-bundle boundary at ccw offset ``ccw_off`` of ``end``."""
    if not 0 < ccw_off < end.weight:
        return False
    a_off = ccw_off if end.which == 0 else end.weight - ccw_off
    _split_passage(web, end.passage, [a_off])
    return True


# ----------------------------------------------------------------------
# fold elimination


def remove_folds(web):
    """Eliminate all folds; returns the number of trivial circles stripped."""
    circles = 0
    work = deque(p for p in web.passages if p.side_a == p.side_b)
    alive = {id(p) for p in web.passages}
    while work:
        p = work.popleft()
        if id(p) not in alive:
            continue
        circles += _eliminate_fold(web, p, work, alive)
    web.component_count -= circles
    return circles


def _eliminate_fold(web, p, work, alive):
    cx = web.cx
    e = cx.tri_edges[p.tri][p.side_a]
    k = _k_of(web, e, p.tri, p.side_a)
    w = p.weight
    W = web.edge_weight(e)
    a0, b0 = min(p.a_pos, p.b_pos), max(p.a_pos, p.b_pos)
    assert a0 + w <= b0, "overlapping fold intervals"

    # The fold's crossings seen from the opposite side (1-k ccw frame).
    ia = (W - a0 - w, W - a0)
    ib = (W - b0 - w, W - b0)

    def in_cluster(x):
        return ia[0] <= x < ia[1] or ib[0] <= x < ib[1]

    def pi(x):
        """Partner slot: across e, through the fold, back across e.

        The fold pairs its two intervals by the reflection fixing
        ``a_pos + b_pos + w - 1`` (reversed matching within the bundle),
        which reads the same in the opposite side's frame.
        """
        assert in_cluster(x)
        return ia[0] + ib[1] - 1 - x

    # Refine opposite ends until pi maps ends exactly onto ends.  Two
    # passes suffice after boundary alignment: pi is an involution, so the
    # image of an existing boundary is itself a boundary afterwards.
    while True:
        lst = web.side_lists[e][1 - k]
        cut = None
        for bound in (ia[0], ia[1], ib[0], ib[1]):
            for end in lst:
                s = end.pos()
                if s < bound < s + end.weight:
                    cut = (end, bound - s)
                    break
            if cut:
                break
        if cut is None:
            for end in lst:
                s = end.pos()
                if not in_cluster(s):
                    continue
                img_lo = pi(s + end.weight - 1)
                for other in lst:
                    s2 = other.pos()
                    if img_lo < s2 < img_lo + end.weight:
                        cut = (end, end.weight - (s2 - img_lo))
                        break
                if cut:
                    break
        if cut is None:
            break
        did = _cut_end_at(web, cut[0], cut[1])
        assert did

    # Atomic cluster ends and their partner map.
    lst = web.side_lists[e][1 - k]
    at = {}
    for end in lst:
        if in_cluster(end.pos()):
            assert in_cluster(end.pos() + end.weight - 1)
            at[end.pos()] = end

    def partner(end):
        other = at[pi(end.pos() + end.weight - 1)]
        assert other.weight == end.weight
        return other

    def through(end):
        """The other end of this end's passage, with its location."""
        far = End(end.passage, 1 - end.which)
        fe, fk = _end_location(web, far)
        return far, fe, fk

    def cluster_end(far, fe, fk):
        """The stored cluster End matching ``far``, or None."""
        if fe == e and fk == 1 - k:
            hit = at.get(far.pos())
            if hit is not None and hit.passage is far.passage:
                return hit
        return None

    # Walk chains from entries; leftovers are circles.
    visited = set()
    joins = []
    circles = 0
    for E in list(at.values()):
        if id(E) in visited:
            continue
        far, fe, fk = through(E)
        if cluster_end(far, fe, fk) is not None:
            continue  # interior of some chain or circle
        entry = (far, fe, fk, E.passage)
        visited.add(id(E))
        cur = E
        while True:
            par = partner(cur)
            visited.add(id(par))
            far, fe, fk = through(par)
            nxt = cluster_end(far, fe, fk)
            if nxt is None:
                joins.append((entry, (far, fe, fk, par.passage)))
                break
            visited.add(id(nxt))
            cur = nxt
    for E in list(at.values()):
        if id(E) in visited:
            continue
        width = E.weight
        cur = E
        while id(cur) not in visited:
            visited.add(id(cur))
            par = partner(cur)
            visited.add(id(par))
            far, fe, fk = through(par)
            nxt = cluster_end(far, fe, fk)
            assert nxt is not None, "open chain found twice"
            assert nxt.weight == width
            visited.add(id(nxt))
            cur = nxt
        circles += width

    # Perform the edits: drop the fold and every cluster crossing, then
    # join each chain's surviving attachments with a direct chord.
    lst_k = web.side_lists[e][k]
    for which in (0, 1):
        del lst_k[_find_end(lst_k, p, which)]
    alive.discard(id(p))
    keep = []
    for end in web.side_lists[e][1 - k]:
        if end.pos() in at:
            alive.discard(id(end.passage))
        else:
            keep.append(end)
    web.side_lists[e][1 - k] = keep
    for (far1, f1, k1, p1), (far2, f2, k2, p2) in joins:
        assert p1.tri == p2.tri, "fold chain left its quadrilateral"
        q = Passage(p1.tri, p1.end_side(far1.which), p2.end_side(far2.which),
                    far1.weight, p1.comp)
        lst1 = web.side_lists[f1][k1]
        lst1[_find_end(lst1, p1, far1.which)] = End(q, 0)
        q.a_pos = far1.pos()
        lst2 = web.side_lists[f2][k2]
        lst2[_find_end(lst2, p2, far2.which)] = End(q, 1)
        q.b_pos = far2.pos()
        alive.discard(id(p1))
        alive.discard(id(p2))
        alive.add(id(q))
        if q.side_a == q.side_b:
            work.append(q)
    _reposition_edge(web, e)
    _rebuild_passages(web)
    return circles


# ----------------------------------------------------------------------
# vertex moves


def _vertex_fan(cx, v):
    """Fan triangles (t, corner) and fan edges around v, in ccw order.

    Fan edge ``j`` is side ``corner`` of fan triangle ``j``; crossing a
    triangle's other fan edge (side corner+2) reaches triangle ``j+1``.
    """
    star = cx.vertex_star(v)
    assert star
    t0, c0 = star[0]
    fan = [(t0, c0)]
    while True:
        t, c = fan[-1]
        g = cx.tri_edges[t][(c + 2) % 3]
        t2, i2 = cx.other_side(g, t)
        assert cx.triangles[t2][i2] == v
        if (t2, i2) == fan[0]:
            break
        fan.append((t2, i2))
    assert len(fan) == len(star), "vertex star is not a single fan"
    edges = [cx.tri_edges[t][c] for t, c in fan]
    return fan, edges


def _depth_frame(web, t, i):
    """(edge, side index) for side i of t.  Side i starts at corner vertex
    i, so its ccw coordinate equals the distance-from-vertex depth."""
    e = web.cx.tri_edges[t][i]
    return e, _k_of(web, e, t, i)


def _hugs(p, c):
    return {p.side_a, p.side_b} == {c, (c + 2) % 3}


class _Run:
    """An innermost band hugging vertex v, found by a fan walk."""

    def __init__(self):
        self.width = None
        self.closed = False      # band circles v
        self.wind = False        # band spirals past a full turn
        self.exit = None         # (fan index, End, offset) of the exit chord
        self.hug_slices = []     # (fan index, passage, End, offset) per chord


def _walk_innermost(web, fan, edges, j0):
    """Follow the band containing the innermost strand crossing fan edge j0
    forward (counterclockwise) through the fan."""
    d = len(fan)
    if web.edge_weight(edges[j0]) == 0:
        return None
    run = _Run()
    width = None
    j = j0
    while True:
        t, c = fan[j]
        e, k = _depth_frame(web, t, c)
        end = web.side_lists[e][k][0]  # depth 0 == ccw 0 in this frame
        width = end.weight if width is None else min(width, end.weight)
        p = end.passage
        if not _hugs(p, c):
            run.exit = (j, end, 0)
            break
        run.hug_slices.append((j, p, end, 0))
        # Cross the triangle: the innermost strand (end offset 0) exits at
        # far offset weight-1; the far side (c+2) runs toward v, so its
        # depth there is  edge weight - 1 - far ccw.
        far = End(p, 1 - end.which)
        e2, _k2 = _end_location(web, far)
        depth2 = web.edge_weight(e2) - 1 - (far.pos() + p.weight - 1)
        jn = (j + 1) % d
        tn, cn = fan[jn]
        assert web.cx.tri_edges[tn][cn] == e2, "fan walk left the fan"
        if jn == j0:
            if depth2 == 0:
                run.closed = True
            else:
                run.wind = True
            break
        # An innermost hugging band stays innermost in a fold-free web:
        # anything nearer v ahead would have to hug inside this chord.
        assert depth2 == 0, "innermost band not innermost ahead"
        j = jn
    run.width = width
    return run


def _backward_extent(web, fan, edges, j0, width):
    """Extend the band backward (clockwise) from fan edge j0.

    Returns (hug slices, narrowed width, entry) where entry is the
    (fan index, End, offset) of the non-hugging entry chord, or None when
    the walk wrapped all the way around.
    """
    d = len(fan)
    j = j0
    chain = []
    while True:
        jt = (j - 1) % d
        t, c = fan[jt]
        e = edges[j]
        k = _k_of(web, e, t, (c + 2) % 3)
        end = web.side_lists[e][k][-1]  # depth 0 == highest ccw here
        off = end.weight - 1
        width = min(width, end.weight)
        p = end.passage
        if not _hugs(p, c):
            return chain, width, (jt, end, off)
        chain.append((jt, p, end, off))
        j = jt
        if j == j0:
            return chain, width, None


def vertex_sweep(web):
    """One full sweep of vertex reductions; returns (pushes, circles)."""
    cx = web.cx
    pushes = 0
    circles = 0
    again = True
    while again:
        again = False
        for v in range(len(cx.vertex_coords)):
            res = _reduce_at_vertex(web, v)
            if res is None:
                continue
            kind, n = res
            if kind == "push":
                pushes += n
            else:
                circles += n
            again = True
    web.component_count -= circles
    return pushes, circles


def _reduce_at_vertex(web, v):
    """Attempt one reduction at v; returns ('push', 1), ('circle', m), or
    None when nothing reduces here."""
    cx = web.cx
    marked = v in cx.marked_vertices
    fan, edges = _vertex_fan(cx, v)
    d = len(fan)
    for j0 in range(d):
        if web.edge_weight(edges[j0]) == 0:
            continue
        run = _walk_innermost(web, fan, edges, j0)
        if run is None:
            continue
        if run.closed:
            m = _strip_vertex_circles(web, v, fan, edges, run)
            return ("circle", m)
        if run.wind:
            # spirals past a full turn never arise from the constructions
            # in this package; leave them in place rather than guess
            continue
        if not run.hug_slices or marked:
            continue
        bwd_chain, width, entry = _backward_extent(
            web, fan, edges, j0, run.width)
        if entry is None:
            continue
        r = len(run.hug_slices) + len(bwd_chain) + 1
        if 2 * r <= d:
            continue
        _push_band(web, v, fan, edges, j0, run, bwd_chain, entry, width)
        return ("push", 1)
    return None


def _strip_vertex_circles(web, v, fan, edges, run):
    """Remove the closed innermost band circling v; returns circle count."""
    width = run.width
    touched = set()
    for j, p, end, off in run.hug_slices:
        subs = _split_passage(web, p, _slice_offsets(end, off, width))
        target = _sub_for(subs, end, off, width)
        _delete_passage(web, target, touched)
    for e in touched:
        _reposition_edge(web, e)
    _rebuild_passages(web)
    return width


def _slice_offsets(end, off, width):
    """a-end cut offsets isolating ccw offsets [off, off+width) of end."""
    w = end.passage.weight
    if end.which == 0:
        cuts = [off, off + width]
    else:
        cuts = [w - (off + width), w - off]
    return [c for c in cuts if 0 < c < w]


def _sub_for(subs, end, off, width):
    """The sub-passage holding ccw offsets [off, off+width) of the old end."""
    w_old = sum(s.weight for s in subs)
    if end.which == 0:
        a_lo = off
    else:
        a_lo = w_old - (off + width)
    run = 0
    for s in subs:
        if run == a_lo:
            assert s.weight == width
            return s
        run += s.weight
    raise AssertionError("slice boundary mismatch")


def _delete_passage(web, p, touched):
    for which in (0, 1):
        e, k = _end_location(web, End(p, which))
        lst = web.side_lists[e][k]
        del lst[_find_end(lst, p, which)]
        touched.add(e)


def _push_band(web, v, fan, edges, j0, run, bwd_chain, entry, width):
    """Move the innermost band across v (strict weight reduction)."""
    cx = web.cx
    d = len(fan)
    m = width

    # Slice every involved passage down to the band width, re-resolving
    # ends as splits go (splits replace End objects).
    def isolate(j, p, end, off):
        # re-locate the current end covering the original ccw interval
        e, k = _end_location(web, end)
        lo = end.pos() + off
        cur = None
        for cand in web.side_lists[e][k]:
            s = cand.pos()
            if s <= lo < s + cand.weight and cand.passage.tri == p.tri:
                cur = cand
                break
        assert cur is not None
        subs = _split_passage(web, cur.passage,
                              _slice_offsets(cur, lo - cur.pos(), m))
        return _sub_for(subs, cur, lo - cur.pos(), m)

    # Forward hug slices follow depth [0, m) on their entering edges.
    hug_parts = []
    for j, p, end, off in run.hug_slices:
        hug_parts.append((j, isolate(j, p, end, off)))
    for j, p, end, off in bwd_chain:
        # backward slices: depth [0, m) corresponds to ccw offsets ending
        # at ``off`` (the depth-0 strand), i.e. [off - m + 1, off + 1)
        hug_parts.append((j, isolate(j, p, end, off - m + 1)))
    jx, x_end, x_off = run.exit
    x_part = isolate(jx, x_end.passage, x_end, x_off)
    je, e_end, e_off = entry
    e_part = isolate(je, e_end.passage, e_end, e_off - m + 1)

    touched = set()
    # Delete the band.
    for _j, part in hug_parts:
        _delete_passage(web, part, touched)

    # Replace entry and exit chords.  The entry slice sits in triangle
    # fan[je] connecting the outer side (c+1) to fan edge je+1 (side c+2);
    # it becomes a chord from the same outer slots to fan edge je (side c).
    # Symmetrically for the exit slice in triangle fan[jx].
    new_folds = _reroute_terminal(web, fan, edges, je, e_part, at_exit=False,
                                  touched=touched, width=m)
    _reroute_terminal(web, fan, edges, jx, x_part, at_exit=True,
                      touched=touched, width=m)

    # New hugging chords through the complementary fan triangles: those are
    # triangles je-1, je-2, ..., jx+1 (cyclically backward from the entry
    # triangle to the exit triangle).
    j = (je - 1) % d
    while j != jx:
        t, c = fan[j]
        q = Passage(t, c, (c + 2) % 3, m, comp=e_part.comp)
        # side c end: ccw [0, m) on edge j (away-from-v frame): list front.
        e1, k1 = _depth_frame(web, t, c)
        web.side_lists.setdefault(e1, [[], []])[k1].insert(0, End(q, 0))
        q.a_pos = 0
        # side c+2 end: toward-v frame: list back.
        e2 = cx.tri_edges[t][(c + 2) % 3]
        k2 = _k_of(web, e2, t, (c + 2) % 3)
        web.side_lists.setdefault(e2, [[], []])[k2].append(End(q, 1))
        q.b_pos = None  # fixed by repositioning
        touched.add(e1)
        touched.add(e2)
        j = (j - 1) % d

    for e in touched:
        _reposition_edge(web, e)
    _rebuild_passages(web)
    web._check()


def _reroute_terminal(web, fan, edges, j, part, at_exit, touched, width):
    """Replace a terminal (entry/exit) chord slice of a pushed band.

    The old slice connects the outer side (c+1) of fan triangle j to one
    fan edge; the new chord keeps the outer attachment and lands on the
    triangle's *other* fan edge at the innermost slots.
    """
    cx = web.cx
    t, c = fan[j]
    outer = (c + 1) % 3
    old_sides = {part.side_a, part.side_b}
    assert outer in old_sides, "terminal chord does not reach the outer side"
    old_fan_side = (old_sides - {outer}).pop() if len(old_sides) == 2 else outer
    # entry chords attached to side c+2 move to side c; exit chords the
    # reverse.
    new_fan_side = c if old_fan_side == (c + 2) % 3 else (c + 2) % 3
    q = Passage(t, outer, new_fan_side, width, comp=part.comp)
    # Outer attachment: take the old slice's outer slots.
    e_out = cx.tri_edges[t][outer]
    k_out = _k_of(web, e_out, t, outer)
    lst = web.side_lists[e_out][k_out]
    old_which = 0 if part.side_a == outer else 1
    idx = _find_end(lst, part, old_which)
    lst[idx] = End(q, 0)
    q.a_pos = part.a_pos if old_which == 0 else part.b_pos
    # Remove the old fan-edge end.
    e_fan_old = cx.tri_edges[t][old_fan_side]
    k_fan_old = _k_of(web, e_fan_old, t, old_fan_side)
    lst2 = web.side_lists[e_fan_old][k_fan_old]
    del lst2[_find_end(lst2, part, 1 - old_which)]
    touched.add(e_out)
    touched.add(e_fan_old)
    # New fan-edge end at the innermost slots.
    e_fan = cx.tri_edges[t][new_fan_side]
    k_fan = _k_of(web, e_fan, t, new_fan_side)
    if new_fan_side == c:
        web.side_lists.setdefault(e_fan, [[], []])[k_fan].insert(0, End(q, 1))
    else:
        web.side_lists.setdefault(e_fan, [[], []])[k_fan].append(End(q, 1))
    q.b_pos = None
    touched.add(e_fan)
    return q


# ----------------------------------------------------------------------
# driver


def tauten(web):
    """Reduce the web to its taut position; returns circles stripped."""
    stripped = 0
    while True:
        c1 = remove_folds(web)
        p2, c2 = vertex_sweep(web)
        stripped += c1 + c2
        if c1 == 0 and p2 == 0 and c2 == 0:
            break
    web._check()
    return stripped
