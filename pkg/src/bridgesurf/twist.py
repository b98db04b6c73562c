"""Dehn twists on multicurves, spliced at bundle granularity.

The twist :math:`\\tau_y^n(x)` is built geometrically.  Fix a thin annulus
around the twisting curve ``y``.  Outside the annulus the curve ``x`` is
untouched; each of the ``K`` points of ``x ∩ y`` becomes a spiral winding
``n`` full times around the annulus before crossing over.  Between any two
consecutive crossing points along ``y``, exactly ``n·K`` spiral strands run
parallel to ``y`` (each of the ``K`` spirals passes ``n`` times), so the
twisted curve decomposes into a *band* of constant width ``W = nK`` over
``y`` plus rerouted stubs of ``x``, and the whole splice is local to the
crossing events:

* at an event of multiplicity ``m`` (a bundle of ``m`` parallel strands of
  ``x`` crossing one strand of ``y``), the stub on ``y``'s left joins the
  leftmost ``m`` band levels on one winding side of the event, the stub on
  the right joins the rightmost ``m`` levels on the other, and the
  remaining ``W - m`` levels pass through with an index shift of ``m``
  toward the right;
* within each block the strand whose crossing point sits furthest along
  the winding direction takes the leftmost level.

Level bookkeeping needs a coorientation of ``y``: a reference orientation
is chosen by walking ``y``'s strand (the twisting curve must be small
enough to walk), the left of travel is the descending direction of each
entered side's ccw frame, and a plain passage automatically transports
this convention, so band segments need no global data.  The winding
direction itself is orientation-free: strands of a left twist veer left,
which picks at every crossing the same direction around the annulus;
positive exponents are left twists.

Crossing events come from the :class:`~bridgesurf.cuts.CutItinerary` of
the pair, which localizes every crossing at an exact slot of ``y`` and an
exact sub-bundle of ``x`` inside one triangle, with the entered-side stub
of ``x`` lying on ``y``'s left exactly when the crossed chords sit below
``y``'s entry gap.  Ordering several events along one ``x`` chord is a
nesting argument: events entering through a chord end's own side cross
nearer that end than any event entering through the other, outermost
first.

The splice emits weighted passages whose transverse positions on every
edge come from the itinerary's cut tables (each ``y`` slot expands to
``W`` levels in place), so the cost is polynomial in the numbers of
bundles of ``x`` even when its weights are astronomically large.
"""

from .curves import MultiCurve, normalize
from .cuts import CutItinerary
from .strands import DEFAULT_SLOT_BUDGET, orientation_orbits
from .taut import tauten
from .web import End, Passage, Web


class _Event:
    """One x-bundle crossing one y-strand, localized at a triangle."""

    __slots__ = ("u", "m", "case_a", "px", "a_family", "a_iv", "comb",
                 "pieces")

    def __init__(self, u, m, case_a, px, a_family, a_iv, comb):
        self.u = u                # chord index along the y cycle
        self.m = m                # multiplicity (x sub-bundle width)
        self.case_a = case_a      # y leaves through its entered side + 1
        self.px = px              # the crossed x passage
        self.a_family = a_family  # x enters through its passage's a side
        self.a_iv = a_iv          # crossed interval in the passage a frame
        self.comb = comb          # y's combined entered-frame position
        self.pieces = []          # (p_lo, p_hi, plus, e_plus, minus, e_minus)


class _Wire:
    """A parallel bundle inside one triangle, one shared coordinate.

    Both ends address strands by the same coordinate ``0..width-1``.  An
    end either anchors on an edge side or links into other wires via
    interval bijections.
    """

    __slots__ = ("width", "tri", "anchor", "links")

    def __init__(self, width, tri):
        self.width = width
        self.tri = tri
        self.anchor = [None, None]
        self.links = [[], []]


def _join(w1, e1, lo1, hi1, w2, e2, lo2, hi2, flip):
    assert hi1 - lo1 == hi2 - lo2 > 0
    w1.links[e1].append((lo1, hi1, w2, e2, lo2, hi2, flip))
    w2.links[e2].append((lo2, hi2, w1, e1, lo1, hi1, flip))


def twist_one(x_web, y_web, n, sign=1, budget=DEFAULT_SLOT_BUDGET):
    """The image of ``x_web`` under ``n`` twists along connected ``y_web``.

    ``sign`` +1 gives left twists (the positive convention), -1 right
    twists.  Returns a taut web; the twisting curve must be a single
    component small enough to walk at strand level.
    """
    cx = x_web.cx
    assert y_web.cx is cx
    assert n >= 1 and sign in (1, -1)
    it = CutItinerary(x_web, y_web, budget)
    K = it.K
    if K == 0:
        return x_web.copy()
    W = n * K
    wxf = x_web.edge_weight
    wyf = y_web.edge_weight
    cycle = it.cycle
    L = len(cycle)

    # ------------------------------------------------------------------
    # crossing events along the oriented y cycle

    events = []
    chord_events = {}
    for u, step in enumerate(it.steps):
        for end, lo, hi in step.crossed:
            px = end.passage
            w = px.weight
            a_family = end.which == 0
            if a_family:
                a_iv = (lo - px.a_pos, hi - px.a_pos)
            else:
                ob = (lo - px.b_pos, hi - px.b_pos)
                a_iv = (w - ob[1], w - ob[0])
            assert 0 <= a_iv[0] < a_iv[1] <= w
            ev = _Event(u, hi - lo, step.case_a, px, a_family, a_iv,
                        step.q + step.slot[2])
            events.append(ev)
            chord_events.setdefault(u, []).append(ev)
    assert sum(ev.m for ev in events) == K

    # ------------------------------------------------------------------
    # edge expansion maps: each y slot widens to W levels in place

    def new_weight(e):
        return wxf(e) + W * wyf(e)

    def new_x_pos(e, k, p):
        p0 = p if k == 0 else wxf(e) - 1 - p
        n0 = p0 + W * it.y_below(e, p0)
        return n0 if k == 0 else new_weight(e) - 1 - n0

    def band_base(e, k, q0):
        b0 = it.slot_cut(e, q0) + W * q0
        return b0 if k == 0 else new_weight(e) - b0 - W

    # ------------------------------------------------------------------
    # band segments along the y cycle

    wires = []

    def mk(width, tri):
        w = _Wire(width, tri)
        wires.append(w)
        return w

    segs = {}
    for u in range(L):
        e, k, pos = cycle[u]
        tri = cx.edge_sides[e][k][0]
        r = len(chord_events.get(u, ()))
        ws = [mk(W, tri) for _ in range(r + 1)]
        segs[u] = ws
        q0 = pos if k == 0 else wyf(e) - 1 - pos
        ws[0].anchor[0] = ("band", e, k, band_base(e, k, q0), 1)
        e2, k2, pos2 = cycle[(u + 1) % L]
        assert cx.edge_sides[e2][1 - k2][0] == tri
        q02 = pos2 if k2 == 0 else wyf(e2) - 1 - pos2
        ka = 1 - k2
        ws[-1].anchor[1] = ("band", e2, ka, band_base(e2, ka, q02) + W - 1, -1)

    # ------------------------------------------------------------------
    # x itineraries: stub wires between consecutive events along x

    by_px = {}
    for ev in events:
        by_px.setdefault(id(ev.px), (ev.px, []))[1].append(ev)
    for px in x_web.passages:
        by_px.setdefault(id(px), (px, []))

    def from_end_order(grp):
        """Covering events ordered from their own chord end outward."""
        for ev in grp[1:]:
            assert ev.case_a == grp[0].case_a
        return sorted(grp, key=lambda ev: ev.comb,
                      reverse=bool(grp) and grp[0].case_a)

    for px, evs in by_px.values():
        w = px.weight
        tri = px.tri
        ea = cx.tri_edges[tri][px.side_a]
        ka = x_web.side_index(ea, tri, px.side_a)
        eb = cx.tri_edges[tri][px.side_b]
        kb = x_web.side_index(eb, tri, px.side_b)
        cutsx = sorted({0, w} | {t for ev in evs for t in ev.a_iv})
        for t0, t1 in zip(cutsx, cutsx[1:]):
            cov = [ev for ev in evs if ev.a_iv[0] <= t0 and t1 <= ev.a_iv[1]]
            cov_a = from_end_order([ev for ev in cov if ev.a_family])
            cov_b = from_end_order([ev for ev in cov if not ev.a_family])
            seq = cov_a + list(reversed(cov_b))
            stubs = [mk(t1 - t0, tri) for _ in range(len(seq) + 1)]
            stubs[0].anchor[0] = ("x", ea, ka, px.a_pos + t0, 1)
            stubs[-1].anchor[1] = ("x", eb, kb, px.b_pos + (w - 1 - t0), -1)
            for i, ev in enumerate(seq):
                aw, e_aw, bw, e_bw = stubs[i], 1, stubs[i + 1], 0
                if ev.a_family:
                    ent, e_ent, far, e_far = aw, e_aw, bw, e_bw
                else:
                    ent, e_ent, far, e_far = bw, e_bw, aw, e_aw
                # The entered-side stub lies on y's left exactly when the
                # crossed chords sit below y's entry gap (case B).
                if ev.case_a:
                    plus, e_plus, minus, e_minus = far, e_far, ent, e_ent
                else:
                    plus, e_plus, minus, e_minus = ent, e_ent, far, e_far
                ev.pieces.append((t0 - ev.a_iv[0], t1 - ev.a_iv[0],
                                  plus, e_plus, minus, e_minus))

    # ------------------------------------------------------------------
    # event joints

    for u, evs in chord_events.items():
        ws = segs[u]
        for i, ev in enumerate(evs):
            m = ev.m
            assert ev.px.tri == ws[0].tri
            behind, behind_e = ws[i], 1
            ahead, ahead_e = ws[i + 1], 0
            if sign == 1:
                if W > m:
                    _join(behind, behind_e, 0, W - m,
                          ahead, ahead_e, m, W, False)
                plusw, pluse, minusw, minuse = ahead, ahead_e, behind, behind_e
            else:
                if W > m:
                    _join(ahead, ahead_e, 0, W - m,
                          behind, behind_e, m, W, False)
                plusw, pluse, minusw, minuse = behind, behind_e, ahead, ahead_e
            # Block levels rank crossing points along the winding
            # direction, furthest first; the a-frame ranks them along y's
            # travel ascending iff the entry side and the case agree.
            flip = (ev.a_family == ev.case_a) == (sign == 1)
            covered = 0
            for (p_lo, p_hi, plus, e_plus, minus, e_minus) in ev.pieces:
                if flip:
                    o_lo, o_hi = m - p_hi, m - p_lo
                else:
                    o_lo, o_hi = p_lo, p_hi
                _join(plus, e_plus, 0, p_hi - p_lo,
                      plusw, pluse, o_lo, o_hi, flip)
                _join(minus, e_minus, 0, p_hi - p_lo,
                      minusw, minuse, W - m + o_lo, W - m + o_hi, flip)
                covered += p_hi - p_lo
            assert covered == m, "event pieces must tile the block"

    # ------------------------------------------------------------------
    # compose maximal wires into passages

    def anchor_pos(anc, t):
        kind, e, k, start, step = anc
        if kind == "band":
            return start + step * t
        return new_x_pos(e, k, start + step * t)

    def anchor_breaks(anc, lo, hi):
        """Wire-coordinate split points where new positions jump."""
        kind, e, k, start, step = anc
        if kind == "band":
            return []
        if step == 1:
            o_min, o_max = start + lo, start + hi - 1
        else:
            o_min, o_max = start - hi + 1, start - lo
        out = []
        for cut in sorted(set(it.cut_values(e))):
            o_split = cut if k == 0 else wxf(e) - cut
            if o_min < o_split <= o_max:
                t = o_split - start if step == 1 else start - o_split + 1
                out.append(t)
        return out

    def anchor_side(tri, e, k):
        for s in range(3):
            if cx.tri_edges[tri][s] == e and \
                    x_web.side_index(e, tri, s) == k:
                return s
        raise AssertionError("edge %d side %d not on triangle %d" % (e, k, tri))

    new_passages = []
    ordered = {}

    def emit(tri, anc1, a_lo, a_hi, anc2, c_lo, c_hi, par):
        br = set(anchor_breaks(anc1, a_lo, a_hi))
        for t2 in anchor_breaks(anc2, c_lo, c_hi):
            br.add(a_lo + (t2 - c_lo) if par == 1 else a_lo + (c_hi - t2))
        splits = [a_lo] + sorted(br) + [a_hi]
        d1 = anc1[4]
        d2 = anc2[4]
        # Width-1 joints carry no orientation, so parity is only
        # meaningful (and checked) on genuinely wide pieces.
        assert a_hi - a_lo == 1 or d1 * par * d2 == -1, \
            "passage must reverse between frames"
        s1 = anchor_side(tri, anc1[1], anc1[2])
        s2 = anchor_side(tri, anc2[1], anc2[2])
        for p_lo, p_hi in zip(splits, splits[1:]):
            weight = p_hi - p_lo
            if par == 1:
                q_lo, q_hi = c_lo + (p_lo - a_lo), c_lo + (p_hi - a_lo)
            else:
                q_lo, q_hi = c_lo + (a_hi - p_hi), c_lo + (a_hi - p_lo)
            pos1 = anchor_pos(anc1, p_lo if d1 == 1 else p_hi - 1)
            pos2 = anchor_pos(anc2, q_lo if d2 == 1 else q_hi - 1)
            assert anchor_pos(anc1, p_hi - 1 if d1 == 1 else p_lo) == \
                pos1 + weight - 1, "split missed a position jump"
            assert anchor_pos(anc2, q_hi - 1 if d2 == 1 else q_lo) == \
                pos2 + weight - 1, "split missed a position jump"
            p = Passage(tri, s1, s2, weight)
            new_passages.append(p)
            ordered.setdefault((anc1[1], anc1[2]), []).append((pos1, End(p, 0)))
            ordered.setdefault((anc2[1], anc2[2]), []).append((pos2, End(p, 1)))

    consumed = {}

    def uncovered(wire, end):
        ivs = sorted(consumed.get((id(wire), end), ()))
        out = []
        run = 0
        for lo, hi in ivs:
            if lo > run:
                out.append((run, lo))
            run = max(run, hi)
        if run < wire.width:
            out.append((run, wire.width))
        return out

    steps = 0
    for wire0 in wires:
        for end0 in (0, 1):
            if wire0.anchor[end0] is None:
                continue
            for s_lo, s_hi in uncovered(wire0, end0):
                stack = [(wire0, end0, s_lo, s_hi, 1, s_lo, s_hi)]
                while stack:
                    wc, ent, clo, chi, par, alo, ahi = stack.pop()
                    steps += 1
                    assert steps < 64 * len(wires) + 1024, "wiring runaway"
                    assert wc.tri == wire0.tri, "wire path left its triangle"
                    far = 1 - ent
                    anc2 = wc.anchor[far]
                    if anc2 is not None:
                        emit(wc.tri, wire0.anchor[end0], alo, ahi,
                             anc2, clo, chi, par)
                        consumed.setdefault((id(wire0), end0), []).append(
                            (alo, ahi))
                        consumed.setdefault((id(wc), far), []).append(
                            (clo, chi))
                        continue
                    got = 0
                    for (llo, lhi, ow, oe, olo, ohi, fl) in wc.links[far]:
                        ilo, ihi = max(clo, llo), min(chi, lhi)
                        if ilo >= ihi:
                            continue
                        got += ihi - ilo
                        if not fl:
                            nlo, nhi = olo + (ilo - llo), olo + (ihi - llo)
                        else:
                            nlo, nhi = ohi - (ihi - llo), ohi - (ilo - llo)
                        npar = par if not fl else -par
                        if par == 1:
                            na = (alo + (ilo - clo), alo + (ihi - clo))
                        else:
                            na = (alo + (chi - ihi), alo + (chi - ilo))
                        stack.append((ow, oe, nlo, nhi, npar, na[0], na[1]))
                    assert got == chi - clo, "wire end not fully linked"

    # ------------------------------------------------------------------
    # assemble, check, tauten

    out = Web(cx)
    out.passages = new_passages
    od = {}
    for (e, k), items in ordered.items():
        items.sort(key=lambda item: item[0])
        run = 0
        lst = []
        for pos, end in items:
            assert pos == run, "gap in twisted layout on edge %d" % e
            run += end.weight
            lst.append(end)
        assert run == new_weight(e), "weight mismatch on edge %d" % e
        od[(e, k)] = lst
    out.rebuild_from_passages(od)
    out.component_count = x_web.component_count
    stripped = tauten(out)
    assert stripped == 0, "twist image lost a component"
    return out


def split_components(curve, budget=DEFAULT_SLOT_BUDGET):
    """Per-component taut webs of a multicurve, by walking its strands."""
    if curve.component_count <= 1:
        return [curve.web] if curve.component_count else []
    out = []
    for orbit in orientation_orbits(curve.web, budget):
        coords = [0] * len(curve.cx.edges)
        for e, _k, _x in orbit:
            coords[e] += 1
        comp, stripped = normalize(coords, curve.cx, budget)
        assert stripped == 0 and comp.component_count == 1
        out.append(comp.web)
    return out


def dehn_twist(curve, twist_curve, n, budget=DEFAULT_SLOT_BUDGET):
    """The image of ``curve`` under the ``n``-fold twist along each
    component of ``twist_curve``.

    Positive ``n`` gives left twists, negative right twists, ``n = 0`` the
    identity.  Components of ``curve`` disjoint from the twisting curves
    map identically.  The twisting multicurve must be small enough to walk
    at strand level; ``curve`` may be arbitrarily heavy.
    """
    if curve.cx is not twist_curve.cx:
        raise ValueError("curves live on different complexes")
    if n == 0 or twist_curve.is_empty() or curve.is_empty():
        return curve
    sign = 1 if n > 0 else -1
    web = curve.web
    for comp_web in split_components(twist_curve, budget):
        web = twist_one(web, comp_web, abs(n), sign, budget)
    if web is curve.web:
        web = web.copy()
    return MultiCurve.from_taut_web(curve.cx, web, curve.component_count)
