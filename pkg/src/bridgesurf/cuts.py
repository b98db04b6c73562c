"""Joint minimal position of two taut webs, as a cut itinerary along one.

Wherever a connected taut curve ``y`` crosses an edge it occupies a
transverse position among the strands of a second taut web ``x`` on the
same complex.  Recording that position as a *cut* — the number of ``x``
strands below ``y`` in the entered side's ccw frame — turns the joint
minimal position of the pair into a single strand-level walk along ``y``:

* inside a triangle the exit cut is a deterministic monotone function of
  the entry cut, because ``x``'s chords fall into the three nested corner
  families and a chord of ``y`` can always slide to the unique gap that
  crosses as few of them as possible;
* the walk is forced to cross exactly the ``x`` chords that head from the
  entered side to the third side while nested around ``y``'s entry gap.

With ``n_v`` chords of ``x`` cutting off vertex ``v`` of the triangle and
``y`` entering side ``s`` at cut ``q``, leaving through side ``s+1`` gives

    q'  =  max(q + n_{s+2} - n_s,  n_{s+2})        (next entered frame)

crossing the ``max(0, n_s - q)`` chords of the vertex-``s`` family nested
outside the entry gap, and leaving through side ``s+2`` gives

    q'  =  min(q, n_s)

crossing the ``max(0, q - n_s)`` chords of the vertex-``s+1`` family nested
inside it.  Both maps are nondecreasing with slopes 0 and 1, so the
monodromy of a full trip around ``y`` composes to a single clamp
``q -> min(max(q + A, LO), HI)`` maintained in constant space.  Its fixed
points are exactly the closed transverse positions of ``y`` relative to
``x``; among them the crossing total is minimized at one of finitely many
breakpoints, and the minimum must equal the geometric intersection number
computed independently from corridor counts — the constructor checks this
and records the realizing itinerary.

Everything downstream of a Dehn twist splice reads off this itinerary:
per-slot cuts give the interleaving of the two webs on every edge, and the
recorded crossing pieces localize each crossing at an exact slot of ``y``
and an exact sub-bundle of ``x``.
"""

import bisect

from . import position
from .strands import DEFAULT_SLOT_BUDGET, orientation_orbits


class Step:
    """One itinerary slot: ``y`` entering a triangle at a known cut.

    ``slot`` is the directed slot ``(edge, side, pos)`` of the ``y`` walk,
    ``enter``/``exit`` are triangle side indices, and ``case_a`` tells
    whether ``y`` leaves through side ``enter + 1`` (veering toward vertex
    ``enter + 1``) rather than ``enter + 2``.  After the concrete pass,
    ``q`` is the cut in the entered side's ccw frame and ``crossed`` lists
    the crossed pieces of ``x`` as ``(end, lo, hi)`` with entered-frame
    positions ``[lo, hi)``, ordered along ``y``'s travel through the
    triangle.
    """

    __slots__ = ("slot", "tri", "enter", "exit", "case_a", "q", "crossed")

    def __init__(self, slot, tri, enter, exit_side):
        self.slot = slot
        self.tri = tri
        self.enter = enter
        self.exit = exit_side
        self.case_a = exit_side == (enter + 1) % 3
        assert self.case_a or exit_side == (enter + 2) % 3
        self.q = None
        self.crossed = []


class CutItinerary:
    """Minimal position of connected ``y_web`` against ``x_web``.

    ``steps[u]`` follows the chosen orientation orbit of ``y``; ``K`` is
    the total number of crossings, equal to the geometric intersection
    number.  Per-edge cut tables expose the interleaving of the two webs;
    they require the realized position to embed ``y`` consistently (cuts
    monotone along every edge), which the greedy walk does not promise
    when ``y`` carries many parallel strands, so callers that only read
    the crossing sequence — an invariant of any crossing-minimal
    representative, embedded or not — may pass ``tables=False``.
    """

    def __init__(self, x_web, y_web, budget=DEFAULT_SLOT_BUDGET,
                 tables=True):
        assert x_web.cx is y_web.cx
        self.cx = x_web.cx
        self.x_web = x_web
        self.y_web = y_web
        orbits = orientation_orbits(y_web, budget)
        assert len(orbits) == 1, "cut itinerary needs a connected curve"
        self.cycle = orbits[0]
        self.steps = [self._static_step(slot) for slot in self.cycle]
        self._corner_cache = {}
        expected = 0
        if not x_web.is_empty():
            expected = position.geometric_intersection(x_web, y_web)
        self._solve(expected)
        self.K = expected
        if tables:
            self._build_tables()

    # ------------------------------------------------------------------
    # static per-step data

    def _static_step(self, slot):
        e, k, pos = slot
        hits = list(self.y_web.ends_overlapping(e, k, pos, pos + 1))
        assert len(hits) == 1
        end, _lo, _hi = hits[0]
        p = end.passage
        return Step(slot, p.tri, p.end_side(end.which),
                    p.end_side(1 - end.which))

    def _corners(self, t):
        """``n[v]`` = number of ``x`` chords cutting off vertex ``v``."""
        n = self._corner_cache.get(t)
        if n is None:
            w = [self.x_web.edge_weight(e) for e in self.cx.tri_edges[t]]
            n = tuple((w[v - 1] + w[v] - w[(v + 1) % 3]) // 2
                      for v in range(3))
            assert all(c >= 0 for c in n) and \
                all(w[i] == n[i] + n[(i + 1) % 3] for i in range(3))
            self._corner_cache[t] = n
        return n

    # ------------------------------------------------------------------
    # propagation

    def _advance(self, step, q, record):
        """One triangle: returns ``(next cut, crossings)``; may record."""
        n = self._corners(step.tri)
        s = step.enter
        e, k, _pos = step.slot
        if step.case_a:
            r = max(0, n[s] - q)
            if record and r:
                step.crossed = self._pieces(e, k, q, n[s], step, s,
                                            (s + 2) % 3, False)
            q2 = max(q + n[(s + 2) % 3] - n[s], n[(s + 2) % 3])
        else:
            r = max(0, q - n[s])
            if record and r:
                step.crossed = self._pieces(e, k, n[s], q, step, s,
                                            (s + 1) % 3, True)
            q2 = min(q, n[s])
        return q2, r

    def _pieces(self, e, k, lo, hi, step, s, far, reverse):
        out = []
        for end, plo, phi in self.x_web.ends_overlapping(e, k, lo, hi):
            p = end.passage
            assert {p.side_a, p.side_b} == {s, far}, \
                "crossed bundle joins the wrong sides"
            out.append((end, plo, phi))
        assert sum(phi - plo for _end, plo, phi in out) == hi - lo
        if reverse:
            out.reverse()
        return out

    def _run(self, q0, record):
        q = q0
        total = 0
        for step in self.steps:
            if record:
                step.q = q
            q, r = self._advance(step, q, record)
            total += r
        return q, total

    def _solve(self, expected):
        """Find the closed itinerary realizing ``expected`` crossings.

        The monodromy is maintained as ``q -> min(max(q + A, LO), HI)``;
        when it collapses to a translation of a clamp with ``A == 0`` every
        value of ``[LO, HI]`` closes up, and the crossing total, a
        piecewise-linear function of the start cut, is minimized at one of
        the regime breakpoints collected alongside.
        """
        e0 = self.cycle[0][0]
        w0 = self.x_web.edge_weight(e0)
        A, lo, hi = 0, 0, w0
        breaks = set()
        for step in self.steps:
            n = self._corners(step.tri)
            s = step.enter
            c = n[s]
            # Preimage of this step's threshold under the prefix map.
            breaks.add(min(max(c - A, 0), w0))
            if step.case_a:
                a, b = n[(s + 2) % 3] - n[s], n[(s + 2) % 3]
                A, lo, hi = A + a, max(lo + a, b), max(hi + a, b)
            else:
                if lo > c:
                    lo = hi = c
                else:
                    hi = min(hi, c)
        if A > 0:
            cands = [hi]
        elif A < 0:
            cands = [lo]
        else:
            cands = sorted({lo, hi} | {b for b in breaks if lo <= b <= hi})
        best = None
        for q0 in cands:
            q_end, total = self._run(q0, record=False)
            if q_end != q0:
                continue
            if best is None or total < best[1]:
                best = (q0, total)
        assert best is not None, "cut itinerary failed to close up"
        assert best[1] == expected, (
            "itinerary crossings %d disagree with intersection number %d"
            % (best[1], expected))
        q_end, total = self._run(best[0], record=True)
        assert (q_end, total) == best

    # ------------------------------------------------------------------
    # per-edge interleaving tables

    def _build_tables(self):
        wyf = self.y_web.edge_weight
        wxf = self.x_web.edge_weight
        tables = {}
        for step in self.steps:
            e, k, pos = step.slot
            pos0 = pos if k == 0 else wyf(e) - 1 - pos
            cut0 = step.q if k == 0 else wxf(e) - step.q
            tables.setdefault(e, {})[pos0] = cut0
        self._cuts0 = {}
        for e, by_pos in tables.items():
            assert sorted(by_pos) == list(range(wyf(e)))
            cuts = [by_pos[i] for i in range(wyf(e))]
            assert all(a <= b for a, b in zip(cuts, cuts[1:])), \
                "cuts must be monotone along an edge"
            self._cuts0[e] = cuts

    def slot_cut(self, e, q0):
        """Cut of the ``y`` strand at side-0 position ``q0`` of edge ``e``."""
        return self._cuts0[e][q0]

    def y_below(self, e, p0):
        """``y`` strands below the ``x`` strand at side-0 position ``p0``."""
        cuts = self._cuts0.get(e)
        if not cuts:
            return 0
        return bisect.bisect_right(cuts, p0)

    def cut_values(self, e):
        """Ascending cuts of the ``y`` strands on edge ``e``."""
        return self._cuts0.get(e, [])
