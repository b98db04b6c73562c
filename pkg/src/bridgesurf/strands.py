"""Strand-level walks over webs of moderate total weight.

Most of the engine works at bundle granularity, but a few questions
(connected-component counts of freshly normalized coordinates, choosing an
orientation of a twisting curve) genuinely need to follow individual
strands.  Following strands costs time linear in the total weight, so every
entry point takes an explicit slot budget and raises ``ResourceBudgetError``
instead of silently grinding through astronomically heavy webs; callers
that know the component count for structural reasons (a Dehn twist is a
homeomorphism) never come here.

A *directed slot* is a triple ``(edge, side, pos)``: one strand crossing
``edge``, about to enter the triangle on ``side``, at side-ccw coordinate
``pos``.  Each undirected strand crossing yields two directed slots, one
per travel direction, and the walk below visits each closed strand as two
directed orbits (one per orientation).
"""

DEFAULT_SLOT_BUDGET = 2_000_000


class ResourceBudgetError(RuntimeError):
    """A strand-level walk would exceed its slot budget."""


def step_slot(web, state):
    """Advance a directed slot through the triangle it is entering."""
    e, k, x = state
    for end, _lo, _hi in web.ends_overlapping(e, k, x, x + 1):
        p = end.passage
        o = x - end.pos()
        far_which = 1 - end.which
        far_pos = p.a_pos if far_which == 0 else p.b_pos
        far_ccw = far_pos + (p.weight - 1 - o)
        side = p.end_side(far_which)
        e2 = web.cx.tri_edges[p.tri][side]
        k2 = web.side_index(e2, p.tri, side)
        w2 = web.edge_weight(e2)
        return (e2, 1 - k2, w2 - 1 - far_ccw)
    raise AssertionError("no passage end at slot %r" % (state,))


def directed_slots(web):
    """All directed slots of the web (two per strand crossing)."""
    out = []
    for e, sides in web.side_lists.items():
        for k in (0, 1):
            for end in sides[k]:
                for o in range(end.weight):
                    out.append((e, k, end.pos() + o))
    return out


def slot_orbits(web, budget=DEFAULT_SLOT_BUDGET):
    """Directed orbits of the slot walk, each a list of directed slots.

    Raises ``ResourceBudgetError`` when the web carries more than ``budget``
    directed slots.
    """
    if 2 * web.total_weight() > budget:
        raise ResourceBudgetError(
            "strand walk over %d slots exceeds budget %d"
            % (2 * web.total_weight(), budget)
        )
    orbits = []
    seen = set()
    for s in directed_slots(web):
        if s in seen:
            continue
        orbit = []
        cur = s
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            cur = step_slot(web, cur)
        assert cur == s, "slot walk did not close at its start"
        orbits.append(orbit)
    return orbits


def component_count_exact(web, budget=DEFAULT_SLOT_BUDGET):
    """Number of closed strands, by explicit walking."""
    if web.is_empty():
        return 0
    orbits = slot_orbits(web, budget)
    assert len(orbits) % 2 == 0, "directed orbits must pair up"
    return len(orbits) // 2


def orientation_orbits(web, budget=DEFAULT_SLOT_BUDGET):
    """One directed orbit per component, fixing an orientation of each.

    Returns a list of orbits; component ``i``'s orbit traverses its strand
    once, and the set of directed slots *not* covered belongs to the
    reversed orientations.  Which of the two orientations is chosen is
    deterministic (the orbit through the least directed slot).
    """
    orbits = slot_orbits(web, budget)
    orbits.sort(key=lambda orbit: min(orbit))
    chosen = []
    covered = set()
    for orbit in orbits:
        if orbit[0] in covered:
            continue
        chosen.append(orbit)
        for e, k, x in orbit:
            covered.add((e, k, x))
            covered.add(reverse_slot(web, (e, k, x)))
    return chosen


def reverse_slot(web, state):
    """The oppositely-directed slot of the same strand crossing."""
    e, k, x = state
    w = web.edge_weight(e)
    return (e, 1 - k, w - 1 - x)
