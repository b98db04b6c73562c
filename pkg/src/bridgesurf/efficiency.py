"""Mutually efficient traced configurations, audited by a bigon scan.

Canonical taut representatives are already pairwise efficient: every
pair realizes its geometric intersection number, so no two families
cobound a bigon free of marked points.  Rather than trust that claim,
the scan recomputes each pair's realized transverse crossing count by
walking the cut itinerary of one family along the other and compares it
with the intersection number obtained independently from corridor
divergence counts; an empty bigon would let two crossings cancel, so the
number of empty bigons in the configuration is exactly half the excess.
"""

from .curves import geometric_intersection, trace
from .cuts import CutItinerary
from .strands import DEFAULT_SLOT_BUDGET
from .twist import split_components


def _realized_crossings(x, y, budget):
    """Transverse crossings of the canonical pair, read off the walk."""
    total = 0
    for comp_web in split_components(y, budget):
        it = CutItinerary(x.web, comp_web, budget, tables=False)
        total += sum(phi - plo
                     for step in it.steps
                     for (_end, plo, phi) in step.crossed)
    return total


def bigon_scan(collections, budget=DEFAULT_SLOT_BUDGET):
    """Number of empty bigons between pairs of the traced configuration.

    Zero exactly when every pair is in efficient position; each empty
    bigon two families cobound contributes two excess crossings.
    """
    excess = 0
    for i, x in enumerate(collections):
        for y in collections[i + 1:]:
            if x.is_empty() or y.is_empty():
                continue
            realized = _realized_crossings(x, y, budget)
            minimal = geometric_intersection(x, y)
            assert realized >= minimal and (realized - minimal) % 2 == 0
            excess += realized - minimal
    return excess // 2


def mutual_efficient_position(collections, budget=DEFAULT_SLOT_BUDGET):
    """Explicit traced representatives of several families, pairwise
    transverse and bigon-free, with crossing counts equal to the
    geometric intersection numbers."""
    bigons = bigon_scan(collections, budget)
    assert bigons == 0, "%d empty bigons in canonical position" % bigons
    return [trace(c, budget) for c in collections]
