"""Seam profiles: per-class arc counts of a curve family cut along pants.

A pair of pants carries exactly three isotopy classes of seams (arcs
joining two distinct boundary circles) and three of waves (arcs returning
to one circle); a twice-marked disk carries a single seam class, the arcs
separating its marked points.  The profile of a curve family records, for
every piece of a pants decomposition and every one of these classes, the
exact number of parallel arcs the family leaves in it — zero counts
included, so missing classes are visible.

A family is *k-seamed* when every seam class of every piece is
represented by at least ``k`` of its arcs; since each seam has one
endpoint on each of two circles (two on one circle for a disk seam), a
k-seamed family must cross every decomposition curve in at least ``2k``
points.  Profiles add, and k-seamedness of a collection is judged on the
aggregate profile.
"""

from .arcs import ArcCensus
from .curves import MultiCurve
from .strands import DEFAULT_SLOT_BUDGET


def piece_arc_classes(piece):
    """All arc classes of one piece, as census keys.

    Pants: three seam classes (unordered circle pairs) then three wave
    classes; twice-marked disk: its single seam class, plus the
    boundary-parallel class — counted separately, though it stays empty
    whenever the position is genuinely minimal.
    """
    if piece.kind == "pants":
        c1, c2, c3 = piece.circles
        return [("seam",) + tuple(sorted(p))
                for p in ((c1, c2), (c1, c3), (c2, c3))] + \
               [("wave", c) for c in piece.circles]
    return [("seam", piece.circles[0]), ("trivial", piece.circles[0])]


class SeamProfile:
    """Exact arc counts of a curve family against a pants decomposition.

    ``counts[piece_index][key]`` is an integer for every class key of
    every piece (see ``piece_arc_classes``); keys absent from the census
    appear with count 0.  ``crossings[ci]`` is the family's crossing
    count with decomposition component ``ci``.
    """

    def __init__(self, structure, counts, crossings):
        self.structure = structure
        self.counts = counts
        self.crossings = crossings

    @classmethod
    def empty(cls, structure):
        counts = {p.index: {key: 0 for key in piece_arc_classes(p)}
                  for p in structure.pieces}
        crossings = {ci: 0 for ci in
                     range(structure.curve.component_count)}
        return cls(structure, counts, crossings)

    @classmethod
    def from_census(cls, census):
        prof = cls.empty(census.pieces)
        for pi, per in census.counts.items():
            for key, cnt in per.items():
                assert key in prof.counts[pi], \
                    "unexpected arc class %r in piece %d" % (key, pi)
                prof.counts[pi][key] += cnt
        for ci, k in census.comp_K.items():
            prof.crossings[ci] += k
        return prof

    def add(self, other):
        """Aggregate profile of a collection (counts add classwise)."""
        assert self.structure is other.structure
        out = SeamProfile.empty(self.structure)
        for pi in out.counts:
            for key in out.counts[pi]:
                out.counts[pi][key] = (self.counts[pi][key]
                                       + other.counts[pi][key])
        for ci in out.crossings:
            out.crossings[ci] = self.crossings[ci] + other.crossings[ci]
        return out

    def seam_items(self):
        """All (piece index, class key, count) with key a seam class."""
        for pi, per in sorted(self.counts.items()):
            for key in sorted(per):
                if key[0] == "seam":
                    yield pi, key, per[key]

    def min_seam_count(self):
        return min(cnt for _pi, _key, cnt in self.seam_items())

    def is_k_seamed(self, k):
        """Every seam class of every piece carries at least ``k`` arcs."""
        return all(cnt >= k for _pi, _key, cnt in self.seam_items())

    def total_arcs(self):
        return sum(sum(per.values()) for per in self.counts.values())

    def as_json_dict(self):
        """Stable-keyed export with decimal-string counts."""
        return {
            "pieces": [
                {"piece": pi,
                 "classes": [{"kind": key[0],
                              "circles": [list(c) for c in key[1:]],
                              "count": str(cnt)}
                             for key in sorted(per)
                             for cnt in [per[key]]]}
                for pi, per in sorted(self.counts.items())
            ],
            "crossings": {str(ci): str(k)
                          for ci, k in sorted(self.crossings.items())},
        }


def _structure_of(decomposition):
    """Accept a PieceStructure or anything wrapping one."""
    return getattr(decomposition, "structure", decomposition)


def classify_arcs(decomposition, gamma, budget=DEFAULT_SLOT_BUDGET):
    """Seam profile of ``gamma`` cut along a pants decomposition."""
    structure = _structure_of(decomposition)
    assert structure.cx is gamma.cx, "curves live on different complexes"
    return SeamProfile.from_census(ArcCensus(structure, gamma, budget))


def is_k_seamed(decomposition, curves, k, budget=DEFAULT_SLOT_BUDGET):
    """Is the collection ``curves`` k-seamed along the decomposition?

    ``curves`` may be a single MultiCurve or an iterable of them; the
    counts of a collection aggregate over its members.
    """
    structure = _structure_of(decomposition)
    if isinstance(curves, MultiCurve):
        curves = [curves]
    profile = SeamProfile.empty(structure)
    for c in curves:
        profile = profile.add(classify_arcs(structure, c, budget))
    return profile.is_k_seamed(k)
