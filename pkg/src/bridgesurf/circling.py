"""Annulus charts and circling numbers around a simple closed curve.

Fix a connected simple closed curve ``y``, a reference family ``X`` and a
test family ``gamma``, all taut on one complex.  A thin fibered annulus
neighborhood ``A`` of ``y`` meets ``X`` in one transverse fiber per
crossing of ``X`` with ``y``; a component of ``gamma`` inside ``A``
*k-circles* when it crosses every one of those fibers at least ``k``
times, and the circling number of ``gamma`` around ``y`` is the largest
``k`` any component achieves.

Everything is read off the canonical taut configuration.  The fibers are
localized along ``y``'s own orbit: the cut itinerary of ``X`` against
``y`` charges each crossing to the corridor following a definite slot of
``y``.  The strands of ``gamma`` inside ``A`` are the maximal runs of
``gamma``'s crossing word that match ``y``'s cyclic corridor word (in
either direction): a taut strand traversing the same corridor sequence
as ``y`` is parallel to it through that stretch, hence isotopic into
``A``, and conversely every strand of ``gamma`` that stays in ``A``
traverses corridors of ``y``.  A run matching slots ``u0 .. u0+len-1``
of ``y`` passes the ``len - 1`` corridors between them, so its crossing
count with the fiber in corridor ``r`` is the number of times the run's
corridor interval covers residue ``r``; closed runs (a whole component
of ``gamma`` wrapping ``A``) pass every corridor once per wrap.
"""

from .curves import trace
from .cuts import CutItinerary
from .strands import DEFAULT_SLOT_BUDGET


def _word_of(cycle):
    """Corridor word of a slot cycle: directed (edge, side) per slot."""
    return [(e, k) for (e, k, _pos) in cycle]


class _Run:
    """One strand of ``gamma`` inside the annulus chart.

    ``start`` is the matched starting slot of ``y`` (forward frame),
    ``length`` the number of matched slots, ``wraps`` the number of full
    loops for a closed strand (0 for an open one), ``reversed_dir``
    whether the strand runs against ``y``'s orientation.
    """

    __slots__ = ("start", "length", "wraps", "reversed_dir")

    def __init__(self, start, length, wraps, reversed_dir):
        self.start = start
        self.length = length
        self.wraps = wraps
        self.reversed_dir = reversed_dir

    def fiber_crossings(self, r, L):
        """Crossings with the fiber in forward-frame corridor ``r``."""
        if self.wraps:
            return self.wraps
        if self.reversed_dir:
            # Reversed-frame slot i sits at forward slot L-1-i, so the
            # corridor after reversed slot i is forward corridor L-2-i.
            r = (L - 2 - r) % L
        # Corridors passed: start .. start+length-2 (mod L).
        span = self.length - 1
        full, rem = divmod(span, L)
        off = (r - self.start) % L
        return full + (1 if off < rem else 0)


class AnnulusChart:
    """Fibered annulus around ``y`` with ``X``-fibers and ``gamma`` runs.

    ``fibers`` lists the corridor positions (slot residues along ``y``'s
    orbit, with multiplicity) of the crossings of ``X`` with ``y``;
    ``runs`` holds the strands of ``gamma`` inside the chart.  Raises
    ``ValueError`` unless ``y`` is connected.
    """

    def __init__(self, y, X, gamma, budget=DEFAULT_SLOT_BUDGET):
        if y.component_count != 1:
            raise ValueError("annulus chart needs a connected curve")
        assert y.cx is X.cx and y.cx is gamma.cx
        self.y = y
        self.X = X
        self.gamma = gamma
        self.cycle = trace(y, budget).cycles[0]
        self.word = _word_of(self.cycle)
        self.L = len(self.word)
        self.fibers = self._locate_fibers(budget)
        self.runs = self._match_runs(budget)

    def _locate_fibers(self, budget):
        if self.X.is_empty():
            return []
        it = CutItinerary(self.X.web, self.y.web, budget, tables=False)
        assert len(it.steps) == self.L
        fibers = []
        for u, step in enumerate(it.steps):
            for (_end, plo, phi) in step.crossed:
                fibers.extend([u] * (phi - plo))
        return fibers

    def _match_runs(self, budget):
        runs = []
        for cyc in trace(self.gamma, budget).cycles:
            gword = _word_of(cyc)
            for reversed_dir, yword in ((False, self.word),
                                        (True, self._reversed_word())):
                runs.extend(self._runs_against(gword, yword, reversed_dir))
        return runs

    def _reversed_word(self):
        return [(e, 1 - k) for (e, k) in reversed(self.word)]

    def _runs_against(self, gword, yword, reversed_dir):
        """Maximal cyclic matches of ``gword`` against cyclic ``yword``.

        A closed component of ``gamma`` whose whole word is a repetition
        of ``yword`` wraps the annulus; otherwise each maximal diagonal
        run of the (cyclic) match table is one open strand, found by its
        start (a match whose diagonal predecessor mismatches) and grown
        forward.  Runs of a single slot pass no corridor and are
        dropped.
        """
        L, M = len(yword), len(gword)
        if M % L == 0:
            for u0 in range(L):
                if all(gword[j] == yword[(u0 + j) % L] for j in range(M)):
                    return [_Run(u0, 0, M // L, reversed_dir)]
        runs = []
        for j0 in range(M):
            for u0 in range(L):
                if gword[j0] != yword[u0]:
                    continue
                if gword[(j0 - 1) % M] == yword[(u0 - 1) % L]:
                    continue        # interior of a longer run
                n = 1
                while n < M and \
                        gword[(j0 + n) % M] == yword[(u0 + n) % L]:
                    n += 1
                if n >= 2:
                    runs.append(_Run(u0, n, 0, reversed_dir))
        return runs

    def circling_numbers(self):
        """Per-run circling numbers (0 when the chart has no fibers)."""
        if not self.fibers:
            return [0] * len(self.runs)
        return [min(run.fiber_crossings(r, self.L) for r in self.fibers)
                for run in self.runs]


def circling_number(gamma, y, X, budget=DEFAULT_SLOT_BUDGET):
    """Largest ``k`` such that ``gamma`` k-circles around ``y`` w.r.t. ``X``.

    0 when no strand of ``gamma`` lies in the annulus chart or the chart
    carries no fibers of ``X``.
    """
    chart = AnnulusChart(y, X, gamma, budget)
    nums = chart.circling_numbers()
    return max(nums) if nums else 0
