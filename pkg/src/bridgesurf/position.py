"""Joint position of two taut webs: corridors and exact crossing counts.

Two taut webs on the same complex meet transversally once a relative order
is fixed wherever their strands share an edge.  Any pair (x-strand,
y-strand) crossing a common edge shares a *corridor*: the maximal run of
edges through which the two strands stay parallel (enter and leave every
triangle through the same sides).  Within one corridor a pair crosses at
most once, and whether it must cross is forced: the merge at the backward
end of the corridor fixes the pair's actual order, the divergence at the
forward end fixes the order needed to leave without crossing, and the two
are comparable because the relative order of parallel strands is preserved
along corridors when read in each entered side's counterclockwise frame.
Crossing exactly when the two disagree yields a bigon-free position, so
summing over corridors computes the geometric intersection number.

Corridors are walked at bundle granularity, splitting the (x-bundle,
y-bundle) product only when the webs' passages subdivide it, so the count
costs polynomial time in the numbers of bundles even when weights are
huge.
"""

from .web import Germ


class Divergence:
    """The forward end of one corridor, where an (x, y) bundle pair splits.

    Records everything a rewrite (e.g. a twist splice) needs: the triangle,
    the entered side index, each bundle's germ on the entered edge in its
    own web's coordinates, the two exit sides, whether the x-bundle lies
    above the y-bundle in the entered side's ccw frame, and whether the
    pair crosses inside this triangle.
    """

    __slots__ = ("tri", "enter_side", "germ_x", "germ_y",
                 "exit_x", "exit_y", "x_above_y", "crossing")

    def __init__(self, tri, enter_side, germ_x, germ_y, exit_x, exit_y,
                 x_above_y, crossing):
        self.tri = tri
        self.enter_side = enter_side
        self.germ_x = germ_x
        self.germ_y = germ_y
        self.exit_x = exit_x
        self.exit_y = exit_y
        self.x_above_y = x_above_y
        self.crossing = crossing

    @property
    def weight(self):
        return self.germ_x.weight * self.germ_y.weight

    def __repr__(self):
        return ("Divergence(t=%d, s=%d, x=%r, y=%r, cross=%r, w=%d)"
                % (self.tri, self.enter_side, self.germ_x, self.germ_y,
                   self.crossing, self.weight))


def corridor_divergences(web_x, web_y):
    """All corridor forward ends between the webs, each corridor once.

    A corridor's two ends are both merges when traversed inward; walking
    from every merge start visits every corridor from both directions, so
    each divergence record appears exactly once per traversal direction.
    We keep all of them; ``geometric_intersection`` halves the total.
    """
    assert web_x.cx is web_y.cx
    out = []
    if web_x.is_empty() or web_y.is_empty():
        return out
    cx = web_x.cx
    for e, x_sides in web_x.side_lists.items():
        y_sides = web_y.side_lists.get(e)
        if y_sides is None:
            continue
        for k in (0, 1):
            for xe in x_sides[k]:
                for ye in y_sides[k]:
                    # Both chords sit in the side-k triangle and their
                    # strands travel across e into the opposite triangle.
                    s = xe.passage.end_side(xe.which)
                    assert ye.passage.end_side(ye.which) == s
                    a = xe.passage.end_side(1 - xe.which)
                    b = ye.passage.end_side(1 - ye.which)
                    if a == b:
                        continue  # corridor interior, not a merge
                    # On exit side s the chord arriving from side s+2 hugs
                    # the low corner; entering the opposite frame reverses,
                    # putting it on top.
                    above = a == (s + 2) % 3
                    wx = web_x.edge_weight(e)
                    wy = web_y.edge_weight(e)
                    gx = Germ(e, 1 - k, wx - xe.pos() - xe.weight,
                              wx - xe.pos())
                    gy = Germ(e, 1 - k, wy - ye.pos() - ye.weight,
                              wy - ye.pos())
                    out.extend(_walk_corridor(web_x, web_y, gx, gy, above))
    return out


def _walk_corridor(web_x, web_y, gx, gy, above):
    """Follow one merged bundle pair forward to all its divergences."""
    out = []
    stack = [(gx, gy, above)]
    visited = set()
    while stack:
        gx, gy, above = stack.pop()
        key = (gx.key(), gy.key())
        if key in visited:
            continue  # closed parallel corridor: no forced crossing
        visited.add(key)
        steps_x = web_x.step(gx)
        steps_y = web_y.step(gy)
        for gx2, px, which_x, _ix in steps_x:
            s_enter = px.end_side(which_x)
            for gy2, py, which_y, _iy in steps_y:
                assert py.tri == px.tri
                assert py.end_side(which_y) == s_enter
                sub_x = _restrict(web_x, gx, gx2, px, which_x)
                sub_y = _restrict(web_y, gy, gy2, py, which_y)
                sx = px.end_side(1 - which_x)
                sy = py.end_side(1 - which_y)
                assert sx != s_enter and sy != s_enter, "fold in taut web"
                if sx == sy:
                    stack.append((sub_x, sub_y, above))
                    continue
                # Exiting side s+1 keeps a strand above in the entered
                # frame; exiting side s+2 drops it below.
                demanded = sx == (s_enter + 1) % 3
                out.append(Divergence(px.tri, s_enter, sub_x, sub_y,
                                      sx, sy, above, above != demanded))
    return out


def _restrict(web, germ_in, germ_out, p, which):
    """The stepped germ itself (steps already narrow to single passages)."""
    return germ_out


def geometric_intersection(web_x, web_y):
    """Exact geometric intersection number of two taut webs."""
    total = 0
    for div in corridor_divergences(web_x, web_y):
        if div.crossing:
            total += div.weight
    assert total % 2 == 0, "corridor ends must pair up"
    return total // 2
