"""Brute-force mutual position oracle: search per-edge interleavings
minimizing total chord crossings across triangles."""
from itertools import combinations, product

def chords_of(web, tri):
    """Strand chords of a web in a triangle: ((side, own_pos), (side, own_pos))."""
    out = []
    for p in web.passages:
        if p.tri != tri:
            continue
        for o in range(p.weight):
            out.append(((p.side_a, p.a_pos + o),
                        (p.side_b, p.b_pos + (p.weight - 1 - o))))
    return out

def solve(web_x, web_y):
    cx = web_x.cx
    wx = web_x.edge_weight
    wy = web_y.edge_weight
    shared = sorted(set(e for e in web_x.side_lists if wy(e) > 0))
    # interleaving on edge e (frame 0): tuple of 'x'/'y' of length wx+wy
    choices = {}
    for e in shared:
        opts = []
        n, m = wx(e), wy(e)
        for ys in combinations(range(n + m), m):
            seq = ['x'] * (n + m)
            for i in ys:
                seq[i] = 'y'
            opts.append(tuple(seq))
        choices[e] = opts

    # per-triangle data
    tris = sorted(set(p.tri for p in web_x.passages)
                  | set(p.tri for p in web_y.passages))
    tri_info = []
    for t in tris:
        sides = []  # per side: (edge, k, wx, wy)
        for i in range(3):
            e = cx.tri_edges[t][i]
            k = web_x.side_index(e, t, i) if wx(e) else (
                web_y.side_index(e, t, i))
            sides.append((e, k, wx(e), wy(e)))
        tri_info.append((t, sides, chords_of(web_x, t), chords_of(web_y, t)))

    def tri_cross(t, sides, cxh, cyh, inter):
        # build merged boundary index: for (side, fam, own_pos) -> linear pos
        base = [0, 0, 0]
        tot = 0
        lookup = {}
        for i, (e, k, nx, ny) in enumerate(sides):
            base[i] = tot
            seq = inter.get(e)
            if seq is None:
                seq = tuple(['x'] * nx + ['y'] * ny)  # only one family present
            if k == 1:
                seq = seq[::-1]
            ix = iy = 0
            for j, fam in enumerate(seq):
                if fam == 'x':
                    lookup[(i, 'x', ix)] = tot + j
                    ix += 1
                else:
                    lookup[(i, 'y', iy)] = tot + j
                    iy += 1
            tot += len(seq)
        pts = []
        for (sa, pa), (sb, pb) in cxh:
            pts.append(('x', lookup[(sa, 'x', pa)], lookup[(sb, 'x', pb)]))
        for (sa, pa), (sb, pb) in cyh:
            pts.append(('y', lookup[(sa, 'y', pa)], lookup[(sb, 'y', pb)]))
        n = 0
        for a in range(len(pts)):
            fa, a1, b1 = pts[a]
            lo, hi = min(a1, b1), max(a1, b1)
            for b in range(a + 1, len(pts)):
                fb, a2, b2 = pts[b]
                if fa == fb:
                    continue  # same family never crosses itself (both taut)
                inside = (lo < a2 < hi) + (lo < b2 < hi)
                if inside == 1:
                    n += 1
        return n

    best = None
    best_assigns = []
    keys = shared
    for combo in product(*(choices[e] for e in keys)):
        inter = dict(zip(keys, combo))
        tot = 0
        for t, sides, cxh, cyh in tri_info:
            tot += tri_cross(t, sides, cxh, cyh, inter)
            if best is not None and tot > best:
                break
        if best is None or tot < best:
            best = tot
            best_assigns = [dict(inter)]
        elif tot == best:
            best_assigns.append(dict(inter))
    return best, best_assigns


def recount(web_x, web_y, inter):
    """Total x-y crossings for a fixed per-edge frame-0 interleaving."""
    cx = web_x.cx
    wx = web_x.edge_weight
    wy = web_y.edge_weight
    tris = sorted(set(p.tri for p in web_x.passages)
                  | set(p.tri for p in web_y.passages))
    total = 0
    for t in tris:
        sides = []
        for i in range(3):
            e = cx.tri_edges[t][i]
            k = web_x.side_index(e, t, i)
            sides.append((e, k, wx(e), wy(e)))
        base = [0, 0, 0]
        tot = 0
        lookup = {}
        for i, (e, k, nx, ny) in enumerate(sides):
            base[i] = tot
            seq = inter.get(e)
            if seq is None:
                seq = tuple(['x'] * nx + ['y'] * ny)
            assert len(seq) == nx + ny, (e, seq, nx, ny)
            if k == 1:
                seq = seq[::-1]
            ix = iy = 0
            for j, fam in enumerate(seq):
                if fam == 'x':
                    lookup[(i, 'x', ix)] = tot + j
                    ix += 1
                else:
                    lookup[(i, 'y', iy)] = tot + j
                    iy += 1
            tot += len(seq)
        pts = []
        for (sa, pa), (sb, pb) in chords_of(web_x, t):
            pts.append(('x', lookup[(sa, 'x', pa)], lookup[(sb, 'x', pb)]))
        for (sa, pa), (sb, pb) in chords_of(web_y, t):
            pts.append(('y', lookup[(sa, 'y', pa)], lookup[(sb, 'y', pb)]))
        for a in range(len(pts)):
            fa, a1, b1 = pts[a]
            lo, hi = min(a1, b1), max(a1, b1)
            for b in range(a + 1, len(pts)):
                fb, a2, b2 = pts[b]
                if fa == fb:
                    continue
                if (lo < a2 < hi) + (lo < b2 < hi) == 1:
                    total += 1
    return total
