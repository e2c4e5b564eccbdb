"""Pure-Python reference kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same semantics; :mod:`coarsekit.kernels` picks one at import time.
The surface kernels are written against a small numeric context so the same
code runs on floats and on :mod:`mpmath` numbers (used for precision
escalation).
"""

from __future__ import annotations

import math
from collections import deque

import numpy as np

BACKEND = "python"

# status codes shared with the compiled kernels
OK = 0
TRIVIAL = 1
AMBIGUOUS = 2

# Letter codes: a=0 A=1 b=2 B=3 c=4 C=5 d=6 D=7; inverse is ``code ^ 1``.
# Side k of the octagon (outward normal at angle k*pi/4) carries SIDE_CODE[k];
# the tile across side k is the image of the fundamental octagon under that
# generator.
SIDE_CODE = (0, 3, 1, 2, 4, 7, 5, 6)
RELATOR = (0, 2, 1, 3, 4, 6, 5, 7)


# ---------------------------------------------------------------------------
# graph kernels


def bfs(indptr, indices, sources):
    """Multi-source BFS; unreachable vertices get -1."""
    n = len(indptr) - 1
    dist = np.full(n, -1, dtype=np.int32)
    queue = deque()
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue.append(s)
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for i in range(indptr[v], indptr[v + 1]):
            u = indices[i]
            if dist[u] < 0:
                dist[u] = dv
                queue.append(u)
    return dist


def all_pairs(indptr, indices):
    n = len(indptr) - 1
    out = np.empty((n, n), dtype=np.int32)
    for v in range(n):
        out[v] = bfs(indptr, indices, (v,))
    return out


def four_point_2delta(dm):
    """Twice the four-point delta of a finite metric given as a matrix.

    Maximum over 4-subsets of (largest - middle) of the three pair sums.
    """
    dm = np.asarray(dm, dtype=np.int64)
    m = dm.shape[0]
    best = 0
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                ls = np.arange(k + 1, m)
                if ls.size == 0:
                    continue
                s1 = dm[i, j] + dm[k, ls]
                s2 = dm[i, k] + dm[j, ls]
                s3 = dm[i, ls] + dm[j, k]
                top = np.maximum(np.maximum(s1, s2), s3)
                low = np.minimum(np.minimum(s1, s2), s3)
                mid = s1 + s2 + s3 - top - low
                val = int((top - mid).max())
                if val > best:
                    best = val
    return best


# ---------------------------------------------------------------------------
# numeric contexts


class NumContext:
    """Arithmetic namespace for the surface kernels."""

    def __init__(self, name, num, sqrt, log):
        self.name = name
        self.num = num
        self.sqrt = sqrt
        self.log = log
        one = num(1)
        two = num(2)
        root2 = sqrt(two)
        c = one + root2  # cosh of the inradius of the regular pi/4 octagon
        self.tm = sqrt(c * c - one) / c  # Klein radius of side midpoints
        cosh_r = c * c  # cosh of the circumradius
        self.rk = sqrt(one - one / (cosh_r * cosh_r))  # Klein radius of vertices
        h = root2 / two
        self.normals = (
            (one, num(0)), (h, h), (num(0), one), (-h, h),
            (-one, num(0)), (-h, -h), (num(0), -one), (h, -h),
        )
        self.half = one / two
        self.one = one


FLOAT = NumContext("float", float, math.sqrt, math.log)


def mp_context(dps):
    import mpmath

    ctx = mpmath.mp.clone()
    ctx.dps = dps
    return NumContext("mp%d" % dps, ctx.mpf, ctx.sqrt, ctx.log)


# ---------------------------------------------------------------------------
# SU(1,1) helpers; a matrix is (ar, ai, br, bi) for [[alpha, beta], [conj beta, conj alpha]]


def _mul(m1, m2):
    a1r, a1i, b1r, b1i = m1
    a2r, a2i, b2r, b2i = m2
    # alpha = a1 a2 + b1 conj(b2); beta = a1 b2 + b1 conj(a2)
    return (
        a1r * a2r - a1i * a2i + b1r * b2r + b1i * b2i,
        a1r * a2i + a1i * a2r + b1i * b2r - b1r * b2i,
        a1r * b2r - a1i * b2i + b1r * a2r + b1i * a2i,
        a1r * b2i + a1i * b2r + b1i * a2r - b1r * a2i,
    )


def _identity(ctx):
    z = ctx.num(0)
    return (ctx.one, z, z, z)


def _apply(m, x, y, ctx):
    """Moebius action on a unit boundary point."""
    ar, ai, br, bi = m
    nr = ar * x - ai * y + br
    ni = ar * y + ai * x + bi
    dr = br * x + bi * y + ar
    di = br * y - bi * x - ai
    den = dr * dr + di * di
    wr = (nr * dr + ni * di) / den
    wi = (ni * dr - nr * di) / den
    r = ctx.sqrt(wr * wr + wi * wi)
    return wr / r, wi / r


def _axis(m, ctx):
    """(repelling, attracting) fixed points of a hyperbolic element."""
    ar, ai, br, bi = m
    s = ctx.sqrt(ar * ar - ctx.one)
    if ar < 0:
        s = -s
    b2 = br * br + bi * bi
    vx = (s * br - ai * bi) / b2
    vy = (s * bi + ai * br) / b2
    ux = (-s * br - ai * bi) / b2
    uy = (-s * bi + ai * br) / b2
    return ux, uy, vx, vy


def _clip(ux, uy, vx, vy, tight, eps, ctx):
    """Intersect the oriented geodesic U->V with the octagon.

    Returns (status, s_in, s_out, exit_side); exit_side is -1 when the
    geodesic misses the closed octagon.  Positions are hyperbolic arclength
    along the geodesic (up to a common shift).
    """
    tm = ctx.tm
    half = ctx.half
    s_in = None
    exits = []
    for k in range(8):
        nx, ny = ctx.normals[k]
        fu = ux * nx + uy * ny - tm
        fv = vx * nx + vy * ny - tm
        if abs(fu) < tight and abs(fv) < tight:
            continue  # geodesic runs along this side line
        if fu > 0 and fv > 0:
            return OK, None, None, -1
        if fu > 0 and fv < 0:
            s = half * ctx.log(fu / (-fv))
            if s_in is None or s > s_in:
                s_in = s
        elif fu < 0 and fv > 0:
            exits.append((half * ctx.log((-fu) / fv), k))
    if s_in is None or not exits:
        return OK, None, None, -1
    s_out = min(e[0] for e in exits)
    status = OK
    exit_side = -1
    for s, k in exits:
        gap = s - s_out
        if gap < tight:
            if exit_side < 0 or k < exit_side:
                exit_side = k
        elif gap < eps:
            status = AMBIGUOUS
    gap = s_in - s_out
    if gap > tight:
        if gap < eps:
            return AMBIGUOUS, s_in, s_out, -1
        return OK, s_in, s_out, -1
    return status, s_in, s_out, exit_side


def _is_hyperbolic(m):
    return abs(m[0]) > 1.2  # non-trivial elements have |trace|/2 >= 1 + sqrt(2)/2


def walk_rotations(word, gens, tight, eps, ctx=FLOAT):
    """Local axis data for every cyclic rotation of ``word``.

    Returns ``(status, pieces, exits)`` where ``pieces[j]`` is
    ``(ux, uy, vx, vy, s_in, s_out)`` for the axis of rotation ``j`` and
    ``exits[j]`` the side through which it leaves the octagon (-1 if the axis
    misses it).
    """
    n = len(word)
    ident = _identity(ctx)
    prefix = [ident]
    for c in word:
        prefix.append(_mul(prefix[-1], gens[c]))
    suffix = [ident] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix[j] = _mul(gens[word[j]], suffix[j + 1])
    if not _is_hyperbolic(prefix[n]):
        return TRIVIAL, [], []
    status = OK
    pieces = []
    exits = []
    for j in range(n):
        m = _mul(suffix[j], prefix[j])
        ux, uy, vx, vy = _axis(m, ctx)
        st, s_in, s_out, k = _clip(ux, uy, vx, vy, tight, eps, ctx)
        if st != OK:
            status = AMBIGUOUS
        pieces.append((ux, uy, vx, vy, s_in, s_out))
        exits.append(k)
    return status, pieces, exits


def check_cutting(word, gens, tight, eps, ctx=FLOAT):
    """OK if ``word`` is its own cyclic cutting sequence.

    Returns 3 as soon as some rotation certainly leaves through a side other
    than the one its letter names; otherwise AMBIGUOUS if any rotation was
    undecided, TRIVIAL for elliptic or trivial products, else OK.
    """
    n = len(word)
    ident = _identity(ctx)
    prefix = [ident]
    for c in word:
        prefix.append(_mul(prefix[-1], gens[c]))
    if not _is_hyperbolic(prefix[n]):
        return TRIVIAL
    suffix = ident
    status = OK
    for j in range(n - 1, -1, -1):
        suffix = _mul(gens[word[j]], suffix)
        ux, uy, vx, vy = _axis(_mul(suffix, prefix[j]), ctx)
        st, _, _, k = _clip(ux, uy, vx, vy, tight, eps, ctx)
        if st != OK:
            status = AMBIGUOUS
        elif k < 0 or SIDE_CODE[k] != word[j]:
            return 3
    return status


def walk_general(word, gens, tight, eps, max_steps, ctx=FLOAT):
    """Cutting sequence of the primitive root of the class of ``word``.

    Walks the axis through the tiling by propagating endpoints, so precision
    degrades with translation length; callers verify with
    :func:`check_cutting` and escalate.
    Returns ``(status, letters)``.
    """
    m = _identity(ctx)
    for c in word:
        m = _mul(m, gens[c])
    if not _is_hyperbolic(m):
        return TRIVIAL, []
    ux, uy, vx, vy = _axis(m, ctx)
    inv = {}
    for c in range(8):
        ar, ai, br, bi = gens[c]
        inv[c] = (ar, -ai, -br, -bi)
    # bring the axis into the octagon
    for _ in range(max_steps):
        st, s_in, s_out, k = _clip(ux, uy, vx, vy, tight, eps, ctx)
        if st != OK:
            return AMBIGUOUS, []
        if k >= 0:
            break
        dx, dy = vx - ux, vy - uy
        t = -(ux * dx + uy * dy) / (dx * dx + dy * dy)
        zx, zy = ux + t * dx, uy + t * dy
        best = max(range(8), key=lambda i: zx * ctx.normals[i][0] + zy * ctx.normals[i][1])
        g = inv[SIDE_CODE[best]]
        ux, uy = _apply(g, ux, uy, ctx)
        vx, vy = _apply(g, vx, vy, ctx)
    else:
        return AMBIGUOUS, []
    # advance to a tile crossed with positive length
    for _ in range(max_steps):
        st, s_in, s_out, k = _clip(ux, uy, vx, vy, tight, eps, ctx)
        if st != OK or k < 0:
            return AMBIGUOUS, []
        if s_out - s_in > eps:
            break
        g = inv[SIDE_CODE[k]]
        ux, uy = _apply(g, ux, uy, ctx)
        vx, vy = _apply(g, vx, vy, ctx)
    else:
        return AMBIGUOUS, []
    start = (ux, uy, vx, vy)
    close = 1e-6
    letters = []
    for _ in range(max_steps):
        st, s_in, s_out, k = _clip(ux, uy, vx, vy, tight, eps, ctx)
        if st != OK or k < 0:
            return AMBIGUOUS, []
        letters.append(SIDE_CODE[k])
        g = inv[SIDE_CODE[k]]
        ux, uy = _apply(g, ux, uy, ctx)
        vx, vy = _apply(g, vx, vy, ctx)
        if (abs(ux - start[0]) < close and abs(uy - start[1]) < close
                and abs(vx - start[2]) < close and abs(vy - start[3]) < close):
            return OK, letters
    return AMBIGUOUS, []


def lifts_near(pieces, nbhd, tight, eps, ctx=FLOAT):
    """All translates of the local axes that come within the octagon's circumradius.

    ``nbhd`` lists the group elements whose tiles touch the octagon.
    Returns ``(status, lifts)`` with lifts as ``(ux, uy, vx, vy)``.
    """
    rk = ctx.rk + eps
    lifts = []
    status = OK
    for piece in pieces:
        px, py, qx, qy = piece[0], piece[1], piece[2], piece[3]
        for g in nbhd:
            ux, uy = _apply(g, px, py, ctx)
            vx, vy = _apply(g, qx, qy, ctx)
            dx, dy = vx - ux, vy - uy
            dist = abs(ux * dy - uy * dx) / ctx.sqrt(dx * dx + dy * dy)
            if dist > rk:
                continue
            dup = False
            for lx, ly, mx, my in lifts:
                d = max(abs(ux - lx), abs(uy - ly), abs(vx - mx), abs(vy - my))
                if d < tight:
                    dup = True
                    break
                if d < eps:
                    status = AMBIGUOUS
            if not dup:
                lifts.append((ux, uy, vx, vy))
    return status, lifts


def crossings(pieces, lifts, tight, eps, ctx=FLOAT):
    """Number of (lift, crossing point) incidences along one period of the pieces.

    A lift equal to the piece's own geodesic is skipped, so feeding a curve's
    lifts against its own pieces counts every self-crossing twice.
    Returns ``(status, count)``.
    """
    half = ctx.half
    count = 0
    status = OK
    for ux, uy, vx, vy, s_in, s_out in pieces:
        if s_in is None:
            continue
        for px, py, qx, qy in lifts:
            d_same = max(abs(ux - px), abs(uy - py), abs(vx - qx), abs(vy - qy))
            if d_same < tight:
                continue
            near = min(
                ctx.sqrt((ux - px) ** 2 + (uy - py) ** 2),
                ctx.sqrt((ux - qx) ** 2 + (uy - qy) ** 2),
                ctx.sqrt((vx - px) ** 2 + (vy - py) ** 2),
                ctx.sqrt((vx - qx) ** 2 + (vy - qy) ** 2),
            )
            if near < eps:
                status = AMBIGUOUS
                continue
            ex, ey = qx - px, qy - py
            phi_u = ex * (uy - py) - ey * (ux - px)
            phi_v = ex * (vy - py) - ey * (vx - px)
            if (phi_u > 0) == (phi_v > 0):
                continue
            s = half * ctx.log(phi_u / (-phi_v))
            if s >= s_in - tight and s < s_out - tight:
                count += 1
    return status, count


# ---------------------------------------------------------------------------
# enumeration of cutting sequences


def _forbidden_subwords():
    """Length-5 subwords of cyclic relator words; geodesic words avoid them."""
    rel = list(RELATOR)
    inv = [c ^ 1 for c in reversed(rel)]
    out = set()
    for r in (rel, inv):
        for i in range(8):
            rot = r[i:] + r[:i]
            out.add(tuple(rot[:5]))
    return out


FORBIDDEN5 = frozenset(_forbidden_subwords())


def _lyndon_prefix_ok(w):
    n = len(w)
    for i in range(1, n):
        for j in range(n - i):
            a, b = w[i + j], w[j]
            if a != b:
                if a < b:
                    return False
                break
    return True


def _is_lyndon(w):
    n = len(w)
    for i in range(1, n):
        rot = w[i:] + w[:i]
        if rot <= w:
            return False
    return True


def enumerate_cutting_words(max_len, gens, tight, eps):
    """Primitive cyclic cutting sequences of length <= max_len.

    Enumerates Lyndon words (minimal rotation, aperiodic) that are cyclically
    reduced and avoid relator halves, and keeps those passing
    :func:`check_cutting`.  Returns a list of ``(word, status)`` in shortlex
    order, with status OK or AMBIGUOUS.
    """
    gens = _gens_tuples(gens)
    out = []
    for n in range(1, max_len + 1):
        w = []

        def rec():
            depth = len(w)
            if depth == n:
                if n > 1 and w[-1] == (w[0] ^ 1):
                    return
                if not _is_lyndon(w):
                    return
                if n >= 5:
                    ext = w + w[:4]
                    for i in range(n):
                        if tuple(ext[i:i + 5]) in FORBIDDEN5:
                            return
                st = check_cutting(w, gens, tight, eps)
                if st == OK or st == AMBIGUOUS:
                    out.append((tuple(w), st))
                return
            for c in range(8):
                if depth and c == (w[-1] ^ 1):
                    continue
                if depth == 0 and n > 1 and c == 7:
                    continue
                w.append(c)
                if (depth + 1 < 5 or tuple(w[-5:]) not in FORBIDDEN5) and _lyndon_prefix_ok(w):
                    rec()
                w.pop()

        rec()
    return out


# ---------------------------------------------------------------------------
# double-precision array API (mirrors the compiled kernels)


def _gens_tuples(gens):
    return [tuple(float(x) for x in row) for row in np.asarray(gens, dtype=np.float64)]


def _pieces_array(pieces):
    out = np.full((len(pieces), 6), np.nan)
    for i, p in enumerate(pieces):
        out[i, :4] = p[:4]
        if p[4] is not None:
            out[i, 4] = p[4]
            out[i, 5] = p[5]
    return out


def _pieces_tuples(arr):
    out = []
    for row in np.asarray(arr, dtype=np.float64):
        r = [float(x) for x in row]
        if math.isnan(r[4]):
            r[4] = r[5] = None
        out.append(tuple(r))
    return out


def rotation_walk(word, gens, tight, eps):
    status, pieces, exits = walk_rotations(
        [int(c) for c in word], _gens_tuples(gens), tight, eps)
    return status, _pieces_array(pieces), np.asarray(exits, dtype=np.int64)


def cutting_check(word, gens, tight, eps):
    return check_cutting([int(c) for c in word], _gens_tuples(gens), tight, eps)


def general_walk(word, gens, tight, eps, max_steps):
    return walk_general([int(c) for c in word], _gens_tuples(gens), tight, eps, max_steps)


def lift_set(pieces, nbhd, tight, eps):
    status, lifts = lifts_near(_pieces_tuples(pieces), _gens_tuples(nbhd), tight, eps)
    return status, np.asarray(lifts, dtype=np.float64).reshape(-1, 4)


def count_crossings(pieces, lifts, tight, eps):
    lifts = [tuple(float(x) for x in row) for row in np.asarray(lifts, dtype=np.float64)]
    return crossings(_pieces_tuples(pieces), lifts, tight, eps)


# ---------------------------------------------------------------------------
# quasi-geodesic path enumeration


def qg_paths(indptr, indices, dm, x, y, gapmax, is_cone, cap):
    """All efficient simplicial paths x -> y satisfying the quasi-geodesic lower bound.

    A path ``g`` qualifies when ``t - s <= gapmax[d(g(s), g(t))]`` for all
    ``s < t``; every step moves along an edge and each cone vertex is used at
    most once.  Prefixes are pruned with the same inequality and with a
    look-ahead against the distance to ``y``.  Returns ``(flat, offsets,
    truncated)``; path ``i`` is ``flat[offsets[i]:offsets[i + 1]]``.
    """
    dm = np.asarray(dm)
    gapmax = [int(v) for v in gapmax]
    dy = [int(v) for v in dm[:, y]]
    limit = gapmax[int(dm[x, y])]
    path = [int(x)]
    used = set()
    flat = []
    offsets = [0]
    truncated = False

    def rec(v, t):
        nonlocal truncated
        if v == y:
            if len(offsets) - 1 >= cap:
                truncated = True
                return
            flat.extend(path)
            offsets.append(len(flat))
        if t >= limit:
            return
        t1 = t + 1
        for i in range(indptr[v], indptr[v + 1]):
            u = int(indices[i])
            if is_cone[u] and u in used:
                continue
            row = dm[u]
            du = dy[u]
            good = True
            for s in range(t1):
                w = path[s]
                if t1 - s > gapmax[row[w]] or t1 + du - s > gapmax[dy[w]]:
                    good = False
                    break
            if not good:
                continue
            path.append(u)
            if is_cone[u]:
                used.add(u)
            rec(u, t1)
            if is_cone[u]:
                used.discard(u)
            path.pop()
            if truncated:
                return

    rec(int(x), 0)
    return (np.asarray(flat, dtype=np.int64), np.asarray(offsets, dtype=np.int64), truncated)
