# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled twins of the kernels in ``_pykernels`` (double precision only)."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, log, fabs, NAN, isnan

cnp.import_array()

from ._pykernels import FORBIDDEN5 as _FORBIDDEN5_PY

BACKEND = "compiled"

cdef int OK = 0
cdef int TRIVIAL = 1
cdef int AMBIGUOUS = 2
cdef int NOT_CUTTING = 3

cdef int SIDE_CODE[8]
SIDE_CODE[:] = [0, 3, 1, 2, 4, 7, 5, 6]

cdef double TM, RK
cdef double NX[8]
cdef double NY[8]


cdef void _init_geometry():
    global TM, RK
    cdef double c = 1.0 + sqrt(2.0)
    cdef double cosh_r = c * c
    cdef double h = sqrt(2.0) / 2.0
    TM = sqrt(c * c - 1.0) / c
    RK = sqrt(1.0 - 1.0 / (cosh_r * cosh_r))
    NX[:] = [1.0, h, 0.0, -h, -1.0, -h, 0.0, h]
    NY[:] = [0.0, h, 1.0, h, 0.0, -h, -1.0, -h]


_init_geometry()


# ---------------------------------------------------------------------------
# graph kernels


def bfs(indptr, indices, sources):
    cdef const cnp.int64_t[:] ip = np.asarray(indptr, dtype=np.int64)
    cdef const cnp.int64_t[:] ix = np.asarray(indices, dtype=np.int64)
    cdef Py_ssize_t n = ip.shape[0] - 1
    out = np.full(n, -1, dtype=np.int32)
    cdef cnp.int32_t[:] dist = out
    cdef cnp.int64_t[:] queue = np.empty(max(n, 1), dtype=np.int64)
    cdef Py_ssize_t head = 0, tail = 0, i
    cdef cnp.int64_t v, u, s
    cdef int dv
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue[tail] = s
            tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        dv = dist[v] + 1
        for i in range(ip[v], ip[v + 1]):
            u = ix[i]
            if dist[u] < 0:
                dist[u] = dv
                queue[tail] = u
                tail += 1
    return out


def all_pairs(indptr, indices):
    cdef const cnp.int64_t[:] ip = np.asarray(indptr, dtype=np.int64)
    cdef const cnp.int64_t[:] ix = np.asarray(indices, dtype=np.int64)
    cdef Py_ssize_t n = ip.shape[0] - 1
    out = np.full((n, n), -1, dtype=np.int32)
    cdef cnp.int32_t[:, :] dm = out
    cdef cnp.int64_t[:] queue = np.empty(max(n, 1), dtype=np.int64)
    cdef Py_ssize_t head, tail, i, src
    cdef cnp.int64_t v, u
    cdef int dv
    with nogil:
        for src in range(n):
            head = 0
            tail = 1
            queue[0] = src
            dm[src, src] = 0
            while head < tail:
                v = queue[head]
                head += 1
                dv = dm[src, v] + 1
                for i in range(ip[v], ip[v + 1]):
                    u = ix[i]
                    if dm[src, u] < 0:
                        dm[src, u] = dv
                        queue[tail] = u
                        tail += 1
    return out


def four_point_2delta(dm_in):
    cdef const cnp.int64_t[:, :] dm = np.ascontiguousarray(dm_in, dtype=np.int64)
    cdef Py_ssize_t m = dm.shape[0], i, j, k, l
    cdef cnp.int64_t s1, s2, s3, top, low, mid, best = 0
    with nogil:
        for i in range(m):
            for j in range(i + 1, m):
                for k in range(j + 1, m):
                    for l in range(k + 1, m):
                        s1 = dm[i, j] + dm[k, l]
                        s2 = dm[i, k] + dm[j, l]
                        s3 = dm[i, l] + dm[j, k]
                        top = s1
                        if s2 > top:
                            top = s2
                        if s3 > top:
                            top = s3
                        low = s1
                        if s2 < low:
                            low = s2
                        if s3 < low:
                            low = s3
                        mid = s1 + s2 + s3 - top - low
                        if top - mid > best:
                            best = top - mid
    return int(best)


# ---------------------------------------------------------------------------
# SU(1,1) helpers; a matrix is double[4] = (ar, ai, br, bi)


cdef inline void _mul(const double* m1, const double* m2, double* out) noexcept nogil:
    cdef double a1r = m1[0], a1i = m1[1], b1r = m1[2], b1i = m1[3]
    cdef double a2r = m2[0], a2i = m2[1], b2r = m2[2], b2i = m2[3]
    out[0] = a1r * a2r - a1i * a2i + b1r * b2r + b1i * b2i
    out[1] = a1r * a2i + a1i * a2r + b1i * b2r - b1r * b2i
    out[2] = a1r * b2r - a1i * b2i + b1r * a2r + b1i * a2i
    out[3] = a1r * b2i + a1i * b2r + b1i * a2r - b1r * a2i


cdef inline void _set_identity(double* m) noexcept nogil:
    m[0] = 1.0
    m[1] = 0.0
    m[2] = 0.0
    m[3] = 0.0


cdef inline void _apply(const double* m, double x, double y, double* wx, double* wy) noexcept nogil:
    cdef double ar = m[0], ai = m[1], br = m[2], bi = m[3]
    cdef double nr = ar * x - ai * y + br
    cdef double ni = ar * y + ai * x + bi
    cdef double dr = br * x + bi * y + ar
    cdef double di = br * y - bi * x - ai
    cdef double den = dr * dr + di * di
    cdef double rr = (nr * dr + ni * di) / den
    cdef double ri = (ni * dr - nr * di) / den
    cdef double r = sqrt(rr * rr + ri * ri)
    wx[0] = rr / r
    wy[0] = ri / r


cdef inline void _axis(const double* m, double* p) noexcept nogil:
    cdef double ar = m[0], ai = m[1], br = m[2], bi = m[3]
    cdef double s = sqrt(ar * ar - 1.0)
    if ar < 0:
        s = -s
    cdef double b2 = br * br + bi * bi
    p[2] = (s * br - ai * bi) / b2
    p[3] = (s * bi + ai * br) / b2
    p[0] = (-s * br - ai * bi) / b2
    p[1] = (-s * bi + ai * br) / b2


cdef inline bint _is_hyperbolic(const double* m) noexcept nogil:
    return fabs(m[0]) > 1.2


cdef int _clip(double ux, double uy, double vx, double vy, double tight, double eps,
               double* s_in_out, double* s_out_out, int* exit_side) noexcept nogil:
    """Twin of ``_pykernels._clip``; a miss sets s_in/s_out to NaN unless both exist."""
    cdef double fu, fv, s, s_in = 0.0, s_out = 0.0, gap
    cdef bint have_in = False
    cdef double ex_s[8]
    cdef int ex_k[8]
    cdef int n_ex = 0, k, i, status
    s_in_out[0] = NAN
    s_out_out[0] = NAN
    exit_side[0] = -1
    for k in range(8):
        fu = ux * NX[k] + uy * NY[k] - TM
        fv = vx * NX[k] + vy * NY[k] - TM
        if fabs(fu) < tight and fabs(fv) < tight:
            continue
        if fu > 0 and fv > 0:
            return OK
        if fu > 0 and fv < 0:
            s = 0.5 * log(fu / (-fv))
            if not have_in or s > s_in:
                s_in = s
                have_in = True
        elif fu < 0 and fv > 0:
            ex_s[n_ex] = 0.5 * log((-fu) / fv)
            ex_k[n_ex] = k
            n_ex += 1
    if not have_in or n_ex == 0:
        return OK
    s_out = ex_s[0]
    for i in range(1, n_ex):
        if ex_s[i] < s_out:
            s_out = ex_s[i]
    s_in_out[0] = s_in
    s_out_out[0] = s_out
    status = OK
    for i in range(n_ex):
        gap = ex_s[i] - s_out
        if gap < tight:
            if exit_side[0] < 0 or ex_k[i] < exit_side[0]:
                exit_side[0] = ex_k[i]
        elif gap < eps:
            status = AMBIGUOUS
    gap = s_in - s_out
    if gap > tight:
        exit_side[0] = -1
        if gap < eps:
            return AMBIGUOUS
        return OK
    return status


cdef const double[:, :] _gens_view(gens):
    return np.ascontiguousarray(gens, dtype=np.float64).reshape(-1, 4)


# ---------------------------------------------------------------------------
# surface kernels


def rotation_walk(word, gens, double tight, double eps):
    cdef const cnp.int64_t[:] w = np.asarray(word, dtype=np.int64)
    cdef const double[:, :] g = _gens_view(gens)
    cdef Py_ssize_t n = w.shape[0], j
    cdef double[:, :] prefix = np.empty((n + 1, 4))
    cdef double[:, :] suffix = np.empty((n + 1, 4))
    pieces_arr = np.full((n, 6), np.nan)
    exits_arr = np.full(n, -1, dtype=np.int64)
    cdef double[:, :] pieces = pieces_arr
    cdef cnp.int64_t[:] exits = exits_arr
    cdef double m[4]
    cdef double s_in, s_out
    cdef int k, st, status = OK
    _set_identity(&prefix[0, 0])
    for j in range(n):
        _mul(&prefix[j, 0], &g[w[j], 0], &prefix[j + 1, 0])
    _set_identity(&suffix[n, 0])
    for j in range(n - 1, -1, -1):
        _mul(&g[w[j], 0], &suffix[j + 1, 0], &suffix[j, 0])
    if not _is_hyperbolic(&prefix[n, 0]):
        return TRIVIAL, np.full((0, 6), np.nan), np.zeros(0, dtype=np.int64)
    for j in range(n):
        _mul(&suffix[j, 0], &prefix[j, 0], m)
        _axis(m, &pieces[j, 0])
        st = _clip(pieces[j, 0], pieces[j, 1], pieces[j, 2], pieces[j, 3], tight, eps,
                   &s_in, &s_out, &k)
        if st != OK:
            status = AMBIGUOUS
        pieces[j, 4] = s_in
        pieces[j, 5] = s_out
        exits[j] = k
    return status, pieces_arr, exits_arr


cdef int _cutting_core(const cnp.int64_t* w, Py_ssize_t n, const double[:, :] g, double* prefix,
                       double tight, double eps) noexcept nogil:
    """Check with ``prefix`` (4*(n+1) doubles) already holding the prefix products."""
    cdef double suffix[4]
    cdef double tmp[4]
    cdef double m[4]
    cdef double p[4]
    cdef double s_in, s_out
    cdef int k, st, status = OK
    cdef Py_ssize_t j
    if not _is_hyperbolic(&prefix[4 * n]):
        return TRIVIAL
    _set_identity(suffix)
    for j in range(n - 1, -1, -1):
        _mul(&g[w[j], 0], suffix, tmp)
        suffix[0] = tmp[0]
        suffix[1] = tmp[1]
        suffix[2] = tmp[2]
        suffix[3] = tmp[3]
        _mul(suffix, &prefix[4 * j], m)
        _axis(m, p)
        st = _clip(p[0], p[1], p[2], p[3], tight, eps, &s_in, &s_out, &k)
        if st != OK:
            status = AMBIGUOUS
        elif k < 0 or SIDE_CODE[k] != w[j]:
            return NOT_CUTTING
    return status


def cutting_check(word, gens, double tight, double eps):
    w_arr = np.ascontiguousarray(word, dtype=np.int64)
    cdef const cnp.int64_t[:] w = w_arr
    cdef const double[:, :] g = _gens_view(gens)
    cdef Py_ssize_t n = w.shape[0], j
    cdef double[:, :] prefix = np.empty((n + 1, 4))
    _set_identity(&prefix[0, 0])
    for j in range(n):
        _mul(&prefix[j, 0], &g[w[j], 0], &prefix[j + 1, 0])
    if n == 0:
        return TRIVIAL
    return _cutting_core(&w[0], n, g, &prefix[0, 0], tight, eps)


def general_walk(word, gens, double tight, double eps, max_steps):
    cdef const cnp.int64_t[:] w = np.asarray(word, dtype=np.int64)
    cdef const double[:, :] g = _gens_view(gens)
    cdef Py_ssize_t n = w.shape[0], j
    cdef long steps = int(max_steps), it
    cdef double m[4]
    cdef double tmp[4]
    cdef double p[4]
    cdef double inv[8][4]
    cdef double ux, uy, vx, vy, dx, dy, t, zx, zy, val, bestval
    cdef double s_in, s_out, close = 1e-6
    cdef double sx, sy, tx, ty
    cdef int st, k, best, i, c
    letters = []
    _set_identity(m)
    for j in range(n):
        _mul(m, &g[w[j], 0], tmp)
        m[0] = tmp[0]
        m[1] = tmp[1]
        m[2] = tmp[2]
        m[3] = tmp[3]
    if not _is_hyperbolic(m):
        return TRIVIAL, []
    _axis(m, p)
    ux, uy, vx, vy = p[0], p[1], p[2], p[3]
    for c in range(8):
        inv[c][0] = g[c, 0]
        inv[c][1] = -g[c, 1]
        inv[c][2] = -g[c, 2]
        inv[c][3] = -g[c, 3]
    found = False
    for it in range(steps):
        st = _clip(ux, uy, vx, vy, tight, eps, &s_in, &s_out, &k)
        if st != OK:
            return AMBIGUOUS, []
        if k >= 0:
            found = True
            break
        dx = vx - ux
        dy = vy - uy
        t = -(ux * dx + uy * dy) / (dx * dx + dy * dy)
        zx = ux + t * dx
        zy = uy + t * dy
        best = 0
        bestval = zx * NX[0] + zy * NY[0]
        for i in range(1, 8):
            val = zx * NX[i] + zy * NY[i]
            if val > bestval:
                bestval = val
                best = i
        c = SIDE_CODE[best]
        _apply(inv[c], ux, uy, &ux, &uy)
        _apply(inv[c], vx, vy, &vx, &vy)
    if not found:
        return AMBIGUOUS, []
    found = False
    for it in range(steps):
        st = _clip(ux, uy, vx, vy, tight, eps, &s_in, &s_out, &k)
        if st != OK or k < 0:
            return AMBIGUOUS, []
        if s_out - s_in > eps:
            found = True
            break
        c = SIDE_CODE[k]
        _apply(inv[c], ux, uy, &ux, &uy)
        _apply(inv[c], vx, vy, &vx, &vy)
    if not found:
        return AMBIGUOUS, []
    sx, sy, tx, ty = ux, uy, vx, vy
    for it in range(steps):
        st = _clip(ux, uy, vx, vy, tight, eps, &s_in, &s_out, &k)
        if st != OK or k < 0:
            return AMBIGUOUS, []
        c = SIDE_CODE[k]
        letters.append(c)
        _apply(inv[c], ux, uy, &ux, &uy)
        _apply(inv[c], vx, vy, &vx, &vy)
        if (fabs(ux - sx) < close and fabs(uy - sy) < close
                and fabs(vx - tx) < close and fabs(vy - ty) < close):
            return OK, letters
    return AMBIGUOUS, []


def lift_set(pieces_in, nbhd_in, double tight, double eps):
    cdef const double[:, :] pieces = np.ascontiguousarray(pieces_in, dtype=np.float64).reshape(-1, 6)
    cdef const double[:, :] nbhd = _gens_view(nbhd_in)
    cdef Py_ssize_t np_ = pieces.shape[0], ng = nbhd.shape[0], i, j, l
    out_arr = np.empty((np_ * ng, 4))
    cdef double[:, :] out = out_arr
    cdef Py_ssize_t count = 0
    cdef double rk = RK + eps
    cdef double ux, uy, vx, vy, dx, dy, dist, d, e
    cdef int status = OK
    cdef bint dup
    with nogil:
        for i in range(np_):
            for j in range(ng):
                _apply(&nbhd[j, 0], pieces[i, 0], pieces[i, 1], &ux, &uy)
                _apply(&nbhd[j, 0], pieces[i, 2], pieces[i, 3], &vx, &vy)
                dx = vx - ux
                dy = vy - uy
                dist = fabs(ux * dy - uy * dx) / sqrt(dx * dx + dy * dy)
                if dist > rk:
                    continue
                dup = False
                for l in range(count):
                    d = fabs(ux - out[l, 0])
                    e = fabs(uy - out[l, 1])
                    if e > d:
                        d = e
                    e = fabs(vx - out[l, 2])
                    if e > d:
                        d = e
                    e = fabs(vy - out[l, 3])
                    if e > d:
                        d = e
                    if d < tight:
                        dup = True
                        break
                    if d < eps:
                        status = AMBIGUOUS
                if not dup:
                    out[count, 0] = ux
                    out[count, 1] = uy
                    out[count, 2] = vx
                    out[count, 3] = vy
                    count += 1
    return status, out_arr[:count].copy()


cdef inline double _dist2(double ax, double ay, double bx, double by) noexcept nogil:
    return sqrt((ax - bx) * (ax - bx) + (ay - by) * (ay - by))


def count_crossings(pieces_in, lifts_in, double tight, double eps):
    cdef const double[:, :] pieces = np.ascontiguousarray(pieces_in, dtype=np.float64).reshape(-1, 6)
    cdef const double[:, :] lifts = np.ascontiguousarray(lifts_in, dtype=np.float64).reshape(-1, 4)
    cdef Py_ssize_t i, j
    cdef double ux, uy, vx, vy, s_in, s_out, px, py, qx, qy
    cdef double d, e, near, ex, ey, phi_u, phi_v, s
    cdef long count = 0
    cdef int status = OK
    with nogil:
        for i in range(pieces.shape[0]):
            ux = pieces[i, 0]
            uy = pieces[i, 1]
            vx = pieces[i, 2]
            vy = pieces[i, 3]
            s_in = pieces[i, 4]
            s_out = pieces[i, 5]
            if isnan(s_in):
                continue
            for j in range(lifts.shape[0]):
                px = lifts[j, 0]
                py = lifts[j, 1]
                qx = lifts[j, 2]
                qy = lifts[j, 3]
                d = fabs(ux - px)
                e = fabs(uy - py)
                if e > d:
                    d = e
                e = fabs(vx - qx)
                if e > d:
                    d = e
                e = fabs(vy - qy)
                if e > d:
                    d = e
                if d < tight:
                    continue
                near = _dist2(ux, uy, px, py)
                e = _dist2(ux, uy, qx, qy)
                if e < near:
                    near = e
                e = _dist2(vx, vy, px, py)
                if e < near:
                    near = e
                e = _dist2(vx, vy, qx, qy)
                if e < near:
                    near = e
                if near < eps:
                    status = AMBIGUOUS
                    continue
                ex = qx - px
                ey = qy - py
                phi_u = ex * (uy - py) - ey * (ux - px)
                phi_v = ex * (vy - py) - ey * (vx - px)
                if (phi_u > 0) == (phi_v > 0):
                    continue
                s = 0.5 * log(phi_u / (-phi_v))
                if s >= s_in - tight and s < s_out - tight:
                    count += 1
    return status, count


# ---------------------------------------------------------------------------
# enumeration


cdef struct EnumState:
    int n
    int w[64]
    double prefix[65 * 4]
    double tight
    double eps


cdef bint _lyndon_prefix_ok(const int* w, int n) noexcept nogil:
    cdef int i, j, a, b
    for i in range(1, n):
        for j in range(n - i):
            a = w[i + j]
            b = w[j]
            if a != b:
                if a < b:
                    return False
                break
    return True


cdef bint _is_lyndon(const int* w, int n) noexcept nogil:
    cdef int i, j, a, b
    for i in range(1, n):
        # compare rotation starting at i with w
        for j in range(n):
            a = w[(i + j) % n]
            b = w[j]
            if a != b:
                if a < b:
                    return False
                break
        else:
            return False
    return True


cdef class _Enumerator:
    cdef EnumState st
    cdef const double[:, :] g
    cdef unsigned char forb[32768]
    cdef list out

    def __init__(self, gens, double tight, double eps):
        cdef int idx, i
        self.g = _gens_view(gens)
        self.st.tight = tight
        self.st.eps = eps
        self.out = []
        for i in range(32768):
            self.forb[i] = 0
        for f in _FORBIDDEN5_PY:
            idx = 0
            for c in f:
                idx = idx * 8 + c
            self.forb[idx] = 1

    cdef inline bint _forbidden_at(self, const int* w) noexcept nogil:
        return self.forb[(((w[0] * 8 + w[1]) * 8 + w[2]) * 8 + w[3]) * 8 + w[4]] != 0

    cdef void _leaf(self) except *:
        cdef int n = self.st.n, i, j
        cdef int ext[72]
        cdef cnp.int64_t lw[64]
        cdef int res
        if n > 1 and self.st.w[n - 1] == (self.st.w[0] ^ 1):
            return
        if not _is_lyndon(self.st.w, n):
            return
        if n >= 5:
            for i in range(n):
                ext[i] = self.st.w[i]
            for i in range(4):
                ext[n + i] = self.st.w[i]
            for i in range(n):
                if self._forbidden_at(&ext[i]):
                    return
        for i in range(n):
            lw[i] = self.st.w[i]
        res = _cutting_core(lw, n, self.g, self.st.prefix, self.st.tight, self.st.eps)
        if res == OK or res == AMBIGUOUS:
            self.out.append((tuple([self.st.w[j] for j in range(n)]), res))

    cdef void _rec(self, int depth) except *:
        cdef int c
        if depth == self.st.n:
            self._leaf()
            return
        for c in range(8):
            if depth and c == (self.st.w[depth - 1] ^ 1):
                continue
            if depth == 0 and self.st.n > 1 and c == 7:
                continue
            self.st.w[depth] = c
            if depth + 1 >= 5 and self._forbidden_at(&self.st.w[depth - 4]):
                continue
            if not _lyndon_prefix_ok(self.st.w, depth + 1):
                continue
            _mul(&self.st.prefix[4 * depth], &self.g[c, 0], &self.st.prefix[4 * (depth + 1)])
            self._rec(depth + 1)

    def run(self, int max_len):
        if max_len > 64:
            raise ValueError("max_len above 64 is not supported")
        _set_identity(self.st.prefix)
        for n in range(1, max_len + 1):
            self.st.n = n
            self._rec(0)
        return self.out


def enumerate_cutting_words(max_len, gens, tight, eps):
    return _Enumerator(gens, tight, eps).run(int(max_len))


# ---------------------------------------------------------------------------
# quasi-geodesic path enumeration


def qg_paths(indptr, indices, dm_in, x, y, gapmax_in, is_cone_in, cap):
    cdef const cnp.int64_t[:] ip = np.asarray(indptr, dtype=np.int64)
    cdef const cnp.int64_t[:] ix = np.asarray(indices, dtype=np.int64)
    cdef const cnp.int32_t[:, :] dm = np.ascontiguousarray(dm_in, dtype=np.int32)
    cdef const cnp.int64_t[:] gapmax = np.asarray(gapmax_in, dtype=np.int64)
    cdef const cnp.uint8_t[:] is_cone = np.asarray(is_cone_in, dtype=np.uint8)
    cdef Py_ssize_t n = dm.shape[0]
    cdef long ycol = y
    cdef long limit = gapmax[dm[x, ycol]]
    cdef long max_paths = cap
    cdef cnp.int64_t[:] path = np.empty(limit + 1, dtype=np.int64)
    cdef cnp.int64_t[:] cursor = np.empty(limit + 1, dtype=np.int64)
    cdef cnp.uint8_t[:] used = np.zeros(n, dtype=np.uint8)
    cdef long t = 0, s, t1, u, v, w, du, count = 0
    cdef bint good, truncated = False
    flat = []
    offsets = [0]
    cdef long total = 0
    path[0] = x
    cursor[0] = ip[x]
    # reaching y at depth 0
    if x == y:
        flat.append(x)
        total += 1
        offsets.append(total)
        count += 1
    while t >= 0:
        v = path[t]
        if t >= limit or cursor[t] >= ip[v + 1]:
            # backtrack
            if is_cone[v]:
                used[v] = 0
            t -= 1
            continue
        u = ix[cursor[t]]
        cursor[t] += 1
        if is_cone[u] and used[u]:
            continue
        t1 = t + 1
        du = dm[u, ycol]
        good = True
        for s in range(t1):
            w = path[s]
            if t1 - s > gapmax[dm[u, w]] or t1 + du - s > gapmax[dm[w, ycol]]:
                good = False
                break
        if not good:
            continue
        path[t1] = u
        cursor[t1] = ip[u]
        if is_cone[u]:
            used[u] = 1
        t = t1
        if u == y:
            if count >= max_paths:
                truncated = True
                break
            flat.extend([path[s] for s in range(t + 1)])
            total += t + 1
            offsets.append(total)
            count += 1
    return (np.asarray(flat, dtype=np.int64), np.asarray(offsets, dtype=np.int64), bool(truncated))
