# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``fittutor._kernel.pure``.

Must stay operation-for-operation identical to the pure kernel so results are
bit-equal; the parity tests enforce this. Inputs arrive as plain Python lists
of floats/ints; outputs are the same flat tuples the pure kernel produces.
"""

from libc.math cimport M_PI, atan2, fabs, sqrt

MATCH = 0
MOVE_UP = 1
MOVE_DOWN = 2
MOVE_LEFT = 3
MOVE_RIGHT = 4
NOT_VISIBLE = 5
INDETERMINATE = 6

AXIS_VERTICAL = 0
AXIS_HORIZONTAL = 1

VERTICAL_EPS = 1e-6

cdef double _VERTICAL_EPS = 1e-6
cdef double _RAD2DEG = 180.0 / M_PI


def extract_pairs(xs, ys, scores, prox, dist, double min_score):
    cdef Py_ssize_t i, a, b, n = len(prox)
    cdef double dx, dy, length, norm_dy, norm_dx
    out = []
    for i in range(n):
        a = prox[i]
        b = dist[i]
        dx = <double> xs[b] - <double> xs[a]
        dy = <double> ys[b] - <double> ys[a]
        length = sqrt(dx * dx + dy * dy)
        if <double> scores[a] < min_score or <double> scores[b] < min_score or length == 0.0:
            out.append((False, False, 0.0, 0.0, 0.0))
            continue
        norm_dy = dy / length
        norm_dx = dx / length
        if fabs(dx) < _VERTICAL_EPS * length:
            out.append((True, True, 0.0, norm_dy, norm_dx))
        else:
            out.append((True, False, dy / dx, norm_dy, norm_dx))
    return out


cdef inline double _fold_deg(double theta):
    if theta > 90.0:
        return theta - 180.0
    if theta <= -90.0:
        return theta + 180.0
    return theta


def compare_pairs(ref, user, axes, double tolerance, bint angle_mode, double angle_tol_deg):
    cdef Py_ssize_t i, n = len(ref)
    cdef bint r_valid, r_vert, u_valid, u_vert, matched
    cdef double r_slope, r_ndy, r_ndx, u_slope, u_ndy, u_ndx, d, dev
    cdef bint has_dev
    cdef int status
    out = []
    for i in range(n):
        r = ref[i]
        u = user[i]
        r_valid = r[0]
        u_valid = u[0]
        if not r_valid or not u_valid:
            out.append((NOT_VISIBLE, None))
            continue
        r_vert = r[1]
        r_slope = <double> r[2]
        r_ndy = <double> r[3]
        r_ndx = <double> r[4]
        u_vert = u[1]
        u_slope = <double> u[2]
        u_ndy = <double> u[3]
        u_ndx = <double> u[4]
        dev = 0.0
        has_dev = not r_vert and not u_vert
        if has_dev:
            dev = fabs(u_slope - r_slope)
        deviation = dev if has_dev else None
        if angle_mode:
            d = _fold_deg(atan2(u_ndy, u_ndx) * _RAD2DEG) - _fold_deg(atan2(r_ndy, r_ndx) * _RAD2DEG)
            if d > 90.0:
                d -= 180.0
            elif d < -90.0:
                d += 180.0
            matched = fabs(d) <= angle_tol_deg
        elif r_vert or u_vert:
            matched = r_vert and u_vert
        else:
            matched = dev <= tolerance
        if matched:
            out.append((MATCH, deviation))
            continue
        if <int> axes[i] == 0:  # vertical axis: arms
            if u_ndy > r_ndy:
                status = MOVE_UP
            elif u_ndy < r_ndy:
                status = MOVE_DOWN
            else:
                status = INDETERMINATE
        else:
            if u_ndx > r_ndx:
                status = MOVE_RIGHT
            elif u_ndx < r_ndx:
                status = MOVE_LEFT
            else:
                status = INDETERMINATE
        out.append((status, deviation))
    return out
