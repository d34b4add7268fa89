"""Pure-Python kernel for per-frame slope extraction and comparison.

This is the fallback twin of the compiled kernel in ``_speedups.pyx``. The two
must stay operation-for-operation identical so results are bit-equal: same
arithmetic, same order, plain IEEE doubles, ``sqrt(dx*dx + dy*dy)`` rather than
``hypot`` (whose rounding differs between libms).

Profile entries are flat tuples ``(valid, vertical, slope, norm_dy, norm_dx)``;
comparison results are ``(status_code, deviation_or_None)``.
"""

from __future__ import annotations

import math

# Status codes shared with the compiled kernel.
MATCH = 0
MOVE_UP = 1
MOVE_DOWN = 2
MOVE_LEFT = 3
MOVE_RIGHT = 4
NOT_VISIBLE = 5
INDETERMINATE = 6

# Suggestion axes.
AXIS_VERTICAL = 0  # arms: corrections are up/down
AXIS_HORIZONTAL = 1  # legs: corrections are left/right

#: |dx| below this fraction of limb length counts as a vertical limb.
VERTICAL_EPS = 1e-6

_RAD2DEG = 180.0 / math.pi


def extract_pairs(xs, ys, scores, prox, dist, min_score):
    """Build flat profile entries for each (prox[i], dist[i]) part-index pair.

    An entry is invalid when either endpoint score is below min_score or the
    limb has zero length; invalid entries carry zeros so serialization stays
    deterministic.
    """
    out = []
    for i in range(len(prox)):
        a = prox[i]
        b = dist[i]
        dx = xs[b] - xs[a]
        dy = ys[b] - ys[a]
        length = math.sqrt(dx * dx + dy * dy)
        if scores[a] < min_score or scores[b] < min_score or length == 0.0:
            out.append((False, False, 0.0, 0.0, 0.0))
            continue
        norm_dy = dy / length
        norm_dx = dx / length
        if abs(dx) < VERTICAL_EPS * length:
            out.append((True, True, 0.0, norm_dy, norm_dx))
        else:
            out.append((True, False, dy / dx, norm_dy, norm_dx))
    return out


def _fold_deg(theta):
    # Fold a ray angle in [-180, 180] to a line orientation in (-90, 90].
    if theta > 90.0:
        return theta - 180.0
    if theta <= -90.0:
        return theta + 180.0
    return theta


def compare_pairs(ref, user, axes, tolerance, angle_mode, angle_tol_deg):
    """Compare two entry lists pairwise, yielding (status, deviation) tuples.

    Deviation is the absolute slope difference, present only when both sides
    are valid and finite. Direction on a failed tolerance: arms move up/down by
    norm_dy, legs left/right by norm_dx; exact ties are indeterminate.
    """
    out = []
    for i in range(len(ref)):
        r_valid, r_vert, r_slope, r_ndy, r_ndx = ref[i]
        u_valid, u_vert, u_slope, u_ndy, u_ndx = user[i]
        if not r_valid or not u_valid:
            out.append((NOT_VISIBLE, None))
            continue
        deviation = None
        if not r_vert and not u_vert:
            deviation = abs(u_slope - r_slope)
        if angle_mode:
            d = _fold_deg(math.atan2(u_ndy, u_ndx) * _RAD2DEG) - _fold_deg(
                math.atan2(r_ndy, r_ndx) * _RAD2DEG
            )
            if d > 90.0:
                d -= 180.0
            elif d < -90.0:
                d += 180.0
            matched = abs(d) <= angle_tol_deg
        elif r_vert or u_vert:
            matched = r_vert and u_vert
        else:
            matched = deviation <= tolerance
        if matched:
            out.append((MATCH, deviation))
            continue
        if axes[i] == AXIS_VERTICAL:
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
