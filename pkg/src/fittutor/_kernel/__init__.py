"""Kernel selection: compiled extension when available, pure Python otherwise.

Set FITTUTOR_PURE_PYTHON=1 to force the pure kernel (used by the benchmark and
the parity tests). Both kernels produce bit-identical results.
"""

import os

from . import pure

if os.environ.get("FITTUTOR_PURE_PYTHON"):
    active = pure
else:
    try:
        from . import _speedups as active  # type: ignore[no-redef]
    except ImportError:
        active = pure

KERNEL_NAME = "pure" if active is pure else "cython"

MATCH = pure.MATCH
MOVE_UP = pure.MOVE_UP
MOVE_DOWN = pure.MOVE_DOWN
MOVE_LEFT = pure.MOVE_LEFT
MOVE_RIGHT = pure.MOVE_RIGHT
NOT_VISIBLE = pure.NOT_VISIBLE
INDETERMINATE = pure.INDETERMINATE

AXIS_VERTICAL = pure.AXIS_VERTICAL
AXIS_HORIZONTAL = pure.AXIS_HORIZONTAL
VERTICAL_EPS = pure.VERTICAL_EPS

extract_pairs = active.extract_pairs
compare_pairs = active.compare_pairs
