"""Compiled leapfrog interior update.

The update overwrites the previous level in place: every entry of ``prev`` is
read exactly once, at the index being written, so no scratch array is needed.
"""

import numba
import numpy as np


@numba.njit(cache=True)
def leapfrog_interior(cur, prev, forcing, r2, dt2):
    """Write level n+1 into ``prev`` on j = 1..N, k = 1..N-1; return max |value|.

    ``cur`` and ``prev`` have shape (N+2, N+1); ``forcing`` is either empty or
    has shape (N, N-1) and is added as ``dt2 * forcing``.  ``r2 = (dt/h)**2``.
    A NaN anywhere in the update makes the returned maximum NaN.
    """
    nj = cur.shape[0] - 1
    nk = cur.shape[1] - 1
    has_f = forcing.size > 0
    peak = 0.0
    for j in range(1, nj):
        for k in range(1, nk):
            c = cur[j, k]
            lap = cur[j + 1, k] + cur[j - 1, k] + cur[j, k + 1] + cur[j, k - 1] - 4.0 * c
            v = 2.0 * c - prev[j, k] + r2 * lap
            if has_f:
                v += dt2 * forcing[j - 1, k - 1]
            prev[j, k] = v
            a = abs(v)
            if a > peak or a != a:
                peak = a
    return peak


NO_FORCING = np.zeros((0, 0))
