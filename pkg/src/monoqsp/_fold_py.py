"""Pure-Python QSP product fold; same contract as the compiled ``_fold``."""

from __future__ import annotations


def fold_cyclic(n: int) -> list[list[list[list[int]]]]:
    """Coefficient tensor of prod_{i=1..n} T(x, y) S(w^i).

    ``out[r][c][a]`` is the length-n vector over 1, t, ..., t^(n-1)
    multiplying x^a y^(n-a) in entry (r, c). After i factors every entry is
    homogeneous of degree i, so only the x-degree needs indexing.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    zero = [0] * n
    one = [1] + [0] * (n - 1)
    # m[r][c][a] for the current degree; identity to start
    m = [[[one], [zero]], [[zero], [one]]]
    for i in range(1, n + 1):
        up = i % n
        nxt = []
        for r in range(2):
            left, right = m[r]
            col0, col1 = [], []
            for a in range(i + 1):
                lo = left[a - 1] if a >= 1 else zero
                ro = right[a - 1] if a >= 1 else zero
                lc = left[a] if a < i else zero
                rc = right[a] if a < i else zero
                u = [p + q for p, q in zip(lo, rc)]
                v = [p + q for p, q in zip(lc, ro)]
                # times w^i rotates up, times w^-i rotates down
                col0.append(u[-up:] + u[:-up] if up else u)
                col1.append(v[up:] + v[:up] if up else v)
            nxt.append([col0, col1])
        m = nxt
    return m
