"""Independent brute-force oracles shared by the test modules.

Everything here is deliberately dumb and separate from the library code
paths it checks.
"""
from __future__ import annotations

from collections import deque


def escape_step_bruteforce(x0, y0, c1, c2, max_iter, bound):
    """Reference escape step via literal cartesian iteration; 0 = survived."""
    x, y = x0, y0
    for n in range(1, max_iter + 1):
        x, y = x * x + y * y + c1, 2.0 * x * y + c2
        if abs(x) > 1e150 or abs(y) > 1e150:
            return 0
        q = x * x - y * y
        if abs(q) > bound:
            return n
    return 0


def flood_bfs(mask, seed_order="row"):
    """4-connected component sizes and Chebyshev bbox diameters via BFS.

    mask: 2-D boolean array-like. seed_order chooses the traversal order of
    the outer scan ("row" or "reverse"); the partition must not depend on it.
    Returns (count, sorted_sizes_desc, max_diameter_px).
    """
    h = len(mask)
    w = len(mask[0]) if h else 0
    seen = [[False] * w for _ in range(h)]
    sizes = []
    max_diam = 0
    seeds = [(j, i) for j in range(h) for i in range(w)]
    if seed_order == "reverse":
        seeds.reverse()
    for j0, i0 in seeds:
        if not mask[j0][i0] or seen[j0][i0]:
            continue
        queue = deque([(j0, i0)])
        seen[j0][i0] = True
        size = 0
        jmin = jmax = j0
        imin = imax = i0
        while queue:
            j, i = queue.popleft()
            size += 1
            jmin, jmax = min(jmin, j), max(jmax, j)
            imin, imax = min(imin, i), max(imax, i)
            for dj, di in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                nj, ni = j + dj, i + di
                if 0 <= nj < h and 0 <= ni < w and mask[nj][ni] and not seen[nj][ni]:
                    seen[nj][ni] = True
                    queue.append((nj, ni))
        sizes.append(size)
        max_diam = max(max_diam, max(jmax - jmin, imax - imin))
    return len(sizes), sorted(sizes, reverse=True), max_diam


def parse_ppm(data: bytes):
    """Minimal P6 reader returning (width, height, pixel bytes)."""
    parts = data.split(b"\n", 3)
    assert parts[0] == b"P6", "not a binary PPM"
    w, h = map(int, parts[1].split())
    assert parts[2] == b"255"
    pixels = parts[3]
    assert len(pixels) == 3 * w * h
    return w, h, pixels
