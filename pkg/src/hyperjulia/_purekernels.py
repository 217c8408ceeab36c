"""Pure numpy twin of the compiled kernels.

Mirrors _kernels.pyx operation for operation: every per-element double op
happens in the same order, so counts and masks are bit-identical between
backends (tests assert this). Used automatically when the extension is not
built; also selectable via HYPERJULIA_BACKEND=pure.
"""
from __future__ import annotations

import numpy as np

GUARD = 1e150

MODE_EMPTY = 0
MODE_INTERVAL = 1
MODE_CANTOR = 2


def _escape_counts(x, y, c1, c2, max_iter, bound, out_flat):
    """Vectorized escape loop with index compaction; survived stays 0."""
    idx = np.arange(x.size)
    scalar_c = np.isscalar(c1)
    with np.errstate(over="ignore", invalid="ignore"):
        for n in range(1, max_iter + 1):
            nx = x * x + y * y + c1
            ny = 2.0 * x * y + c2
            x, y = nx, ny
            guarded = (np.abs(x) > GUARD) | (np.abs(y) > GUARD)
            q = x * x - y * y
            escaped = (np.abs(q) > bound) & ~guarded
            out_flat[idx[escaped]] = n
            keep = ~(escaped | guarded)
            if not keep.all():
                idx = idx[keep]
                x = x[keep]
                y = y[keep]
                if not scalar_c:
                    c1 = c1[keep]
                    c2 = c2[keep]
                if idx.size == 0:
                    break


def _pixel_axes(out, min_u, du, max_v, dv, j0, j1):
    w = out.shape[1]
    u = min_u + (np.arange(w) + 0.5) * du
    v = max_v - (np.arange(j0, j1) + 0.5) * dv
    return u[None, :], v[:, None]


def mandelbrot_counts(out, min_u, du, max_v, dv, char_frame,
                      max_iter, bound, j0, j1):
    u, v = _pixel_axes(out, min_u, du, max_v, dv, j0, j1)
    if char_frame:
        c1 = (0.5 * (u + v)).ravel()
        c2 = (0.5 * (v - u)).ravel()
    else:
        c1 = np.broadcast_to(u, (j1 - j0, out.shape[1])).ravel().copy()
        c2 = np.broadcast_to(v, (j1 - j0, out.shape[1])).ravel().copy()
    band = np.zeros((j1 - j0) * out.shape[1], dtype=out.dtype)
    _escape_counts(np.zeros_like(c1), np.zeros_like(c2), c1, c2,
                   max_iter, bound, band)
    out[j0:j1] = band.reshape(j1 - j0, out.shape[1])


def julia_counts(out, min_u, du, max_v, dv, char_frame,
                 c1, c2, max_iter, bound, j0, j1):
    u, v = _pixel_axes(out, min_u, du, max_v, dv, j0, j1)
    if char_frame:
        x = (0.5 * (u + v)).ravel()
        y = (0.5 * (v - u)).ravel()
    else:
        x = np.broadcast_to(u, (j1 - j0, out.shape[1])).ravel().copy()
        y = np.broadcast_to(v, (j1 - j0, out.shape[1])).ravel().copy()
    band = np.zeros((j1 - j0) * out.shape[1], dtype=out.dtype)
    _escape_counts(x, y, float(c1), float(c2), max_iter, bound, band)
    out[j0:j1] = band.reshape(j1 - j0, out.shape[1])


def _bounded_vec(x0, mode, c, rho, max_iter):
    if mode == MODE_EMPTY:
        return np.zeros(x0.shape, dtype=np.uint8)
    if mode == MODE_INTERVAL:
        return (np.abs(x0) <= rho).astype(np.uint8)
    ok = np.ones(x0.size, dtype=np.uint8)
    idx = np.arange(x0.size)
    x = x0.ravel().copy()
    for _ in range(max_iter):
        dead = np.abs(x) > rho
        if dead.any():
            ok[idx[dead]] = 0
            keep = ~dead
            idx = idx[keep]
            x = x[keep]
            if idx.size == 0:
                break
        x = x * x + c
    if idx.size:
        ok[idx[np.abs(x) > rho]] = 0
    return ok.reshape(x0.shape)


def bounded_mask_1d(out, base, scale, mode, c, rho, max_iter):
    xs = base + (np.arange(out.shape[0]) + 0.5) * scale
    out[:] = _bounded_vec(xs, mode, c, rho, max_iter)


def bounded_mask_cart(out, min_u, du, max_v, dv,
                      mode_x, c_x, rho_x, mode_y, c_y, rho_y,
                      max_iter, j0, j1):
    u, v = _pixel_axes(out, min_u, du, max_v, dv, j0, j1)
    X = u - v
    Y = u + v
    mx = _bounded_vec(X, mode_x, c_x, rho_x, max_iter)
    my = _bounded_vec(Y, mode_y, c_y, rho_y, max_iter)
    out[j0:j1] = mx & my
