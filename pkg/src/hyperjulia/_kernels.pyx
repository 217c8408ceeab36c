# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled escape-time and boundedness kernels.

The pure twin of this module is _purekernels; both must perform the exact
same double-precision operations in the same order so that grids computed
by either backend are bit-identical (enforced by tests). All loops release
the GIL, so callers may band rows across threads for real parallelism.
"""
from libc.math cimport fabs
from libc.stdint cimport int32_t, uint8_t

cdef double GUARD = 1e150

# Boundedness regimes of the 1-D factor map (matches realdyn.classify_real).
cdef int MODE_EMPTY = 0
cdef int MODE_INTERVAL = 1
cdef int MODE_CANTOR = 2


cdef inline int _escape_steps(double x, double y, double c1, double c2,
                              int max_iter, double bound) noexcept nogil:
    # First step n with |z_n * conj(z_n)| > bound, or 0 if the orbit survives.
    # Once a coordinate passes GUARD the norm can no longer be resolved in
    # doubles (only numerically-diagonal orbits get this far); the orbit is
    # frozen and reported as survived.
    cdef int n
    cdef double nx, ny, q
    for n in range(1, max_iter + 1):
        nx = x * x + y * y + c1
        ny = 2.0 * x * y + c2
        x = nx
        y = ny
        if fabs(x) > GUARD or fabs(y) > GUARD:
            return 0
        q = x * x - y * y
        if fabs(q) > bound:
            return n
    return 0


cdef inline uint8_t _bounded_1d(double x0, int mode, double c, double rho,
                                int max_iter) noexcept nogil:
    cdef int n
    cdef double x
    if mode == MODE_EMPTY:
        return 0
    if mode == MODE_INTERVAL:
        return fabs(x0) <= rho
    x = x0
    for n in range(max_iter):
        if fabs(x) > rho:
            return 0
        x = x * x + c
    return fabs(x) <= rho


def mandelbrot_counts(int32_t[:, ::1] out, double min_u, double du,
                      double max_v, double dv, bint char_frame,
                      int max_iter, double bound, int j0, int j1):
    """Escape steps of the critical orbit, c = pixel center, rows [j0, j1)."""
    cdef int i, j, w = out.shape[1]
    cdef double u, v, c1, c2
    with nogil:
        for j in range(j0, j1):
            v = max_v - (j + 0.5) * dv
            for i in range(w):
                u = min_u + (i + 0.5) * du
                if char_frame:
                    c1 = 0.5 * (u + v)
                    c2 = 0.5 * (v - u)
                else:
                    c1 = u
                    c2 = v
                out[j, i] = _escape_steps(0.0, 0.0, c1, c2, max_iter, bound)


def julia_counts(int32_t[:, ::1] out, double min_u, double du,
                 double max_v, double dv, bint char_frame,
                 double c1, double c2, int max_iter, double bound,
                 int j0, int j1):
    """Escape steps of pixel-center seeds under a fixed parameter c."""
    cdef int i, j, w = out.shape[1]
    cdef double u, v, x, y
    with nogil:
        for j in range(j0, j1):
            v = max_v - (j + 0.5) * dv
            for i in range(w):
                u = min_u + (i + 0.5) * du
                if char_frame:
                    x = 0.5 * (u + v)
                    y = 0.5 * (v - u)
                else:
                    x = u
                    y = v
                out[j, i] = _escape_steps(x, y, c1, c2, max_iter, bound)


def bounded_mask_1d(uint8_t[::1] out, double base, double scale,
                    int mode, double c, double rho, int max_iter):
    """1-D boundedness verdicts at the points base + (i + 0.5)*scale."""
    cdef int i, n = out.shape[0]
    with nogil:
        for i in range(n):
            out[i] = _bounded_1d(base + (i + 0.5) * scale, mode, c, rho, max_iter)


def bounded_mask_cart(uint8_t[:, ::1] out, double min_u, double du,
                      double max_v, double dv,
                      int mode_x, double c_x, double rho_x,
                      int mode_y, double c_y, double rho_y,
                      int max_iter, int j0, int j1):
    """Product-membership mask over a cartesian-frame grid, rows [j0, j1)."""
    cdef int i, j, w = out.shape[1]
    cdef double u, v, X, Y
    with nogil:
        for j in range(j0, j1):
            v = max_v - (j + 0.5) * dv
            for i in range(w):
                u = min_u + (i + 0.5) * du
                X = u - v
                Y = u + v
                out[j, i] = (_bounded_1d(X, mode_x, c_x, rho_x, max_iter)
                             and _bounded_1d(Y, mode_y, c_y, rho_y, max_iter))
