import math

import numpy as np
import pytest

from hyperjulia.escape import (
    DIVERGED,
    EscapeConfig,
    EscapeResult,
    escape_time,
    hyper_orbit,
    hyper_step,
    mandelbrot_escape,
)
from hyperjulia.hypnum import HyperbolicNumber, ZERO
from hyperjulia.realdyn import real_orbit

from oracles import escape_step_bruteforce

H = HyperbolicNumber


def test_config_validation():
    with pytest.raises(ValueError):
        EscapeConfig(max_iter=0)
    with pytest.raises(ValueError):
        EscapeConfig(bound=0.0)
    cfg = EscapeConfig()
    assert (cfg.max_iter, cfg.bound) == (200, 4.0)


def test_hyper_step_examples():
    assert hyper_step(ZERO, H(0.2, 0)) == H(0.2, 0)
    stepped = hyper_step(H(1, 1), ZERO)
    assert stepped == H(2, 2)
    assert stepped.to_char() == (0.0, 4.0)  # (0, 2) squares componentwise
    assert hyper_step(H(1, 0), H(-1, 0)) == H(0, 0)


def test_hyper_step_matches_ring_multiplication():
    rng = np.random.default_rng(42)
    for x, y, c1, c2 in rng.uniform(-3, 3, size=(500, 4)):
        z, c = H(x, y), H(c1, c2)
        direct = hyper_step(z, c)
        via_mul = z * z + c
        assert direct == via_mul


def test_escape_time_examples():
    res = escape_time(ZERO, H(3, 0))
    assert res == EscapeResult(escaped_at=1, steps_run=1, final_norm_abs=9.0)

    res = escape_time(ZERO, H(0.2, 0))
    assert res.survived and res.steps_run == 200

    # on the plus diagonal the norm is exactly zero forever, even though the
    # coordinates overflow the guard
    res = escape_time(ZERO, H.from_char(0, 10))
    assert res.survived
    assert res.final_norm_abs == 0.0


def test_mandelbrot_escape_examples():
    assert mandelbrot_escape(ZERO).survived
    res = mandelbrot_escape(H(1, 0))
    assert res.escaped_at == 3  # orbit 0, 1, 2, 5; norms 1, 4, 25
    assert res.final_norm_abs == 25.0
    assert mandelbrot_escape(H.from_char(-1.9, -1.9)).survived


def test_escape_time_agrees_with_bruteforce():
    rng = np.random.default_rng(43)
    cfg = EscapeConfig(max_iter=150, bound=4.0)
    for x, y, c1, c2 in rng.uniform(-2, 2, size=(800, 4)):
        expected = escape_step_bruteforce(x, y, c1, c2, cfg.max_iter, cfg.bound)
        got = escape_time(H(x, y), H(c1, c2), cfg)
        assert (got.escaped_at or 0) == expected


def test_escape_time_is_pure():
    z0, c = H(0.3, -0.2), H(-0.7, 0.4)
    assert escape_time(z0, c) == escape_time(z0, c)


def test_hyper_orbit_examples():
    assert hyper_orbit(ZERO, ZERO, 5) == [ZERO] * 6
    orbit = hyper_orbit(ZERO, H(-1, 0), 4)
    assert orbit == [ZERO, H(-1, 0), ZERO, H(-1, 0), ZERO]
    orbit = hyper_orbit(H.from_char(1, 2), ZERO, 2)
    assert [z.to_char() for z in orbit] == [(1, 2), (1, 4), (1, 16)]
    with pytest.raises(ValueError):
        hyper_orbit(ZERO, ZERO, -1)


def test_hyper_orbit_overflow_sentinel():
    z0 = H.from_char(0.0, 9.0)
    orbit = hyper_orbit(z0, ZERO, 12)
    assert any(not z.is_finite() for z in orbit)
    first_bad = next(i for i, z in enumerate(orbit) if not z.is_finite())
    for z in orbit[:first_bad]:
        assert z.is_finite()
    for z in orbit[first_bad:]:
        assert z is DIVERGED


def _bounded_char_samples(n, seed):
    """(X0, Y0, cX, cY) in the [-1.2, 0.2] box, seeds inside the bounded
    rectangle of their parameter (divergent seeds separate the two
    characteristic scales past what cartesian doubles can carry)."""
    from hyperjulia.realdyn import escape_radius

    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        X0, Y0, cX, cY = rng.uniform(-1.2, 0.2, size=4)
        if abs(X0) <= escape_radius(cX) and abs(Y0) <= escape_radius(cY):
            out.append((X0, Y0, cX, cY))
    return out


def test_decoupling_against_real_orbits():
    steps = 50
    for X0, Y0, cX, cY in _bounded_char_samples(1000, 44):
        z0 = H.from_char(X0, Y0)
        c = H.from_char(cX, cY)
        cart = hyper_orbit(z0, c, steps)
        ox = real_orbit(z0.to_char().X, cX, steps)
        oy = real_orbit(z0.to_char().Y, cY, steps)
        for z, X, Y in zip(cart, ox, oy):
            Xc, Yc = z.to_char()
            assert abs(Xc - X) <= 1e-6 * max(1.0, abs(X))
            assert abs(Yc - Y) <= 1e-6 * max(1.0, abs(Y))


def test_decoupling_for_divergent_orbits_until_scale_separation():
    # Divergent orbits still decouple, but once one characteristic
    # component outweighs the other by ~16 digits its information no longer
    # fits in the cartesian doubles; compare up to that point (or overflow).
    rng = np.random.default_rng(46)
    steps = 50
    for _ in range(200):
        X0, Y0, cX, cY = rng.uniform(-1.2, 0.2, size=4)
        z0 = H.from_char(X0, Y0)
        c = H.from_char(cX, cY)
        cart = hyper_orbit(z0, c, steps)
        ox = real_orbit(X0, cX, steps)
        oy = real_orbit(Y0, cY, steps)
        for z, X, Y in zip(cart, ox, oy):
            if not (z.is_finite() and math.isfinite(X) and math.isfinite(Y)):
                break
            lo, hi = sorted((abs(X), abs(Y)))
            if hi > 1e8 * max(lo, 1.0):
                break
            Xc, Yc = z.to_char()
            assert abs(Xc - X) <= 1e-6 * max(1.0, abs(X))
            assert abs(Yc - Y) <= 1e-6 * max(1.0, abs(Y))


def test_norm_factorization():
    steps = 50
    for X0, Y0, cX, cY in _bounded_char_samples(1000, 45):
        z0 = H.from_char(X0, Y0)
        c = H.from_char(cX, cY)
        cart = hyper_orbit(z0, c, steps)
        ox = real_orbit(X0, cX, steps)
        oy = real_orbit(Y0, cY, steps)
        for z, X, Y in zip(cart, ox, oy):
            if abs(X) > 1e30 or abs(Y) > 1e30:
                break
            product = abs(X) * abs(Y)
            assert abs(abs(z.quad_form()) - product) <= 1e-6 * max(1.0, product)
