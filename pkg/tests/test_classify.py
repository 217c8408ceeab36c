import numpy as np
import pytest

from hyperjulia.classify import (
    Axis,
    AxisDegenerate,
    AxisParameterError,
    Chamber,
    axis_julia,
    describe_factor,
    julia_description,
    julia_membership,
    mandelbrot_member,
    quadchotomy,
    quadchotomy_char,
)
from hyperjulia.hypnum import HyperbolicNumber, ZERO
from hyperjulia.realdyn import Cantor, EmptySet, Interval

H = HyperbolicNumber
RHO_M1 = 1.618033988749895
RHO_M3 = 2.302775637731995
GAMMA_M3 = 0.8349996181244668


def test_mandelbrot_member_examples():
    assert mandelbrot_member(H(0.2, 0)) is True
    assert mandelbrot_member(H(3, 3)) is True  # on the plus diagonal
    assert mandelbrot_member(H(1, 0)) is False


def test_quadchotomy_examples():
    assert quadchotomy(H.from_char(-1, -1)) == Chamber.CONNECTED_NONEMPTY
    assert quadchotomy(H.from_char(-2.5, -1)) == Chamber.DISCONNECTED
    assert quadchotomy(H.from_char(-2.5, -2.5)) == Chamber.TOTALLY_DISCONNECTED
    assert quadchotomy(H.from_char(0.5, -1)) == Chamber.EMPTY
    assert quadchotomy(H.from_char(0.5, 0.5)) == Chamber.EMPTY


def test_quadchotomy_wall_tiebreak():
    # a coordinate exactly on a wall counts as inside the square
    assert quadchotomy_char(-2.0, -1.0) == Chamber.CONNECTED_NONEMPTY
    assert quadchotomy_char(0.25, -1.0) == Chamber.CONNECTED_NONEMPTY
    assert quadchotomy_char(-2.0 - 1e-9, -1.0) == Chamber.DISCONNECTED
    assert quadchotomy_char(0.25 + 1e-9, -1.0) == Chamber.EMPTY


def test_quadchotomy_axis_tags():
    tag = quadchotomy(H.from_char(0.0, 5.0))
    assert tag == AxisDegenerate(which_axis=Axis.CX_ZERO, nonaxis_c=5.0)
    tag = quadchotomy(H.from_char(5.0, 0.0))
    assert tag == AxisDegenerate(which_axis=Axis.CY_ZERO, nonaxis_c=5.0)
    tag = quadchotomy(ZERO)
    assert tag == AxisDegenerate(which_axis=Axis.BOTH_ZERO, nonaxis_c=0.0)


def test_julia_description_examples():
    desc = julia_description(H.from_char(-1, -1))
    assert desc.factor_X == Interval(radius=RHO_M1)
    assert desc.factor_Y == Interval(radius=RHO_M1)
    assert desc.chamber == Chamber.CONNECTED_NONEMPTY

    desc = julia_description(H.from_char(-3, -1))
    assert isinstance(desc.factor_X, Cantor)
    assert desc.factor_X.radius == pytest.approx(RHO_M3, abs=1e-12)
    assert isinstance(desc.factor_Y, Interval)
    assert desc.chamber == Chamber.DISCONNECTED

    desc = julia_description(H.from_char(1, 1))
    assert desc.factor_X == EmptySet() and desc.factor_Y == EmptySet()
    assert desc.chamber == Chamber.EMPTY

    with pytest.raises(AxisParameterError):
        julia_description(H.from_char(0, 5))


def test_julia_membership_examples():
    c = H.from_char(-1, -1)
    assert julia_membership(ZERO, c, 200) is True
    assert julia_membership(H.from_char(3, 0.5), c, 200) is False
    assert julia_membership(ZERO, H.from_char(-3, -1), 200) is False
    with pytest.raises(AxisParameterError):
        julia_membership(ZERO, H.from_char(0, 5), 200)


def test_axis_julia_cases():
    desc = axis_julia(H.from_char(1.0, 0.0))
    assert desc.kind == "empty"
    assert desc.which_axis == Axis.CY_ZERO and desc.nonaxis_c == 1.0

    desc = axis_julia(H.from_char(-3.0, 0.0))
    assert desc.kind == "band_product"
    assert desc.per_paper_unverified is True
    assert desc.band_outer == pytest.approx(RHO_M3, abs=1e-12)
    assert desc.band_inner == pytest.approx(GAMMA_M3, abs=1e-12)
    assert desc.axis_interval == (-1.0, 1.0)

    # interval-regime nonzero coordinate: inner radius degenerates to 0
    desc = axis_julia(H.from_char(-1.0, 0.0))
    assert desc.kind == "band_product" and desc.band_inner == 0.0

    desc = axis_julia(ZERO)
    assert desc.kind == "unit_square"
    assert desc.per_paper_unverified is False

    with pytest.raises(ValueError):
        axis_julia(H.from_char(-1.0, -1.0))


def test_conjugation_invariance():
    rng = np.random.default_rng(301)
    for x, y in rng.uniform(-4, 4, size=(1000, 2)):
        c = H(x, y)
        assert mandelbrot_member(c.conj()) == mandelbrot_member(c)
        a, b = quadchotomy(c), quadchotomy(c.conj())
        if isinstance(a, AxisDegenerate):
            # conjugation swaps the diagonals
            assert isinstance(b, AxisDegenerate)
            assert a.nonaxis_c == pytest.approx(b.nonaxis_c)
        else:
            assert a == b


def test_real_line_restriction():
    for c in np.linspace(-3.0, 1.0, 2001):
        member = mandelbrot_member(H(float(c), 0.0))
        assert member == (-2.0 <= c <= 0.25)


def test_connected_chamber_iff_mandelbrot_member_off_axes():
    rng = np.random.default_rng(302)
    for _ in range(5000):
        cX, cY = rng.uniform(-3, 1, size=2)
        if min(abs(cX), abs(cY)) < 1e-9:
            continue
        chamber = quadchotomy_char(cX, cY)
        member = mandelbrot_member(H.from_char(cX, cY))
        assert (chamber == Chamber.CONNECTED_NONEMPTY) == member


def test_chamber_partition():
    rng = np.random.default_rng(303)
    signs = rng.choice((-1.0, 1.0), size=(100_000, 2))
    mags = rng.uniform(1e-12, 10.0, size=(100_000, 2))
    seen = set()
    for (sx, sy), (mx, my) in zip(signs, mags):
        chamber = quadchotomy_char(sx * mx, sy * my)
        assert isinstance(chamber, Chamber)
        seen.add(chamber)
    assert seen == {Chamber.CONNECTED_NONEMPTY, Chamber.DISCONNECTED,
                    Chamber.TOTALLY_DISCONNECTED, Chamber.EMPTY}


def test_describe_factor_formatting():
    assert describe_factor(Interval(radius=1.5)) == "Interval[radius=1.5]"
    assert describe_factor(Cantor(radius=2.5, inner_radius=0.5)) == \
        "Cantor[radius=2.5,inner=0.5]"
    assert describe_factor(EmptySet()) == "Empty"
    with pytest.raises(TypeError):
        describe_factor("nope")
