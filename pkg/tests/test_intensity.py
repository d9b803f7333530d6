import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from slitprimes.config import EvalConfig
from slitprimes.intensity import (
    IntensityProfile,
    intensity_array,
    intensity_exact,
    intensity_float,
    phasor_intensity,
    profile,
    ratio_intensity,
)
from slitprimes.oracle import eratosthenes

PRIMES_TO_997 = eratosthenes(997).primes
primes_st = st.sampled_from(PRIMES_TO_997)


@pytest.mark.parametrize(
    "p,n,expected",
    [
        (5, 10, 1),
        (5, 7, 0),
        (3, 0, 1),
        (2, -4, 1),
        (7, -8, 0),
    ],
)
def test_intensity_exact(p, n, expected):
    assert intensity_exact(p, n) == expected


@pytest.mark.parametrize("p", [1, 0, -3])
def test_intensity_exact_rejects_small_period(p):
    with pytest.raises(ValueError):
        intensity_exact(p, 4)


def test_intensity_exact_rejects_floats():
    with pytest.raises(TypeError):
        intensity_exact(5, 2.0)


@pytest.mark.parametrize(
    "p,x,expected",
    [
        (5, 5.0, 1.0),
        (5, 2.5, 0.04),
        (2, 0.5, 0.5),
        (7, 0.0, 1.0),
        (3, -3.0, 1.0),
    ],
)
def test_intensity_float_values(p, x, expected):
    assert intensity_float(p, x) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("x", [math.inf, -math.inf, math.nan])
def test_intensity_float_rejects_nonfinite(x):
    with pytest.raises(ValueError):
        intensity_float(5, x)


def test_intensity_float_rejects_small_period():
    with pytest.raises(ValueError):
        intensity_float(1, 0.3)


def test_exact_zero_between_multiples():
    # Non-multiples land on an exact zero of the numerator after reduction.
    assert intensity_float(2, 1.0) == 0.0
    assert intensity_float(97, 123456.0) == 0.0


def test_near_singularity_is_continuous():
    # Either side of the window edge, the chosen form matches the other one.
    cfg = EvalConfig()
    p = 11
    edge = p * cfg.singularity_window
    for offset in (0.999 * edge, 1.001 * edge):
        value = intensity_float(p, 33 + offset)
        assert value == pytest.approx(phasor_intensity(p, offset)[0], abs=1e-14)
        assert value == pytest.approx(ratio_intensity(p, offset)[0], abs=1e-14)
        assert value == pytest.approx(1.0, abs=1e-9)


@given(p=primes_st, n=st.integers(-(10**6), 10**6))
@settings(max_examples=500, deadline=None)
def test_float_matches_exact_at_integers(p, n):
    assert abs(intensity_float(p, float(n)) - intensity_exact(p, n)) < 1e-9


@given(p=primes_st, x=st.floats(-1e3, 1e3))
@settings(max_examples=300, deadline=None)
def test_periodicity(p, x):
    assert abs(intensity_float(p, x + p) - intensity_float(p, x)) < 1e-10


@given(p=primes_st, x=st.floats(-1e4, 1e4))
@settings(max_examples=300, deadline=None)
def test_symmetry(p, x):
    assert abs(intensity_float(p, -x) - intensity_float(p, x)) < 1e-12


@given(p=st.integers(2, 2000), x=st.floats(-1e6, 1e6))
@settings(max_examples=300, deadline=None)
def test_range(p, x):
    assert 0.0 <= intensity_float(p, x) <= 1.0


@given(p=st.sampled_from(PRIMES_TO_997[:40]), x=st.floats(-50, 50))
@settings(max_examples=300, deadline=None)
def test_ratio_and_phasor_forms_agree(p, x):
    # Keep away from every multiple of p and from the integer zeros so that the
    # relative comparison is meaningful.
    xr = x - p * round(x / p)
    frac = x - round(x)
    if abs(xr) < 1e-3 or abs(frac) < 1e-3:
        return
    ratio = ratio_intensity(p, x)[0]
    phasor = phasor_intensity(p, x)[0]
    assert phasor == pytest.approx(ratio, rel=1e-10)


def test_array_matches_scalar():
    xs = np.linspace(-20, 20, 801)
    arr = intensity_array(7, xs)
    assert np.array_equal(arr, [intensity_float(7, float(x)) for x in xs])


def test_profile_peaks_at_multiples():
    prof = profile(5, 0, 10, 0.01)
    assert len(prof) == 1001
    assert prof.x[0] == 0 and prof.x[-1] == 10
    assert list(prof.peaks()) == [0.0, 5.0, 10.0]


def test_profile_integer_grid():
    prof = profile(2, 0, 2, 1)
    assert list(prof.values) == [1.0, 0.0, 1.0]


def test_profile_matches_direct_formula():
    prof = profile(3, 0, 3, 0.5)
    idx = list(prof.x).index(1.5)
    direct = math.sin(math.pi * 1.5) ** 2 / (9 * math.sin(math.pi * 0.5) ** 2)
    assert prof.values[idx] == pytest.approx(direct, abs=1e-15)
    assert prof.values[idx] == intensity_float(3, 1.5)


@pytest.mark.parametrize(
    "x_min,x_max,step",
    [(5, 1, 0.5), (1, 1, 0.5), (0, 1, 0), (0, 1, -0.1)],
)
def test_profile_rejects_bad_ranges(x_min, x_max, step):
    with pytest.raises(ValueError):
        profile(3, x_min, x_max, step)


def test_profile_includes_endpoint_off_grid():
    prof = profile(3, 0, 1, 0.3)
    assert prof.x[-1] == 1.0
    assert len(prof) == 5


def test_profile_csv_round_trip():
    prof = profile(5, -1.3, 4.7, 0.037)
    text = prof.to_csv()
    assert text.splitlines()[0] == "x,intensity"
    back = IntensityProfile.read_csv(text)
    assert np.array_equal(back.x, prof.x)
    assert np.array_equal(back.values, prof.values)


def test_eval_config_validation():
    with pytest.raises(ValueError):
        EvalConfig(zero_threshold=0)
    with pytest.raises(ValueError):
        EvalConfig(singularity_window=-1e-6)
    EvalConfig().check_primes(997)
    with pytest.raises(ValueError):
        EvalConfig(zero_threshold=1e-3).check_primes(997)
