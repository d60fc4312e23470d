"""Rotation tests: fixed-point quantization, shear models, circuit
equivalence at small widths, and whole-image behavior."""
import math

import numpy as np
import pytest

from ctkit.ir import CircuitError
from ctkit.rotation import (
    FixedPointFormat,
    PixelCoord,
    ShearParams,
    build_shear_circuit,
    rotate3_functional,
    rotate_image,
    round_ip,
    shear_functional,
    shear_params,
)
from ctkit.verify import verify_shear


def test_fixed_point_format_validation():
    with pytest.raises(CircuitError):
        FixedPointFormat(0, 1)
    with pytest.raises(CircuitError):
        FixedPointFormat(4, 0)


def test_shear_params_quantization():
    fmt = FixedPointFormat(4, 8)
    params = shear_params(math.radians(30), fmt, 8, 8)
    assert params.alpha == round(math.tan(math.radians(15)) * 256)
    assert params.beta == round(math.sin(math.radians(30)) * 256)
    with pytest.raises(CircuitError):
        shear_params(math.pi / 2, fmt, 8, 8)
    with pytest.raises(CircuitError):
        shear_params(0.1, fmt, 99, 8)


def test_round_ip_half_up():
    assert round_ip(0, 4) == 0
    assert round_ip(7, 4) == 0  # 7/16 rounds down
    assert round_ip(8, 4) == 1  # exactly half rounds up
    assert round_ip(24, 4) == 2
    with pytest.raises(CircuitError):
        round_ip(-1, 4)


def test_shear_worked_value():
    # 30 degrees, f = 8, centroid 8: pixel (5, 12) shifts by round_ip(4 tan 15)
    params = shear_params(math.radians(30), FixedPointFormat(4, 8), 8, 8)
    assert shear_functional("horizontal", PixelCoord(5, 12), params) == PixelCoord(6, 12)


def test_zero_alpha_is_identity():
    params = ShearParams(0.0, 0, 0, 8, 8, FixedPointFormat(4, 4))
    for x, y in ((0, 0), (3, 12), (15, 15)):
        assert shear_functional("horizontal", PixelCoord(x, y), params) == PixelCoord(x, y)
        assert shear_functional("vertical", PixelCoord(x, y), params) == PixelCoord(x, y)


def test_centroid_pixel_is_fixed():
    params = shear_params(math.radians(40), FixedPointFormat(4, 6), 8, 8)
    assert rotate3_functional(PixelCoord(8, 8), params) == PixelCoord(8, 8)


def test_theta_zero_rotation_is_identity():
    params = shear_params(0.0, FixedPointFormat(4, 8), 8, 8)
    for x, y in ((0, 0), (5, 9), (15, 1)):
        assert rotate3_functional(PixelCoord(x, y), params) == PixelCoord(x, y)


def test_shear_functional_rejects_unknown_axis():
    params = shear_params(0.1, FixedPointFormat(3, 2), 4, 4)
    with pytest.raises(CircuitError):
        shear_functional("diagonal", PixelCoord(0, 0), params)


def test_accuracy_improves_with_fraction_bits():
    theta = math.radians(45)
    worst_by_f = []
    for f in (4, 6, 8, 12):
        params = shear_params(theta, FixedPointFormat(4, f), 8, 8)
        worst = 0.0
        for y in range(16):
            for x in range(16):
                got = rotate3_functional(PixelCoord(x, y), params)
                ex = 8 + (x - 8) * math.cos(theta) + (y - 8) * math.sin(theta)
                ey = 8 - (x - 8) * math.sin(theta) + (y - 8) * math.cos(theta)
                worst = max(worst, abs(got.x - ex), abs(got.y - ey))
        worst_by_f.append(worst)
    assert all(b <= a for a, b in zip(worst_by_f, worst_by_f[1:]))


def test_shear_circuit_validation():
    with pytest.raises(CircuitError):
        build_shear_circuit("diagonal", "le_ref", 2, 2)
    with pytest.raises(CircuitError):
        build_shear_circuit("horizontal", "both", 2, 2)
    with pytest.raises(CircuitError):
        build_shear_circuit("horizontal", "le_ref", 2, 3)  # needs f <= n


def test_shear_circuit_qubit_budget():
    circuit = build_shear_circuit("vertical", "gt_ref", 3, 2)
    assert circuit.n_qubits == 5 * 3 + 2 * 2 + 1


@pytest.mark.parametrize("n,f", [(2, 1), (2, 2), (3, 2)])
def test_shear_circuits_match_models_small(n, f):
    assert verify_shear(n, f) == []


def test_rotate_image_identity_and_permutation():
    grid = np.arange(64).reshape(8, 8)
    assert np.array_equal(rotate_image(grid, 0.0, 4), grid)
    rotated = rotate_image(grid, math.radians(30), 6)
    assert sorted(rotated.ravel().tolist()) == list(range(64))


def test_rotate_image_rejects_bad_grid():
    with pytest.raises(CircuitError):
        rotate_image(np.zeros((5, 5), dtype=int), 0.1, 4)
    with pytest.raises(CircuitError):
        rotate_image(np.zeros((4, 8), dtype=int), 0.1, 4)
