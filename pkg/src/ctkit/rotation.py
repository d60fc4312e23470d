"""Three-shear image rotation datapath.

A rotation by theta factors into X-shear, Y-shear, X-shear with constants
alpha = tan(theta/2) and beta = sin(theta), held as unsigned f-bit fixed-point
fractions. Coordinates are unsigned n-bit integers; sheared coordinates wrap
modulo 2^n. The functional models mirror the emitted circuits exactly,
including the round-half-up integer-part stage.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arithmetic import _conditional_add_items, _inplace_add, _inplace_sub
from .ir import (
    ANCILLA_CARRY_IN,
    ANCILLA_ZERO,
    Block,
    Circuit,
    CircuitError,
    Gate,
    GateKind,
    Item,
    declared_output,
    extend,
    new_circuit,
    primary_input,
)


@dataclass(frozen=True)
class FixedPointFormat:
    """Coordinate width n and fraction width f (both in bits)."""

    n: int
    f: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.f < 1:
            raise CircuitError("widths must be positive")


@dataclass(frozen=True)
class PixelCoord:
    x: int
    y: int


@dataclass(frozen=True)
class ShearParams:
    theta: float
    alpha: int  # tan(theta/2) as an f-bit fraction
    beta: int  # sin(theta) as an f-bit fraction
    x_ref: int
    y_ref: int
    fmt: FixedPointFormat


def shear_params(
    theta: float, fmt: FixedPointFormat, x_ref: int, y_ref: int
) -> ShearParams:
    """Quantize the shear constants for an angle in [0, pi/2)."""
    if not 0.0 <= theta < math.pi / 2:
        raise CircuitError("theta must lie in [0, pi/2)")
    top = (1 << fmt.f) - 1
    alpha = min(top, round(math.tan(theta / 2) * (1 << fmt.f)))
    beta = min(top, round(math.sin(theta) * (1 << fmt.f)))
    limit = 1 << fmt.n
    if not (0 <= x_ref < limit and 0 <= y_ref < limit):
        raise CircuitError("centroid outside the coordinate grid")
    return ShearParams(theta, alpha, beta, x_ref, y_ref, fmt)


def round_ip(value: int, f: int) -> int:
    """Round-half-up integer part: add 2^(f-1), truncate f fraction bits."""
    if value < 0:
        raise CircuitError("round_ip takes non-negative fixed-point values")
    return (value + (1 << (f - 1))) >> f


def shear_functional(
    axis: str, p: PixelCoord, params: ShearParams
) -> PixelCoord:
    """One shear, case-split on the sign of the distance to the centroid.

    horizontal: x' = x -/+ round_ip(|y_ref - y| * alpha), minus when
    y <= y_ref; vertical: y' = y +/- round_ip(|x_ref - x| * beta), plus when
    x <= x_ref. The untouched coordinate passes through; results wrap mod 2^n.
    """
    f = params.fmt.f
    mask = (1 << params.fmt.n) - 1
    if axis == "horizontal":
        if p.y <= params.y_ref:
            shift = -round_ip((params.y_ref - p.y) * params.alpha, f)
        else:
            shift = round_ip((p.y - params.y_ref) * params.alpha, f)
        return PixelCoord((p.x + shift) & mask, p.y)
    if axis == "vertical":
        if p.x <= params.x_ref:
            shift = round_ip((params.x_ref - p.x) * params.beta, f)
        else:
            shift = -round_ip((p.x - params.x_ref) * params.beta, f)
        return PixelCoord(p.x, (p.y + shift) & mask)
    raise CircuitError(f"unknown axis {axis!r}")


def _signed_shear(axis: str, p: PixelCoord, params: ShearParams) -> PixelCoord:
    """One shear on unbounded integer coordinates (no modular reduction)."""
    f = params.fmt.f
    if axis == "horizontal":
        if p.y <= params.y_ref:
            return PixelCoord(p.x - round_ip((params.y_ref - p.y) * params.alpha, f), p.y)
        return PixelCoord(p.x + round_ip((p.y - params.y_ref) * params.alpha, f), p.y)
    if p.x <= params.x_ref:
        return PixelCoord(p.x, p.y + round_ip((params.x_ref - p.x) * params.beta, f))
    return PixelCoord(p.x, p.y - round_ip((p.x - params.x_ref) * params.beta, f))


def rotate3_functional(p: PixelCoord, params: ShearParams) -> PixelCoord:
    """X-shear, Y-shear, X-shear composition on unbounded coordinates.

    Each shear shifts whole rows (or columns) by a distance-dependent amount,
    so the composition is a bijection of the integer plane and tracks the
    exact real rotation to within the fixed-point rounding error. An n-bit
    datapath observes these coordinates reduced mod 2^n; intermediate
    coordinates here stay signed so a reduction in one stage cannot flip the
    distance-sign case of the next.
    """
    out = _signed_shear("horizontal", p, params)
    out = _signed_shear("vertical", out, params)
    return _signed_shear("horizontal", out, params)


def build_shear_circuit(axis: str, case: str, n: int, f: int) -> Circuit:
    """Classical-only circuit for one shear, one distance-sign case.

    Step 1 copies the subtrahend and computes the distance to the centroid,
    Step 2 multiplies by the constant register (conditional-adder stages with
    the rounding constant 2^(f-1) preloaded into the product), Step 4 applies
    the rounded integer part to the sheared coordinate. The centroid (`ref`)
    and constant (`alpha`) registers are inputs so the verification harness
    can load them. Requires f <= n so stage carries stay clear of the preload.
    """
    if axis not in ("horizontal", "vertical"):
        raise CircuitError(f"unknown axis {axis!r}")
    if case not in ("le_ref", "gt_ref"):
        raise CircuitError(f"unknown case {case!r}")
    if n < 1 or f < 1 or f > n:
        raise CircuitError("need 1 <= f <= n")
    x = list(range(n))
    y = list(range(n, 2 * n))
    ref = list(range(2 * n, 3 * n))
    d = list(range(3 * n, 4 * n))
    z0 = 4 * n
    alpha = list(range(4 * n + 1, 4 * n + 1 + f))
    p = list(range(4 * n + 1 + f, 5 * n + 1 + 2 * f))
    roles = {z0: ANCILLA_CARRY_IN}
    roles.update({x[i]: primary_input("x", i) for i in range(n)})
    roles.update({y[i]: primary_input("y", i) for i in range(n)})
    roles.update({ref[i]: primary_input("ref", i) for i in range(n)})
    roles.update({alpha[i]: primary_input("alpha", i) for i in range(f)})
    roles.update({d[i]: ANCILLA_ZERO for i in range(n)})
    roles.update({p[i]: ANCILLA_ZERO for i in range(n + f)})
    target, source = (x, y) if axis == "horizontal" else (y, x)
    outs = {
        target[i]: declared_output("x" if axis == "horizontal" else "y", i)
        for i in range(n)
    }
    circuit = new_circuit(
        5 * n + 1 + 2 * f,
        {
            "x": x,
            "y": y,
            "ref": ref,
            "d": d,
            "anc": (z0,),
            "alpha": alpha,
            "p": p,
        },
        roles,
        outs,
    )
    # Step 1: d <- (ref - source) or (source - ref), source preserved.
    if case == "le_ref":
        dist: list[Item] = [Gate(GateKind.CNOT, (ref[i], d[i])) for i in range(n)]
        dist += _inplace_sub(source, d)
    else:
        dist = [Gate(GateKind.CNOT, (source[i], d[i])) for i in range(n)]
        dist += _inplace_sub(ref, d)
    extend(circuit, [Block("Distance", tuple(dist))])
    # Step 2 + 3: p <- d * alpha + 2^(f-1); integer part is p[f:].
    scale: list[Item] = [Gate(GateKind.X, (p[f - 1],))]
    for j in range(f):
        stage = _conditional_add_items(
            alpha[j], z0, d, [p[j + i] for i in range(n)], p[j + n]
        )
        scale.append(Block(f"ScaleAdd{j}", tuple(stage)))
    extend(circuit, [Block("Scale", tuple(scale))])
    # Step 4: apply the rounded shift to the sheared coordinate.
    subtract = (axis == "horizontal") == (case == "le_ref")
    integer = p[f : f + n]
    apply_items = (
        _inplace_sub(integer, target) if subtract else _inplace_add(integer, target)
    )
    return extend(circuit, [Block("Apply", tuple(apply_items))])


def rotate_image(grid: np.ndarray, theta: float, f: int) -> np.ndarray:
    """Relocate every pixel of a 2^n-sided square grid by the three-shear map.

    Pixel values ride along with their coordinates (`grid[y][x]`). Each stage
    runs the wrapped n-bit shear map, exactly what the shear circuits compute,
    so every stage is a bijection of the wrapped grid and the output is a
    permutation of the input pixels; pixels sheared past the frame fold back
    in. The centroid is the center pixel.
    """
    grid = np.asarray(grid)
    side = grid.shape[0]
    if grid.ndim != 2 or grid.shape[1] != side or side & (side - 1):
        raise CircuitError("grid must be square with power-of-two side")
    n = side.bit_length() - 1
    params = shear_params(theta, FixedPointFormat(n, f), side // 2, side // 2)
    out = np.empty_like(grid)
    for yy in range(side):
        for xx in range(side):
            moved = shear_functional("horizontal", PixelCoord(xx, yy), params)
            moved = shear_functional("vertical", moved, params)
            moved = shear_functional("horizontal", moved, params)
            out[moved.y, moved.x] = grid[yy, xx]
    return out
