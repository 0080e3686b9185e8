"""Angular-momentum eigenbasis of the Landau Hamiltonian.

For field strength b > 0 the level Lambda_q = b(2q+1) eigenspace has the
orthonormal basis

    phi_{k,q}(x) = i^{-q} sqrt(b/2pi) sqrt(q!/k!) (sqrt(b/2) z)^{k-q}
                   L_q^(k-q)(b|x|^2/2) exp(-b|x|^2/4),    z = x1 + i x2.

For k < q the apparent z^{k-q} singularity is removed with the reflection
identity, which turns the prefactor into a finite conjugate-power form

    i^{-q} sqrt(b/2pi) sqrt(k!/q!) (-1)^{q-k} (sqrt(b/2) zbar)^{q-k}
    L_k^(q-k)(b|x|^2/2) exp(-b|x|^2/4).

Magnitudes are computed in log space so that k! never overflows and
far-field evaluation degrades gracefully to zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .laguerre import LaguerreSpec, gauss_laguerre_log_rule, laguerre_eval

__all__ = [
    "MagneticField",
    "BasisIndex",
    "magnetic_phase",
    "basis_eval",
    "basis_eval_parts",
    "basis_matrix",
    "basis_inner_product",
    "plane_inner_product",
    "annihilation_residual",
    "magnetic_translate",
    "translated_parts",
]

DEFAULT_RADIAL_NODES = 128
DEFAULT_ANGULAR_NODES = 256
DEFAULT_FD_STEP = 1e-4


@dataclass(frozen=True)
class MagneticField:
    """Constant magnetic field of strength b > 0."""

    b: float

    def __post_init__(self):
        if not self.b > 0:
            raise ValueError(f"field strength must be positive, got {self.b}")

    def landau_level(self, q: int) -> float:
        """Lambda_q = b(2q+1)."""
        if q < 0:
            raise ValueError("level index must be >= 0")
        return self.b * (2 * q + 1)


@dataclass(frozen=True)
class BasisIndex:
    """Angular index k and level index q of a basis function."""

    k: int
    q: int

    def __post_init__(self):
        if self.k < 0 or self.q < 0:
            raise ValueError(f"indices must be >= 0, got k={self.k}, q={self.q}")


def _as_points(x) -> np.ndarray:
    pts = np.asarray(x, dtype=float)
    if pts.shape[-1] != 2:
        raise ValueError(f"points must have a trailing axis of size 2, got shape {pts.shape}")
    return pts


def magnetic_phase(field: MagneticField, x):
    """Gauge phase b|x|^2/4."""
    pts = _as_points(x)
    out = field.b * np.sum(pts * pts, axis=-1) / 4.0
    return float(out) if out.ndim == 0 else out


def _parts_arrays(field: MagneticField, k: int, q: int, pts: np.ndarray):
    """log|phi_{k,q}| and arg phi_{k,q} at an array of points."""
    b = field.b
    z_re = pts[..., 0]
    z_im = pts[..., 1]
    rsq = z_re * z_re + z_im * z_im
    t = 0.5 * b * rsq
    lo, hi = (q, k) if k >= q else (k, q)
    n = hi - lo
    poly = laguerre_eval(LaguerreSpec(lo, float(n)), np.asarray(t, dtype=float))
    poly = np.asarray(poly, dtype=float)
    with np.errstate(divide="ignore"):
        logabs = (
            0.5 * math.log(b / (2.0 * math.pi))
            + 0.5 * (math.lgamma(lo + 1) - math.lgamma(hi + 1))
            - 0.5 * t
            + np.log(np.abs(poly))
        )
        if n > 0:
            logabs = logabs + 0.5 * n * np.log(0.5 * b * rsq)
    theta = np.arctan2(z_im, z_re)
    phase = (k - q) * theta - 0.5 * math.pi * q
    if k < q and (q - k) % 2 == 1:
        phase = phase + math.pi
    phase = phase + np.where(poly < 0.0, math.pi, 0.0)
    return logabs, phase


def basis_eval_parts(field: MagneticField, idx: BasisIndex, x):
    """Return (log|phi|, arg phi); log is -inf exactly on the nodal set."""
    pts = _as_points(x)
    logabs, phase = _parts_arrays(field, idx.k, idx.q, pts)
    if pts.ndim == 1:
        return float(logabs), float(phase)
    return logabs, phase


def basis_eval(field: MagneticField, idx: BasisIndex, x):
    """Evaluate phi_{k,q} at one point or an array of points."""
    pts = _as_points(x)
    logabs, phase = _parts_arrays(field, idx.k, idx.q, pts)
    val = np.exp(logabs) * np.exp(1j * phase)
    return complex(val) if pts.ndim == 1 else val


def basis_matrix(field: MagneticField, q: int, ks, points) -> np.ndarray:
    """Matrix phi_{k,q}(x_j) with one row per angular index k."""
    pts = _as_points(points)
    if pts.ndim != 2:
        raise ValueError("basis_matrix expects an (N, 2) array of points")
    ks = list(ks)
    out = np.empty((len(ks), pts.shape[0]), dtype=complex)
    for row, k in enumerate(ks):
        logabs, phase = _parts_arrays(field, int(k), q, pts)
        out[row] = np.exp(logabs) * np.exp(1j * phase)
    return out


def translated_parts(field: MagneticField, idx: BasisIndex, y) -> Callable:
    """Log-magnitude/phase of the magnetic translate T_y phi_{k,q}.

    (T_y f)(x) = exp(-i(b/2) x^y) f(x - y) with x^y = x1 y2 - x2 y1, so the
    magnitude is carried over from x - y and only the phase is twisted.
    """
    y = np.asarray(y, dtype=float)

    def parts(pts: np.ndarray):
        logabs, phase = _parts_arrays(field, idx.k, idx.q, pts - y)
        wedge = pts[..., 0] * y[1] - pts[..., 1] * y[0]
        return logabs, phase - 0.5 * field.b * wedge

    return parts


def _index_parts(field: MagneticField, idx: BasisIndex) -> Callable:
    def parts(pts: np.ndarray):
        return _parts_arrays(field, idx.k, idx.q, pts)

    return parts


def plane_inner_product(
    field: MagneticField,
    parts1: Callable,
    parts2: Callable,
    radial_nodes: int = DEFAULT_RADIAL_NODES,
    angular_nodes: int = DEFAULT_ANGULAR_NODES,
) -> complex:
    """L^2(R^2) inner product of two functions given by parts callables.

    Polar quadrature: Gauss nodes in t = b r^2 / 2 against the weight
    e^{-t} (the Gaussian decay of the integrand pays for the e^{+t}
    compensation, summed in log space), uniform nodes in the angle.
    """
    if radial_nodes < DEFAULT_RADIAL_NODES:
        raise ValueError(f"radial_nodes must be >= {DEFAULT_RADIAL_NODES}")
    if angular_nodes < DEFAULT_ANGULAR_NODES:
        raise ValueError(f"angular_nodes must be >= {DEFAULT_ANGULAR_NODES}")
    t, logw = gauss_laguerre_log_rule(radial_nodes, 0.0)
    r = np.sqrt(2.0 * t / field.b)
    theta = np.linspace(0.0, 2.0 * math.pi, angular_nodes, endpoint=False)
    pts = np.empty((radial_nodes, angular_nodes, 2))
    pts[..., 0] = r[:, None] * np.cos(theta)[None, :]
    pts[..., 1] = r[:, None] * np.sin(theta)[None, :]
    la1, ph1 = parts1(pts)
    la2, ph2 = parts2(pts)
    log_terms = la1 + la2 + (logw + t)[:, None]
    vals = np.exp(log_terms) * np.exp(1j * (ph1 - ph2))
    return complex(vals.sum() * (2.0 * math.pi / angular_nodes) / field.b)


def basis_inner_product(
    field: MagneticField,
    idx1: BasisIndex,
    idx2: BasisIndex,
    radial_nodes: int = DEFAULT_RADIAL_NODES,
    angular_nodes: int = DEFAULT_ANGULAR_NODES,
) -> complex:
    """<phi_{k1,q}, phi_{k2,q}> by polar quadrature; requires equal q."""
    if idx1.q != idx2.q:
        raise ValueError(
            f"cross-level inner products are exact by construction; got q={idx1.q} and q={idx2.q}"
        )
    return plane_inner_product(
        field,
        _index_parts(field, idx1),
        _index_parts(field, idx2),
        radial_nodes=radial_nodes,
        angular_nodes=angular_nodes,
    )


def annihilation_residual(field: MagneticField, idx: BasisIndex, x, h: float = DEFAULT_FD_STEP) -> float:
    """|a phi_{k,0}(x)| with the annihilation operator applied by central differences.

    a = Pi_1(A) + i Pi_2(A) acts as a u = -i du/dx1 + du/dx2 - i(b/2) z u.
    Lowest-level basis functions lie in ker(a), so the residual is pure
    discretization error, O(h^2) + roundoff.
    """
    if idx.q != 0:
        raise ValueError("annihilation residual is defined for lowest-level indices (q = 0)")
    if not h > 0:
        raise ValueError("step h must be positive")
    pt = _as_points(x)
    if pt.ndim != 1:
        raise ValueError("annihilation_residual expects a single point")
    e1 = np.array([h, 0.0])
    e2 = np.array([0.0, h])
    du1 = (basis_eval(field, idx, pt + e1) - basis_eval(field, idx, pt - e1)) / (2 * h)
    du2 = (basis_eval(field, idx, pt + e2) - basis_eval(field, idx, pt - e2)) / (2 * h)
    z = pt[0] + 1j * pt[1]
    u = basis_eval(field, idx, pt)
    return abs(-1j * du1 + du2 - 0.5j * field.b * z * u)


def magnetic_translate(field: MagneticField, y, f: Callable, x):
    """(T_y f)(x) = exp(-i(b/2)(x1 y2 - x2 y1)) f(x - y)."""
    y = np.asarray(y, dtype=float)
    pts = _as_points(x)
    wedge = pts[..., 0] * y[1] - pts[..., 1] * y[0]
    return np.exp(-0.5j * field.b * wedge) * f(pts - y)
