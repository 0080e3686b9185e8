"""Truncated singular Berezin-Toeplitz matrices.

The compression of a weighted curve interaction to the level-q Landau
eigenspace has entries

    M_kl = sum_j v(t_j) phi_{k,q}(gamma(t_j)) conj(phi_{l,q}(gamma(t_j))) ds_j,

assembled over the arclength rule and Hermitian-symmetrized.  On circles
the matrix is exactly diagonal with entries

    lambda_{k,q}(r) = b r (q!/k!) t^{k-q} L_q^(k-q)(t)^2 e^{-t},  t = b r^2/2,

(the reflected form for k < q), which serves as the analytic oracle for
the assembly.  Kernel counting for circles defers to the analytic
census: truncation produces spuriously small tail entries, so the
matrix-based estimate is a cross-check, not the authority.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .census import multiplicity as _census_multiplicity
from .basis import MagneticField, basis_matrix
from .curves import WeightedCurve, arclength_rule, default_quadrature_size
from .laguerre import LaguerreSpec, laguerre_eval

__all__ = [
    "ToeplitzMatrix",
    "SpectrumResult",
    "KernelEstimate",
    "assemble",
    "circle_diagonal",
    "circle_diagonal_log",
    "default_truncation",
    "spectrum",
    "kernel_dim_estimate",
    "matrix_to_json",
    "matrix_from_json",
    "spectrum_to_csv",
]

RESOLUTION_DELTA_TOL = 1e-7
TAIL_RELATIVE_CUTOFF = 1e-16
CURVE_AMPLITUDE_CUTOFF = 1e-12
MAX_TRUNCATION = 512


@dataclass(frozen=True)
class ToeplitzMatrix:
    """Hermitian truncation of the level-q interaction compression."""

    entries: np.ndarray  # (K+1, K+1) complex, exactly Hermitian
    q: int
    K: int
    b: float
    provenance: dict
    underresolved: bool | None = None
    refinement_delta: float | None = None

    def __post_init__(self):
        self.entries.setflags(write=False)


def circle_diagonal_log(field: MagneticField, q: int, k: int, r: float) -> float:
    """log lambda_{k,q}(r); finite iff the entry is nonzero."""
    if not r > 0:
        raise ValueError(f"radius must be positive, got {r}")
    t = 0.5 * field.b * r * r
    lo, hi = (q, k) if k >= q else (k, q)
    n = hi - lo
    poly = laguerre_eval(LaguerreSpec(lo, float(n)), t)
    if poly == 0.0:
        return -math.inf
    out = (
        math.log(field.b * r)
        + math.lgamma(lo + 1)
        - math.lgamma(hi + 1)
        + 2.0 * math.log(abs(poly))
        - t
    )
    if n > 0:
        out += n * math.log(t)
    return out


def circle_diagonal(field: MagneticField, q: int, k: int, r: float) -> float:
    """Diagonal entry lambda_{k,q}(r) of the circle interaction at level q."""
    return math.exp(circle_diagonal_log(field, q, k, r))


def default_truncation(field: MagneticField, q: int, curve_or_radius, tail_rel: float = TAIL_RELATIVE_CUTOFF) -> int:
    """Smallest K beyond which entries are negligible.

    Circles: sweep lambda_{k,q}(r) until the Poisson-type tail drops
    below tail_rel of the running maximum.  General curves: stop once
    the amplitude of phi_{K,q} at every node falls below 1e-12 of the
    largest amplitude seen on the curve.
    """
    if hasattr(curve_or_radius, "kind") and curve_or_radius.kind != "circle":
        curve = curve_or_radius
        points, _ = arclength_rule(curve, curve.n_nodes)
        best = -math.inf
        t_peak = 0.5 * field.b * float(np.max(np.sum(points * points, axis=1)))
        k = 0
        while k < MAX_TRUNCATION:
            amp = basis_matrix(field, q, [k], points)[0]
            level = float(np.max(np.abs(amp)))
            log_level = math.log(level) if level > 0 else -math.inf
            best = max(best, log_level)
            if k > q + t_peak and log_level < best + math.log(CURVE_AMPLITUDE_CUTOFF):
                return k
            k += 1
        return MAX_TRUNCATION
    if hasattr(curve_or_radius, "kind"):
        r = dict(curve_or_radius.meta)["r"]
    else:
        r = float(curve_or_radius)
    t = 0.5 * field.b * r * r
    best = -math.inf
    k = 0
    below = 0
    log_cut = math.log(tail_rel)
    # At most q diagonals vanish at any radius, so q+1 consecutive
    # sub-threshold entries certify the tail (a lone resonant zero must
    # not truncate the sweep).
    while k < MAX_TRUNCATION:
        val = circle_diagonal_log(field, q, k, r)
        best = max(best, val)
        if k > q + t and val < best + log_cut:
            below += 1
            if below == q + 1:
                return k - (q + 1)
        else:
            below = 0
        k += 1
    return MAX_TRUNCATION


def _assemble_entries(field: MagneticField, q: int, wc: WeightedCurve, K: int, n: int) -> np.ndarray:
    wcn = wc.resample(n)
    points, ds = arclength_rule(wcn.curve, n)
    phi = basis_matrix(field, q, range(K + 1), points)
    m = (phi * (wcn.values * ds)) @ phi.conj().T
    return 0.5 * (m + m.conj().T)


def assemble(
    field: MagneticField,
    q: int,
    weighted_curve: WeightedCurve,
    K: int | None = None,
    N: int | None = None,
    check_resolution: bool = True,
) -> ToeplitzMatrix:
    """Assemble the (K+1)x(K+1) level-q matrix over the arclength rule.

    With check_resolution the assembly is repeated at twice the node
    count and the matrix is flagged underresolved when any entry moves
    by more than 1e-7.
    """
    if q < 0:
        raise ValueError("level index must be >= 0")
    n = default_quadrature_size() if N is None else N
    if K is None:
        K = default_truncation(field, q, weighted_curve.curve)
    if K < 0:
        raise ValueError("truncation K must be >= 0")
    entries = _assemble_entries(field, q, weighted_curve, K, n)
    underresolved = None
    delta = None
    if check_resolution:
        refined = _assemble_entries(field, q, weighted_curve, K, 2 * n)
        delta = float(np.max(np.abs(refined - entries)))
        underresolved = delta > RESOLUTION_DELTA_TOL
    provenance = {
        "curve": weighted_curve.curve.describe(),
        "weight": weighted_curve.describe(),
        "sign_class": weighted_curve.sign_class,
        "N": n,
    }
    if weighted_curve.curve.kind == "circle":
        provenance["r"] = dict(weighted_curve.curve.meta)["r"]
    return ToeplitzMatrix(entries, q, K, field.b, provenance, underresolved, delta)


@dataclass(frozen=True)
class SpectrumResult:
    """Eigenvalues in descending order with orthonormal eigenvectors."""

    eigenvalues: np.ndarray  # (m,) real, descending
    eigenvectors: np.ndarray  # (m, m), column i pairs with eigenvalue i
    residuals: np.ndarray  # ||M v - lambda v|| per pair

    def __post_init__(self):
        for arr in (self.eigenvalues, self.eigenvectors, self.residuals):
            arr.setflags(write=False)


def spectrum(matrix: ToeplitzMatrix | np.ndarray) -> SpectrumResult:
    """Hermitian eigendecomposition with per-pair residual checks."""
    m = matrix.entries if isinstance(matrix, ToeplitzMatrix) else np.asarray(matrix)
    if m.size == 0:
        raise ValueError("empty matrix")
    if not np.allclose(m, m.conj().T, rtol=0.0, atol=1e-12 * max(1.0, float(np.max(np.abs(m))))):
        raise ValueError("matrix is not Hermitian")
    try:
        vals, vecs = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise ValueError(f"eigensolve failed to converge: {exc}") from exc
    vals = vals[::-1].copy()
    vecs = vecs[:, ::-1].copy()
    residuals = np.linalg.norm(m @ vecs - vecs * vals[None, :], axis=0)
    scale = float(np.max(np.abs(vals))) if vals.size else 0.0
    bad = residuals > 1e-10 * max(scale, 1e-300)
    if np.any(bad):
        worst = float(np.max(residuals))
        raise ValueError(f"eigenpair residual {worst:.3e} exceeds 1e-10 * ||M||")
    return SpectrumResult(vals, vecs, residuals)


@dataclass(frozen=True)
class KernelEstimate:
    """Count of numerically-zero eigenvalues, with the analytic cross-check.

    Truncation makes high angular modes numerically blind to the curve,
    so the matrix count can exceed the true kernel dimension; for
    circles the census value is authoritative.
    """

    count: int
    threshold: float
    census_multiplicity: int | None
    note: str


def kernel_dim_estimate(matrix: ToeplitzMatrix, rel_tol: float = 1e-10) -> KernelEstimate:
    """Count eigenvalues with |lambda| <= rel_tol * max|lambda|."""
    if not 0.0 < rel_tol <= 1e-3:
        raise ValueError(f"rel_tol must lie in (0, 1e-3], got {rel_tol}")
    vals = spectrum(matrix).eigenvalues
    scale = float(np.max(np.abs(vals)))
    threshold = rel_tol * max(scale, 1e-300)
    count = int(np.sum(np.abs(vals) <= threshold))
    note = (
        "truncation adds spuriously small tail entries; treat the count as an upper "
        "envelope of the kernel dimension"
    )
    census_m = None
    if scale == 0.0:
        note = "degenerate input: matrix is identically zero (zero weight?)"
    elif "r" in matrix.provenance:
        if matrix.q == 0:
            census_m = 0
            note += "; analytic value for circles at level 0: trivial kernel"
        else:
            field = MagneticField(matrix.b)
            census_m, _ = _census_multiplicity(field, matrix.q, matrix.provenance["r"])
            note += "; analytic census value attached for the circle"
    return KernelEstimate(count, threshold, census_m, note)


def matrix_to_json(matrix: ToeplitzMatrix) -> str:
    """Serialize as {meta, re, im}; floats survive round-trips exactly."""
    payload = {
        "meta": {
            "q": matrix.q,
            "K": matrix.K,
            "b": matrix.b,
            "provenance": matrix.provenance,
            "underresolved": matrix.underresolved,
            "refinement_delta": matrix.refinement_delta,
        },
        "re": matrix.entries.real.tolist(),
        "im": matrix.entries.imag.tolist(),
    }
    return json.dumps(payload, indent=1)


def matrix_from_json(text: str) -> ToeplitzMatrix:
    payload = json.loads(text)
    meta = payload["meta"]
    entries = np.asarray(payload["re"], dtype=float) + 1j * np.asarray(payload["im"], dtype=float)
    return ToeplitzMatrix(
        entries,
        int(meta["q"]),
        int(meta["K"]),
        float(meta["b"]),
        dict(meta["provenance"]),
        meta.get("underresolved"),
        meta.get("refinement_delta"),
    )


def spectrum_to_csv(result: SpectrumResult) -> str:
    lines = ["index,eigenvalue,residual"]
    for i, (val, res) in enumerate(zip(result.eigenvalues, result.residuals)):
        lines.append(f"{i},{val:.17g},{res:.17g}")
    return "\n".join(lines) + "\n"
