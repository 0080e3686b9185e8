"""Finite Galerkin model of the perturbed Landau Hamiltonian.

On the span of basis functions phi_{k,j}, j <= Q, k <= K, the quadratic
form of the perturbed operator is the Hermitian matrix

    H = diag(Lambda_j) + sign * B,
    B_(k,j),(k',j') = sum_nodes v phi_{k,j} conj(phi_{k',j'}) ds.

The truncation is an uncontrolled approximation of the continuous
operator, so only statements that are exact in finite sections are
asserted: nodal-vector persistence of Landau levels at resonant radii,
and Weyl monotonicity under sign-definite weights.  Eigenvalue positions
between levels are reported, never certified.

The default angular cutoff keeps only modes whose circle diagonal stays
above 1e-4 of the peak: beyond that, modes are numerically blind to the
curve and would pile spurious eigenvalues onto the bare Landau levels,
masking the resonant/non-resonant dichotomy.  All census witnesses sit
well inside this cutoff.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .census import multiplicity as _census_multiplicity
from .basis import MagneticField, basis_matrix
from .curves import WeightedCurve, arclength_rule, default_quadrature_size, load_weight, make_circle
from .toeplitz import RESOLUTION_DELTA_TOL, default_truncation, spectrum

__all__ = [
    "GalerkinModel",
    "LevelCluster",
    "ClusterReport",
    "PersistenceResult",
    "assemble_model",
    "model_truncation",
    "cluster_report",
    "persistence_check",
    "flat_index",
]

EXACT_HIT_TOL = 1e-9
SUPPORT_TOL = 1e-8
MODEL_TAIL_CUTOFF = 1e-4


def flat_index(j: int, k: int, K: int) -> int:
    """Position of phi_{k,j} in the stacked level-major ordering."""
    return j * (K + 1) + k


@dataclass(frozen=True)
class GalerkinModel:
    field: MagneticField
    Q: int
    K: int
    sign: int
    matrix: np.ndarray  # diag(Lambda) + sign * coupling
    coupling: np.ndarray
    provenance: dict
    underresolved: bool | None = None
    refinement_delta: float | None = None

    def __post_init__(self):
        self.matrix.setflags(write=False)
        self.coupling.setflags(write=False)

    def levels(self) -> np.ndarray:
        return np.array([self.field.landau_level(j) for j in range(self.Q + 1)])


def _coupling_matrix(field: MagneticField, Q: int, K: int, wc: WeightedCurve, n: int) -> np.ndarray:
    wcn = wc.resample(n)
    points, ds = arclength_rule(wcn.curve, n)
    blocks = [basis_matrix(field, j, range(K + 1), points) for j in range(Q + 1)]
    phi = np.vstack(blocks)
    b = (phi * (wcn.values * ds)) @ phi.conj().T
    return 0.5 * (b + b.conj().T)


def model_truncation(field: MagneticField, Q: int, curve_or_radius) -> int:
    """Default angular cutoff: the 1e-4 tail rule, worst level included."""
    return max(
        default_truncation(field, j, curve_or_radius, tail_rel=MODEL_TAIL_CUTOFF)
        for j in range(Q + 1)
    )


def assemble_model(
    field: MagneticField,
    Q: int,
    K: int,
    weighted_curve: WeightedCurve,
    sign: int,
    N: int | None = None,
    check_resolution: bool = True,
) -> GalerkinModel:
    """Assemble H = diag(Lambda_j) + sign * B on levels 0..Q, indices 0..K."""
    if Q < 0 or K < 0:
        raise ValueError("cutoffs must be >= 0")
    if sign not in (+1, -1):
        raise ValueError(f"coupling sign must be +1 or -1, got {sign}")
    n = default_quadrature_size() if N is None else N
    coupling = _coupling_matrix(field, Q, K, weighted_curve, n)
    lam = np.repeat([field.landau_level(j) for j in range(Q + 1)], K + 1)
    h = np.diag(lam).astype(complex) + sign * coupling
    h = 0.5 * (h + h.conj().T)
    underresolved = None
    delta = None
    if check_resolution:
        refined = _coupling_matrix(field, Q, K, weighted_curve, 2 * n)
        delta = float(np.max(np.abs(refined - coupling)))
        underresolved = delta > RESOLUTION_DELTA_TOL
    provenance = {
        "curve": weighted_curve.curve.describe(),
        "weight": weighted_curve.describe(),
        "sign_class": weighted_curve.sign_class,
        "N": n,
    }
    return GalerkinModel(field, Q, K, sign, h, coupling, provenance, underresolved, delta)


@dataclass(frozen=True)
class LevelCluster:
    level_index: int
    landau_level: float
    eigenvalues: list[float]
    offsets: list[float]
    exact_hits: list[float]

    @property
    def count(self) -> int:
        return len(self.eigenvalues)

    @property
    def min_offset(self) -> float:
        return min((abs(o) for o in self.offsets), default=math.nan)

    @property
    def max_offset(self) -> float:
        return max((abs(o) for o in self.offsets), default=math.nan)


@dataclass(frozen=True)
class ClusterReport:
    clusters: list[LevelCluster]

    def level(self, j: int) -> LevelCluster:
        return self.clusters[j]

    def to_json(self) -> str:
        payload = {
            "levels": [
                {
                    "Lambda": c.landau_level,
                    "eigenvalues": c.eigenvalues,
                    "offsets": c.offsets,
                    "exact_hits": c.exact_hits,
                    "count": c.count,
                    "min_offset": c.min_offset,
                    "max_offset": c.max_offset,
                }
                for c in self.clusters
            ]
        }
        return json.dumps(payload, indent=1)


def cluster_report(model: GalerkinModel) -> ClusterReport:
    """Assign eigenvalues to the nearest Landau level and report offsets."""
    vals = spectrum(model.matrix).eigenvalues[::-1]  # ascending
    levels = model.levels()
    nearest = np.argmin(np.abs(vals[:, None] - levels[None, :]), axis=1)
    clusters = []
    for j, lam in enumerate(levels):
        mine = vals[nearest == j]
        offsets = mine - lam
        hits = mine[np.abs(offsets) < EXACT_HIT_TOL]
        clusters.append(
            LevelCluster(
                j,
                float(lam),
                [float(v) for v in mine],
                [float(o) for o in offsets],
                [float(h) for h in hits],
            )
        )
    return ClusterReport(clusters)


@dataclass(frozen=True)
class PersistenceResult:
    """Outcome of the resonance persistence test at one radius."""

    persists: bool
    witnesses: tuple[int, ...]
    details: dict

    def to_json(self) -> str:
        return json.dumps({"persists": self.persists, "witnesses": list(self.witnesses), "details": self.details}, indent=1)


def persistence_check(
    field: MagneticField,
    q: int,
    r: float,
    K: int | None = None,
    Q: int | None = None,
    weight=1.0,
    N: int | None = None,
) -> PersistenceResult:
    """Does the Landau level survive a circle interaction of radius r?

    True iff, for both coupling signs, the model has an eigenvalue within
    1e-9 of Lambda_q whose eigenspace carries every census witness basis
    vector to within 1e-8.  Holds for every weight whenever the circle is
    resonant: witness rows of the coupling vanish identically, so the
    witness vectors are exact eigenvectors at exactly Lambda_q.
    """
    if q < 1:
        raise ValueError("persistence_check requires q >= 1")
    Q = q + 2 if Q is None else Q
    if Q < q:
        raise ValueError("level cutoff Q must include the level under study")
    if K is None:
        # Cut at the level under study: a wider cutoff (sized for higher
        # levels) would re-admit level-q modes numerically blind to the
        # curve, crowding Lambda_q and wrecking the witness conditioning.
        K = default_truncation(field, q, r, tail_rel=MODEL_TAIL_CUTOFF)
    circle = make_circle(r, n=N) if N is not None else make_circle(r)
    wc = load_weight(circle, weight)
    _, witnesses = _census_multiplicity(field, q, r)
    witness_ks = tuple(k for k, _ in witnesses if k <= K)
    lam_q = field.landau_level(q)
    details: dict = {"Lambda_q": lam_q, "Q": Q, "K": K}
    ok = bool(witness_ks) and len(witness_ks) == len(witnesses)
    for sign in (+1, -1):
        model = assemble_model(field, Q, K, wc, sign, N=N, check_resolution=False)
        result = spectrum(model.matrix)
        near = np.abs(result.eigenvalues - lam_q) < EXACT_HIT_TOL
        v = result.eigenvectors[:, near]
        offsets = np.abs(result.eigenvalues - lam_q)
        sign_detail = {
            "near_count": int(np.sum(near)),
            "min_offset": float(np.min(offsets)),
            "support_residuals": [],
        }
        for k in witness_ks:
            e = np.zeros(model.matrix.shape[0], dtype=complex)
            e[flat_index(q, k, K)] = 1.0
            resid = float(np.linalg.norm(e - v @ (v.conj().T @ e))) if v.size else 1.0
            sign_detail["support_residuals"].append(resid)
            if resid >= SUPPORT_TOL:
                ok = False
        if not np.any(near):
            ok = False
        details[f"sign_{'+' if sign > 0 else '-'}"] = sign_detail
    return PersistenceResult(ok, witness_ks, details)
