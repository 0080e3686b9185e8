"""Resonant radii of circles for a fixed Landau level.

A circle of radius r is resonant for level q when t = b r^2 / 2 is a
positive zero of some L_q^(k-q), k = 0, 1, 2, ...; the number of such k
is the kernel dimension m_q(r) of the level-q interaction operator.  The
census enumerates all resonant radii up to a bound by sweeping k,
working throughout in the scale-free variable t and converting to r at
the end.  Termination uses the strict growth of every zero in the
parameter: once the smallest zero of L_q^(k-q) exceeds the target no
larger k can contribute.

Also provided: the closed-form sets for q = 1, 2, the zero-curve
functions eta_l(alpha) = sqrt(2 zeta_l(alpha) / b) with their linear
interpolation at negative parameters, and the scalar spectral-gap and
coupling-threshold constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .basis import MagneticField
from .laguerre import ZERO_MEMBERSHIP_RTOL, LaguerreSpec, laguerre_zeros, positive_zeros

__all__ = [
    "CensusEntry",
    "multiplicity",
    "census",
    "explicit_D12",
    "eta_curve",
    "gap_constants",
    "coupling_lower_bounds",
    "census_to_csv",
    "eta_table_to_csv",
]


@dataclass(frozen=True)
class CensusEntry:
    """One resonant radius with its multiplicity and witnesses.

    Each witness is a pair (k, t) with t = b r^2 / 2 the zero of
    L_q^(k-q) that puts the circle inside the nodal set of phi_{k,q}.
    """

    r: float
    t: float
    multiplicity: int
    witnesses: tuple[tuple[int, float], ...]

    def __post_init__(self):
        if self.multiplicity != len(self.witnesses):
            raise ValueError("multiplicity must equal the number of witnesses")


def _positive_zero_set(q: int, k: int) -> np.ndarray:
    """Positive zeros of L_q^(k-q), ascending (empty for k = 0)."""
    if k >= q:
        return positive_zeros(q, float(k - q))
    if k == 0:
        return np.empty(0)
    return positive_zeros(k, float(q - k))


@lru_cache(maxsize=None)
def _zero_table(q: int, t_cap: float) -> tuple[np.ndarray, np.ndarray]:
    """All (t, k) with t a positive zero of L_q^(k-q), t <= t_cap, sorted by t."""
    ts: list[float] = []
    ks: list[int] = []
    k = 0
    while True:
        zeros = _positive_zero_set(q, k)
        if k >= q and zeros.size and zeros[0] > t_cap * (1.0 + ZERO_MEMBERSHIP_RTOL):
            break
        for z in zeros:
            if z <= t_cap * (1.0 + ZERO_MEMBERSHIP_RTOL):
                ts.append(float(z))
                ks.append(k)
        k += 1
    order = np.argsort(ts)
    return np.asarray(ts)[order], np.asarray(ks, dtype=int)[order]


def _table_bucket(t_max: float) -> float:
    """Cache-friendly cap: the next power of two at or above t_max."""
    return float(2.0 ** math.ceil(math.log2(max(t_max, 1.0))))


def _witnesses_at(q: int, t: float, ts: np.ndarray, ks: np.ndarray) -> list[tuple[int, float]]:
    lo = np.searchsorted(ts, t * (1.0 - 2.0 * ZERO_MEMBERSHIP_RTOL))
    hi = np.searchsorted(ts, t * (1.0 + 2.0 * ZERO_MEMBERSHIP_RTOL))
    out = []
    for idx in range(lo, hi):
        if abs(ts[idx] - t) <= ZERO_MEMBERSHIP_RTOL * max(t, ts[idx]):
            out.append((int(ks[idx]), float(ts[idx])))
    return out


def multiplicity(field: MagneticField, q: int, r: float) -> tuple[int, list[tuple[int, float]]]:
    """m_q(r) together with the witnessing (k, zero) pairs.

    q = 0 is rejected: the lowest-level operator has trivial kernel for
    every curve and weight, so there is nothing to enumerate.
    """
    if q < 1:
        raise ValueError("multiplicity is defined for q >= 1; the q = 0 kernel is always trivial")
    if not r > 0:
        raise ValueError(f"radius must be positive, got {r}")
    t = 0.5 * field.b * r * r
    ts, ks = _zero_table(q, _table_bucket(t))
    witnesses = _witnesses_at(q, t, ts, ks)
    return len(witnesses), witnesses


def census(field: MagneticField, q: int, r_max: float) -> list[CensusEntry]:
    """All resonant radii in (0, r_max] with multiplicities, ascending.

    Radii whose t values agree to relative 1e-9 are merged and their
    witnesses pooled; distinct entries stay strictly ordered.
    """
    if q < 1:
        raise ValueError("census is defined for q >= 1; the q = 0 kernel is always trivial")
    if not r_max > 0:
        raise ValueError(f"r_max must be positive, got {r_max}")
    t_max = 0.5 * field.b * r_max * r_max
    ts, ks = _zero_table(q, _table_bucket(t_max))
    keep = ts <= t_max * (1.0 + ZERO_MEMBERSHIP_RTOL)
    ts, ks = ts[keep], ks[keep]
    entries: list[CensusEntry] = []
    group_t: list[float] = []
    group_w: list[tuple[int, float]] = []

    def flush():
        if not group_t:
            return
        t_mean = float(np.mean(group_t))
        r = math.sqrt(2.0 * t_mean / field.b)
        witnesses = tuple(sorted(group_w))
        entries.append(CensusEntry(r, t_mean, len(witnesses), witnesses))

    for t, k in zip(ts, ks):
        if group_t and abs(t - group_t[-1]) > ZERO_MEMBERSHIP_RTOL * max(t, group_t[-1]):
            flush()
            group_t, group_w = [], []
        group_t.append(float(t))
        group_w.append((int(k), float(t)))
    flush()
    return entries


def explicit_D12(field: MagneticField, n_max: int) -> dict[str, list[float]]:
    """Closed-form resonant sets for levels 1 and 2, n = 1 .. n_max.

    D1  : r = sqrt((2/b) n)
    D2  : r = sqrt((2/b)((n+1) - sqrt(n+1))) union sqrt((2/b)(n + sqrt(n)))
    D22 : r = sqrt((2/b)(n^2 + n)), the double-multiplicity radii
    D21 : D2 minus D22
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    b = field.b
    n = np.arange(1, n_max + 1, dtype=float)

    def radii(tvals):
        return np.sqrt(2.0 * np.asarray(tvals) / b)

    d1 = radii(n)
    lower = radii((n + 1) - np.sqrt(n + 1))
    upper = radii(n + np.sqrt(n))
    d2 = np.unique(np.concatenate([lower, upper]))
    merged = [d2[0]]
    for r in d2[1:]:
        if abs(r - merged[-1]) > ZERO_MEMBERSHIP_RTOL * max(r, merged[-1]):
            merged.append(r)
    d2 = np.asarray(merged)
    d22 = radii(n * n + n)
    is_double = np.array(
        [np.any(np.abs(d22 - r) <= ZERO_MEMBERSHIP_RTOL * np.maximum(d22, r)) for r in d2]
    )
    return {
        "D1": [float(x) for x in d1],
        "D2": [float(x) for x in d2],
        "D22": [float(x) for x in d22],
        "D21": [float(x) for x in d2[~is_double]],
    }


@lru_cache(maxsize=None)
def _zeros_desc_at_negative(q: int, n: int) -> tuple[float, ...]:
    """Positive zeros of L_q^(-n), descending, via the reflection reduction."""
    return tuple(sorted((z for z, _ in laguerre_zeros(LaguerreSpec(q, float(-n))) if z > 0), reverse=True))


def _zeta(q: int, ell: int, alpha: float) -> float:
    """ell-th largest zero of L_q^(alpha), extended below 0 at integer steps."""
    if alpha >= 0:
        zeros = positive_zeros(q, alpha)
        return float(zeros[q - ell])
    if abs(alpha - round(alpha)) <= 1e-12:
        return _zeros_desc_at_negative(q, -round(alpha))[ell - 1]
    n_hi = math.floor(alpha)  # interval (n_hi, n_hi + 1)
    z_lo = _zeta(q, ell, float(n_hi))
    z_hi = _zeta(q, ell, float(n_hi + 1)) if n_hi + 1 < 0 else float(positive_zeros(q, 0.0)[q - ell])
    frac = alpha - n_hi
    return z_lo + frac * (z_hi - z_lo)


def eta_curve(field: MagneticField, q: int, ell: int, alpha: float) -> float:
    """Radius curve eta_ell(alpha) = sqrt(2 zeta_ell(alpha) / b).

    zeta_ell extends to [ell - q, inf): at negative integers -n it takes
    the ell-th largest positive zero of L_q^(-n), with linear
    interpolation in between.  Strictly increasing in alpha; lower ell
    dominates where both are defined.
    """
    if q < 1:
        raise ValueError("eta curves require q >= 1")
    if not 1 <= ell <= q:
        raise ValueError(f"curve index must satisfy 1 <= ell <= q, got {ell}")
    if alpha < (ell - q) - 1e-12:
        raise ValueError(f"alpha={alpha} below the domain edge {ell - q} of curve {ell}")
    zeta = _zeta(q, ell, max(alpha, float(ell - q)))
    return math.sqrt(2.0 * zeta / field.b)


def gap_constants(field: MagneticField, q: int, lam: float) -> tuple[float, float]:
    """Spectral-gap constants 2b/((L_q+lam)(L_{q-1}+lam)) and 2b/((L_q+lam)(L_{q+1}+lam)).

    Requires lam > -b and q >= 1 (the downward gap needs a level below).
    """
    if lam <= -field.b:
        raise ValueError(f"lambda must exceed -b = {-field.b}, got {lam}")
    if q < 1:
        raise ValueError("gap constants require q >= 1")
    lq = field.landau_level(q)
    plus = 2.0 * field.b / ((lq + lam) * (field.landau_level(q - 1) + lam))
    minus = 2.0 * field.b / ((lq + lam) * (field.landau_level(q + 1) + lam))
    return plus, minus


def coupling_lower_bounds(field: MagneticField, q: int, c: float) -> tuple[float, float]:
    """Lower bounds for the coupling thresholds below which the level-q
    eigenspace of the perturbed operator reduces to the kernel of the
    compressed interaction:

        plus  >= 2bc / ((L_q+1)(L_{q-1}+1))
        minus >= 2bc / (2b + (L_q+1)(L_{q+1}+1))

    c > 0 is the trace constant, supplied by the caller.  For q = 0 the
    plus threshold is unconstrained (infinite).
    """
    if not c > 0:
        raise ValueError(f"trace constant must be positive, got {c}")
    if q < 0:
        raise ValueError("level index must be >= 0")
    b = field.b
    lq = field.landau_level(q)
    minus = 2.0 * b * c / (2.0 * b + (lq + 1.0) * (field.landau_level(q + 1) + 1.0))
    if q == 0:
        return math.inf, minus
    plus = 2.0 * b * c / ((lq + 1.0) * (field.landau_level(q - 1) + 1.0))
    return plus, minus


def census_to_csv(entries: list[CensusEntry]) -> str:
    """CSV rows r,t,multiplicity,witness_ks (witness ks ';'-joined)."""
    lines = ["r,t,multiplicity,witness_ks"]
    for e in entries:
        ks = ";".join(str(k) for k, _ in e.witnesses)
        lines.append(f"{e.r:.17g},{e.t:.17g},{e.multiplicity},{ks}")
    return "\n".join(lines) + "\n"


def eta_table_to_csv(field: MagneticField, q: int, alphas) -> str:
    """CSV table alpha,eta_1..eta_q; out-of-domain cells print as nan."""
    header = "alpha," + ",".join(f"eta_{ell}" for ell in range(1, q + 1))
    lines = [header]
    for a in alphas:
        cells = [f"{a:.17g}"]
        for ell in range(1, q + 1):
            if a < (ell - q) - 1e-12:
                cells.append("nan")
            else:
                cells.append(f"{eta_curve(field, q, ell, float(a)):.17g}")
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
