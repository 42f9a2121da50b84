"""Reference-frame-robust extended CHSH inequality and its violation curve.

Stacking Bob's two CHSH directions onto Alice's side gives a 4x2 coefficient
matrix whose quantum value 4 is attainable for every relative frame rotation
phi, while the classical bound oscillates.  The violation is the ratio of the
quantum value to the classical bound; it stays strictly above one and peaks at
4 - 2*sqrt(2) = 4 / (2 + sqrt(2)) for phi = k*pi/4.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np

from .core import BellCoefficients, classical_bound
from .errors import NumericalError, ValidationError
from .seesaw import SeesawConfig, seesaw_bound
from .svd import singular_value_bound

__all__ = [
    "ROTATED_BASE",
    "RotatedInequality",
    "ViolationCurve",
    "rotated_chsh",
    "rotate_bob",
    "violation_curve",
    "curve_to_csv",
    "curve_to_jsonable",
]

_SQ2 = math.sqrt(2)

# Alice carries the CHSH singular directions plus both of Bob's; Bob keeps his
# two.  Any right rotation of this matrix leaves the SV bound at 4.
ROTATED_BASE = np.array(
    [
        [1 / _SQ2, 1 / _SQ2],
        [1 / _SQ2, -1 / _SQ2],
        [1.0, 0.0],
        [0.0, 1.0],
    ]
)
ROTATED_BASE.flags.writeable = False

_ORTHO_TOL = 1e-10
_CROSS_CHECK_TOL = 1e-4


@dataclass(frozen=True)
class RotatedInequality:
    phi: float
    base: np.ndarray
    g_phi: BellCoefficients


@dataclass(frozen=True)
class ViolationCurve:
    """Samples (phi, classical_bound, quantum_value, violation_ratio)."""

    samples: tuple[tuple[float, float, float, float], ...]


def _rot2(phi: float) -> np.ndarray:
    c, s = math.cos(phi), math.sin(phi)
    return np.array([[c, -s], [s, c]])


def rotated_chsh(phi: float) -> RotatedInequality:
    """Extended CHSH inequality with Bob's frame rotated by phi."""
    g = BellCoefficients(ROTATED_BASE @ _rot2(phi))
    return RotatedInequality(phi=float(phi), base=ROTATED_BASE, g_phi=g)


def rotate_bob(g: BellCoefficients, r: np.ndarray) -> BellCoefficients:
    """Apply an orthogonal rotation to Bob's setting space: g -> g r."""
    r = np.asarray(r, dtype=float)
    if r.shape != (g.m2, g.m2):
        raise ValidationError(f"rotation must be {g.m2}x{g.m2}, got {r.shape}")
    if np.abs(r.T @ r - np.eye(g.m2)).max() > _ORTHO_TOL:
        raise ValidationError("rotation matrix is not orthogonal to tolerance")
    return BellCoefficients(g.entries @ r)


def violation_curve(
    phi_grid, cfg: SeesawConfig = SeesawConfig()
) -> ViolationCurve:
    """Classical bound, quantum value and their ratio over a grid of angles.

    The quantum value is the SV bound, cross-checked at each sample by the
    see-saw lower bound.
    """
    phi_grid = list(phi_grid)
    if not phi_grid:
        raise ValidationError("phi grid must be non-empty")
    samples = []
    for phi in phi_grid:
        g = rotated_chsh(phi).g_phi
        b, _ = classical_bound(g)
        quantum = singular_value_bound(g)
        lower, _ = seesaw_bound(g, 2, cfg)
        if quantum - lower > _CROSS_CHECK_TOL:
            raise NumericalError(
                f"see-saw cross-check failed at phi={phi}: "
                f"SV bound {quantum} vs see-saw {lower}"
            )
        samples.append((float(phi), b, quantum, quantum / b))
    return ViolationCurve(samples=tuple(samples))


def curve_to_csv(curve: ViolationCurve) -> str:
    """CSV emission, columns (phi_rad, classical, quantum, ratio), 12 sig digits."""
    buf = io.StringIO()
    buf.write("phi_rad,classical,quantum,ratio\n")
    for row in curve.samples:
        buf.write(",".join(f"{v:.12g}" for v in row) + "\n")
    return buf.getvalue()


def curve_to_jsonable(curve: ViolationCurve) -> list[dict]:
    return [
        {"phi_rad": p, "classical": b, "quantum": q, "ratio": r}
        for p, b, q, r in curve.samples
    ]
