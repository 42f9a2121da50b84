"""Measurement directions and their realization as states and observables.

An alpha certificate converts into unit measurement directions v_x, w_y whose
scalar products are quantum correlations: on the maximally entangled state of
two D-level systems, observables built from pairwise anticommuting Hermitian
involutions X_i satisfy <phi+| (v.X) x (w.X*) |phi+> = v.w.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import BellCoefficients, CorrelationTable
from .errors import DimensionMismatchError, NumericalError, ValidationError
from .svd import TruncatedSVD
from .tightness import AlphaSolution

__all__ = [
    "VectorStrategy",
    "GeneratorSet",
    "QuantumRealization",
    "directions_from_alpha",
    "strategy_value",
    "anticommuting_generators",
    "realize",
    "observable_from_polarizer_angle",
    "maximally_entangled_state",
    "realization_to_jsonable",
]

_UNIT_TOL = 1e-8
_RENORM_TOL = 1e-6
_EXPECT_TOL = 1e-9

MAX_GENERATOR_DIM = 24

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True)
class VectorStrategy:
    """Unit measurement directions, one row per setting."""

    v: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        for name in ("v", "w"):
            arr = np.atleast_2d(np.asarray(getattr(self, name), dtype=float))
            norms = np.linalg.norm(arr, axis=1)
            if np.abs(norms - 1.0).max() > _UNIT_TOL:
                raise ValidationError(f"{name} directions are not unit vectors")
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    @property
    def dprime(self) -> int:
        return self.v.shape[1]


@dataclass(frozen=True)
class GeneratorSet:
    """Pairwise anticommuting Hermitian involutions generalizing the Paulis."""

    generators: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return self.generators[0].shape[0]


@dataclass(frozen=True)
class QuantumRealization:
    """Maximally entangled state plus observables reproducing v.w correlations."""

    state: np.ndarray
    alice_observables: tuple[np.ndarray, ...]
    bob_observables: tuple[np.ndarray, ...]
    expected: CorrelationTable


def directions_from_alpha(
    t: TruncatedSVD, sol: AlphaSolution, m1: int, m2: int
) -> VectorStrategy:
    """Measurement directions v_x = alpha^T V_row(x), w_y = sqrt(m2/m1) alpha^T W_row(y).

    The d x d' factor ``sol.alpha`` already projects onto the rank-d' support
    of X; rows are renormalized only to absorb roundoff.
    """
    v = t.v_d @ sol.alpha
    w = np.sqrt(m2 / m1) * (t.w_d @ sol.alpha)
    for arr, name in ((v, "Alice"), (w, "Bob")):
        norms = np.linalg.norm(arr, axis=1)
        if np.abs(norms - 1.0).max() > _RENORM_TOL:
            raise NumericalError(
                f"{name} directions deviate from unit norm by "
                f"{np.abs(norms - 1.0).max():.3e}; alpha certificate is invalid"
            )
        arr /= norms[:, None]
    return VectorStrategy(v=v, w=w)


def strategy_value(g: BellCoefficients, s: VectorStrategy) -> float:
    """Bell value sum_{x,y} g[x,y] * (v_x . w_y) of a vector strategy."""
    if s.v.shape[0] != g.m1 or s.w.shape[0] != g.m2:
        raise DimensionMismatchError(
            f"strategy has {s.v.shape[0]}x{s.w.shape[0]} settings, "
            f"coefficients are {g.m1}x{g.m2}"
        )
    return float(np.sum(g.entries * (s.v @ s.w.T)))


def _kron_chain(factors) -> np.ndarray:
    out = np.array([[1.0 + 0j]])
    for f in factors:
        out = np.kron(out, f)
    return out


@lru_cache(maxsize=None)
def _generator_tuple(dprime: int) -> tuple[np.ndarray, ...]:
    # Jordan-Wigner chain on n qubits yields 2n anticommuting involutions
    # (sigma_z^(k-1) x sigma_{x,y} x I^(n-k)); sigma_z^n extends it to 2n+1.
    n = max(1, math.ceil((dprime - 1) / 2))
    eye = np.eye(2, dtype=complex)
    gens = []
    for k in range(1, n + 1):
        prefix = [SIGMA_Z] * (k - 1)
        suffix = [eye] * (n - k)
        gens.append(_kron_chain(prefix + [SIGMA_X] + suffix))
        gens.append(_kron_chain(prefix + [SIGMA_Y] + suffix))
    gens.append(_kron_chain([SIGMA_Z] * n))
    out = tuple(gens[:dprime])
    for m in out:
        m.flags.writeable = False
    return out


def anticommuting_generators(dprime: int) -> GeneratorSet:
    """d' pairwise anticommuting Hermitian involutions on the smallest 2^n space.

    Uses D = 2 for d' <= 3 (the Pauli matrices) and doubles D every second
    additional generator.
    """
    if not 1 <= dprime <= MAX_GENERATOR_DIM:
        raise ValidationError(
            f"generator count must be in [1, {MAX_GENERATOR_DIM}], got {dprime}"
        )
    return GeneratorSet(generators=_generator_tuple(dprime))


def maximally_entangled_state(dim: int) -> np.ndarray:
    """State (1/sqrt(D)) sum_i e_i x e_i on C^D x C^D."""
    state = np.eye(dim, dtype=complex).reshape(-1) / np.sqrt(dim)
    state.flags.writeable = False
    return state


def realize(s: VectorStrategy) -> QuantumRealization:
    """Quantum realization of a vector strategy on the maximally entangled state.

    Alice measures A_x = v_x . X; Bob measures the entrywise-conjugated
    generators, B_y = w_y . X*, so that the joint expectation collapses to
    tr(A B^T)/D = v_x . w_y.
    """
    gens = anticommuting_generators(s.dprime).generators
    dim = gens[0].shape[0]
    stack = np.stack(gens)
    alice = np.tensordot(s.v, stack, axes=(1, 0))
    bob = np.tensordot(s.w, stack.conj(), axes=(1, 0))
    state = maximally_entangled_state(dim)
    expected = np.empty((s.v.shape[0], s.w.shape[0]))
    target = s.v @ s.w.T
    for x in range(alice.shape[0]):
        for y in range(bob.shape[0]):
            val = state.conj() @ (np.kron(alice[x], bob[y]) @ state)
            if abs(val.imag) > _EXPECT_TOL:
                raise NumericalError(f"non-real joint expectation {val}")
            expected[x, y] = val.real
    if np.abs(expected - target).max() > _EXPECT_TOL:
        raise NumericalError(
            "realized expectations deviate from direction scalar products by "
            f"{np.abs(expected - target).max():.3e}"
        )
    return QuantumRealization(
        state=state,
        alice_observables=tuple(alice),
        bob_observables=tuple(bob),
        expected=CorrelationTable(expected),
    )


def observable_from_polarizer_angle(theta_degrees: float) -> np.ndarray:
    """Photon polarization observable cos(2 theta) sigma_x + sin(2 theta) sigma_z.

    The doubled angle reflects that rotating a polarizer by 180 degrees gives
    the same measurement.
    """
    rad = math.radians(2 * theta_degrees)
    return math.cos(rad) * SIGMA_X + math.sin(rad) * SIGMA_Z


def _complex_matrix_to_pairs(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.atleast_2d(m)]


def realization_to_jsonable(r: QuantumRealization) -> dict:
    """JSON-ready dict with complex entries as [re, im] pairs."""
    return {
        "state": [[float(z.real), float(z.imag)] for z in r.state],
        "alice_observables": [_complex_matrix_to_pairs(a) for a in r.alice_observables],
        "bob_observables": [_complex_matrix_to_pairs(b) for b in r.bob_observables],
        "expected": [[float(v) for v in row] for row in r.expected.values],
    }
