"""Constructors for the three-qubit states used throughout the toolkit.

Everything returns plain numpy arrays: pure states as unit-norm kets of
dimension 8, density matrices as 8x8 Hermitian PSD unit-trace matrices.
Amplitude ordering follows the basis convention in :mod:`ghzw.qcore`.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass

import numpy as np

from . import qcore

SQRT2 = np.sqrt(2.0)
SQRT3 = np.sqrt(3.0)
SQRT5 = np.sqrt(5.0)

#: basis indices of the five-term generalized Schmidt support
ACIN_SUPPORT = (0, 1, 2, 4, 7)

NORM_TOL = 1e-12
DM_TOL = 1e-10


@dataclass(frozen=True)
class AcinParams:
    """Five nonnegative amplitudes and one phase of the canonical form.

    Constraints: sum of lambda_i^2 equals 1, alpha in [0, pi].
    """

    lambda0: float
    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float
    alpha: float = 0.0

    def __post_init__(self):
        lams = self.lambdas
        if not np.all(np.isfinite(lams)) or not np.isfinite(self.alpha):
            raise ValueError("AcinParams entries must be finite")
        if np.any(lams < 0):
            raise ValueError("lambda_i must be nonnegative")
        if abs(np.sum(lams**2) - 1.0) > 1e-10:
            raise ValueError("sum of lambda_i^2 must equal 1 within 1e-10")
        if not (0.0 <= self.alpha <= np.pi):
            raise ValueError("alpha must lie in [0, pi]")

    @property
    def lambdas(self) -> np.ndarray:
        return np.array(
            [self.lambda0, self.lambda1, self.lambda2, self.lambda3, self.lambda4]
        )


@dataclass(frozen=True)
class SuperpositionParams:
    """Complex weights and phases of a GHZ/W superposition."""

    a: complex
    b: complex
    phi: float = 0.0
    gamma: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        if abs(abs(self.a) ** 2 + abs(self.b) ** 2 - 1.0) > NORM_TOL:
            raise ValueError("|a|^2 + |b|^2 must equal 1 within 1e-12")


def check_pure(psi) -> np.ndarray:
    """Validate a dim-8 unit-norm ket."""
    psi = qcore.as_ket(psi, dim=8)
    if abs(qcore.norm_sq(psi) - 1.0) > NORM_TOL:
        raise ValueError(f"state norm^2 deviates from 1 by more than {NORM_TOL}")
    return psi


def check_density_matrix(rho) -> np.ndarray:
    """Validate an 8x8 Hermitian, PSD, unit-trace matrix."""
    rho = qcore.as_operator(rho, dim=8)
    if np.max(np.abs(rho - rho.conj().T)) > DM_TOL:
        raise ValueError("density matrix is not Hermitian within 1e-10")
    if abs(np.trace(rho).real - 1.0) > DM_TOL:
        raise ValueError("density matrix trace deviates from 1 by more than 1e-10")
    if qcore.hermitian_eigs(rho)[0] < -DM_TOL:
        raise ValueError("density matrix has an eigenvalue below -1e-10")
    return rho


def make_ghz(phi: float = 0.0) -> np.ndarray:
    """(|000> + e^{i phi}|111>)/sqrt(2)."""
    psi = np.zeros(8, dtype=complex)
    psi[0] = 1.0 / SQRT2
    psi[7] = np.exp(1j * phi) / SQRT2
    return psi


def make_w(gamma: float = 0.0, beta: float = 0.0) -> np.ndarray:
    """(|001> + e^{i gamma}|010> + e^{i beta}|100>)/sqrt(3)."""
    psi = np.zeros(8, dtype=complex)
    psi[1] = 1.0 / SQRT3
    psi[2] = np.exp(1j * gamma) / SQRT3
    psi[4] = np.exp(1j * beta) / SQRT3
    return psi


def make_acin(p: AcinParams) -> np.ndarray:
    """Five-term canonical-form state from its parameters."""
    psi = np.zeros(8, dtype=complex)
    psi[0] = p.lambda0
    psi[1] = p.lambda1 * np.exp(1j * p.alpha)
    psi[2] = p.lambda2
    psi[4] = p.lambda3
    psi[7] = p.lambda4
    return psi


def make_xi() -> np.ndarray:
    """The equal-weight five-term state that evades both witness families."""
    psi = np.zeros(8, dtype=complex)
    psi[list(ACIN_SUPPORT)] = 1.0 / SQRT5
    return psi


def make_superposition(s: SuperpositionParams) -> np.ndarray:
    """a*GHZ(phi) + b*W(gamma, beta); unit norm since GHZ and W are orthogonal."""
    return s.a * make_ghz(s.phi) + s.b * make_w(s.gamma, s.beta)


def haar_random_pure(seed: int) -> np.ndarray:
    """Haar-random three-qubit pure state, deterministic per seed."""
    rng = np.random.default_rng(seed)
    amps = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    return amps / np.linalg.norm(amps)


def mix(components) -> np.ndarray:
    """Density matrix of a convex mixture of pure states.

    `components` is a sequence of (weight, ket) pairs with nonnegative
    weights summing to 1.
    """
    weights = np.array([float(p) for p, _ in components])
    if np.any(weights < 0):
        raise ValueError("mixture weights must be nonnegative")
    if abs(weights.sum() - 1.0) > NORM_TOL:
        raise ValueError("mixture weights must sum to 1 within 1e-12")
    rho = np.zeros((8, 8), dtype=complex)
    for p, psi in components:
        rho += p * qcore.outer(check_pure(psi))
    return rho


# ---------------------------------------------------------------------------
# JSON file formats (shared with the CLI)


def state_to_dict(psi) -> dict:
    psi = check_pure(psi)
    return {"dims": [2, 2, 2], "amplitudes": [[z.real, z.imag] for z in psi]}


def state_from_dict(obj: dict) -> np.ndarray:
    if obj.get("dims") != [2, 2, 2]:
        raise ValueError(f"state file dims must be [2, 2, 2], got {obj.get('dims')!r}")
    amps = obj.get("amplitudes")
    if not isinstance(amps, list) or len(amps) != 8:
        raise ValueError("state file must carry exactly 8 [re, im] amplitude pairs")
    psi = np.array([complex(re, im) for re, im in amps])
    return check_pure(psi)


def rho_to_dict(rho) -> dict:
    rho = check_density_matrix(rho)
    return {
        "dims": [2, 2, 2],
        "matrix": [[[z.real, z.imag] for z in row] for row in rho],
    }


def rho_from_dict(obj: dict) -> np.ndarray:
    if obj.get("dims") != [2, 2, 2]:
        raise ValueError(f"density file dims must be [2, 2, 2], got {obj.get('dims')!r}")
    rows = obj.get("matrix")
    if not isinstance(rows, list) or len(rows) != 8 or any(len(r) != 8 for r in rows):
        raise ValueError("density file must carry an 8x8 matrix of [re, im] pairs")
    rho = np.array([[complex(re, im) for re, im in row] for row in rows])
    return check_density_matrix(rho)


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_state(psi, path: str) -> None:
    _atomic_write(path, json.dumps(state_to_dict(psi)))


def load_state(path: str) -> np.ndarray:
    with open(path) as fh:
        return state_from_dict(json.load(fh))


def save_rho(rho, path: str) -> None:
    _atomic_write(path, json.dumps(rho_to_dict(rho)))


def load_rho(path: str) -> np.ndarray:
    with open(path) as fh:
        return rho_from_dict(json.load(fh))
