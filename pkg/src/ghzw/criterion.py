"""The GHZ/W detection criterion.

Each witness family is minimized over its phase parameters; a state is
"detected" when some member of a family reaches a strictly negative
expectation.  Pure states admit closed-form minima; mixed states use a
closed form for the GHZ family and a phase grid plus local refinement
for the W family.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import optimize

from . import qcore, states

#: detection uses strict negativity; |value| below this band is treated
#: as a boundary case and not asserted either way in equivalence tests
BOUNDARY_TOL = 1e-12

W_SECTOR = (1, 2, 4)  # basis indices |001>, |010>, |100>

_GRID = 2048


@dataclass(frozen=True)
class CriterionVerdict:
    ghz_min: float
    ghz_opt_phi: float
    w_min: float
    w_opt_gamma: float
    w_opt_beta: float

    @property
    def detected_by_ghz(self) -> bool:
        return self.ghz_min < 0.0

    @property
    def detected_by_w(self) -> bool:
        return self.w_min < 0.0

    @property
    def detected(self) -> bool:
        return self.detected_by_ghz or self.detected_by_w

    def to_dict(self) -> dict:
        return {
            "ghz_min": self.ghz_min,
            "ghz_opt_phi": self.ghz_opt_phi,
            "w_min": self.w_min,
            "w_opt_gamma": self.w_opt_gamma,
            "w_opt_beta": self.w_opt_beta,
            "detected_by_ghz": self.detected_by_ghz,
            "detected_by_w": self.detected_by_w,
            "detected": self.detected,
        }


def min_ghz_expectation_pure(psi) -> tuple[float, float]:
    """Exact minimum over phi of the GHZ-family expectation on a pure state.

    |<GHZ(phi)|psi>| = |c0 + e^{-i phi} c7| / sqrt(2) is maximized by
    aligning the two terms, so the minimum expectation is
    1/2 - (|c0| + |c7|)^2 / 2 at phi = arg(c7) - arg(c0).
    """
    psi = states.check_pure(psi)
    c0, c7 = psi[0], psi[7]
    value = 0.5 - (abs(c0) + abs(c7)) ** 2 / 2.0
    if abs(c0) < 1e-15 or abs(c7) < 1e-15:
        phi = 0.0  # any phase optimal; fixed by convention
    else:
        phi = float(np.angle(c7) - np.angle(c0))
    return float(value), phi


def min_w_expectation_pure(psi) -> tuple[float, float, float]:
    """Exact minimum over (gamma, beta) of the W-family expectation.

    The two phases independently align the three W-sector amplitudes,
    giving 2/3 - (|c1| + |c2| + |c4|)^2 / 3.
    """
    psi = states.check_pure(psi)
    c1, c2, c4 = psi[1], psi[2], psi[4]
    value = 2.0 / 3.0 - (abs(c1) + abs(c2) + abs(c4)) ** 2 / 3.0
    ref = np.angle(c1) if abs(c1) > 1e-15 else 0.0
    gamma = float(np.angle(c2) - ref) if abs(c2) > 1e-15 and abs(c1) > 1e-15 else 0.0
    beta = float(np.angle(c4) - ref) if abs(c4) > 1e-15 and abs(c1) > 1e-15 else 0.0
    return float(value), gamma, beta


def ghz_condition(p: states.AcinParams) -> bool:
    """Canonical-form detection condition for the GHZ family: (l0+l4)^2 > 1."""
    return (p.lambda0 + p.lambda4) ** 2 > 1.0


def w_condition(p: states.AcinParams) -> bool:
    """Canonical-form detection condition for the W family: (l1+l2+l3)^2 > 2."""
    return (p.lambda1 + p.lambda2 + p.lambda3) ** 2 > 2.0


def min_ghz_expectation_mixed(rho) -> tuple[float, float]:
    """Minimum over phi of Tr(W_GHZ(phi) rho), in closed form.

    <GHZ(phi)|rho|GHZ(phi)> = (rho_00 + rho_77 + 2 Re(e^{i phi} rho_07))/2
    peaks at phi = -arg(rho_07).
    """
    rho = states.check_density_matrix(rho)
    r07 = rho[0, 7]
    value = 0.5 - (rho[0, 0].real + rho[7, 7].real + 2.0 * abs(r07)) / 2.0
    phi = float(-np.angle(r07)) if abs(r07) > 1e-15 else 0.0
    return float(value), phi


def min_w_expectation_mixed(rho) -> tuple[float, float, float]:
    """Minimum over (gamma, beta) of Tr(W_W(gamma, beta) rho).

    With m the 3x3 W-sector block, the overlap is

        (s + 2 Re(m01 e^{i gamma}) + 2 Re((m02 + m12 e^{-i gamma}) e^{i beta})) / 3

    so for fixed gamma the beta maximum is a modulus, leaving a smooth
    one-dimensional problem: gridded, then polished by bounded Brent.
    """
    rho = states.check_density_matrix(rho)
    m = rho[np.ix_(W_SECTOR, W_SECTOR)]
    s = m[0, 0].real + m[1, 1].real + m[2, 2].real
    m01, m02, m12 = m[0, 1], m[0, 2], m[1, 2]

    def profile(gamma):
        return 2.0 * (m01 * np.exp(1j * gamma)).real + 2.0 * np.abs(
            m02 + m12 * np.exp(-1j * gamma)
        )

    grid = np.linspace(0.0, 2.0 * np.pi, _GRID, endpoint=False)
    step = grid[1] - grid[0]
    g0 = grid[int(np.argmax(profile(grid)))]
    res = optimize.minimize_scalar(
        lambda g: -profile(g),
        bounds=(g0 - step, g0 + step),
        method="bounded",
        options={"xatol": 1e-13},
    )
    gamma = float(res.x) if -res.fun >= profile(g0) else float(g0)
    overlap = (s + float(profile(gamma))) / 3.0
    combined = m02 + m12 * np.exp(-1j * gamma)
    beta = float(-np.angle(combined)) if abs(combined) > 1e-15 else 0.0
    gamma = float(np.mod(gamma, 2.0 * np.pi))
    beta = float(np.mod(beta, 2.0 * np.pi))
    return float(2.0 / 3.0 - overlap), gamma, beta


def ghzw_criterion(rho) -> CriterionVerdict:
    """Run both family minimizations on a density matrix.

    Rank-1 inputs are routed through the exact pure-state closed forms.
    """
    rho = states.check_density_matrix(rho)
    eigvals, eigvecs = qcore.hermitian_eigs(rho, vectors=True)
    if eigvals[-1] > 1.0 - 1e-12:
        psi = eigvecs[:, -1]
        psi = psi / np.linalg.norm(psi)
        return ghzw_criterion_pure(psi)
    g_min, phi = min_ghz_expectation_mixed(rho)
    w_min, gamma, beta = min_w_expectation_mixed(rho)
    return CriterionVerdict(g_min, phi, w_min, gamma, beta)


def ghzw_criterion_pure(psi) -> CriterionVerdict:
    """Criterion verdict for a pure state via the closed forms."""
    g_min, phi = min_ghz_expectation_pure(psi)
    w_min, gamma, beta = min_w_expectation_pure(psi)
    return CriterionVerdict(g_min, phi, w_min, gamma, beta)
