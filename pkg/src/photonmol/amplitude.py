"""Weak-drive amplitude treatment of the two-mode system.

With both drives weak the state stays close to vacuum and is expanded over
the six Fock states with at most two total photons, with the vacuum
amplitude fixed to one. Two solvers are provided:

* the hierarchy solve: closed forms for the one-photon amplitudes followed
  by a 3x3 linear system for the two-photon amplitudes (it drops the
  feedback of two-photon amplitudes onto the one-photon ones);
* the full truncated solve: the complete 5x5 steady linear system including
  those feedback terms, valid also for unequal detunings/dissipation rates.
"""

from dataclasses import dataclass

import numpy as np

from .errors import SolverError
from .model import SystemParams

_SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True)
class AmplitudeSet:
    """Amplitudes of |0,0>, |1,0>, |0,1>, |2,0>, |1,1>, |0,2> with c00 = 1."""

    c00: complex
    c10: complex
    c01: complex
    c20: complex
    c11: complex
    c02: complex


def _drive_phasors(params: SystemParams) -> tuple[complex, complex]:
    ea = params.eps_a * np.exp(1j * params.phi_a)
    eb = params.eps_b * np.exp(1j * params.phi_b)
    return ea, eb


def _require_symmetric(params: SystemParams) -> None:
    if not params.is_symmetric:
        raise ValueError(
            "closed-form amplitudes require equal detunings and dissipation "
            "rates on both modes; use full_truncated_steady for the "
            "asymmetric case"
        )


def one_photon_amplitudes(params: SystemParams) -> tuple[complex, complex]:
    """Closed-form one-photon amplitudes (c10, c01) with c00 = 1.

    Requires the symmetric configuration (equal detunings and rates). The
    interference between the direct drive and the cross-coupled drive of the
    other mode can null either amplitude exactly.
    """
    _require_symmetric(params)
    ea, eb = _drive_phasors(params)
    pole = params.delta_a - 0.5j * params.kappa_a
    denom = pole**2 - params.coupling_j**2
    c10 = (eb * params.coupling_j - ea * pole) / denom
    c01 = (ea * params.coupling_j - eb * pole) / denom
    return c10, c01


def two_photon_amplitudes(
    params: SystemParams, c10: complex, c01: complex
) -> tuple[complex, complex, complex]:
    """Two-photon amplitudes (c20, c11, c02) driven by the one-photon ones.

    Solves the 3x3 linear system of the two-photon manifold in the steady
    state; the one-photon amplitudes enter only as sources.
    """
    _require_symmetric(params)
    ea, eb = _drive_phasors(params)
    delta, kap, j = params.delta_a, params.kappa_a, params.coupling_j
    matrix = np.array(
        [
            [2 * delta + 2 * params.u_a - 1j * kap, _SQRT2 * j, 0.0],
            [0.0, _SQRT2 * j, 2 * delta + 2 * params.u_b - 1j * kap],
            [_SQRT2 * j, 2 * delta - 1j * kap, _SQRT2 * j],
        ],
        dtype=complex,
    )
    rhs = np.array(
        [-_SQRT2 * ea * c10, -_SQRT2 * eb * c01, -(eb * c10 + ea * c01)],
        dtype=complex,
    )
    _check_regular(matrix, "two-photon 3x3 system")
    c20, c11, c02 = np.linalg.solve(matrix, rhs)
    return c20, c11, c02


def hierarchy_steady(params: SystemParams) -> AmplitudeSet:
    """Hierarchy solve: closed-form one-photon amplitudes, then the 3x3
    two-photon system."""
    c10, c01 = one_photon_amplitudes(params)
    c20, c11, c02 = two_photon_amplitudes(params, c10, c01)
    return AmplitudeSet(c00=1.0, c10=c10, c01=c01, c20=c20, c11=c11, c02=c02)


def full_truncated_steady(params: SystemParams) -> AmplitudeSet:
    """Full steady solve of the two-photon-manifold amplitudes.

    Keeps the feedback of the two-photon amplitudes onto the one-photon
    equations and supports unequal detunings and dissipation rates. Unknowns
    are ordered (c10, c01, c20, c11, c02) with c00 fixed to one.
    """
    ea, eb = _drive_phasors(params)
    da, db = params.delta_a, params.delta_b
    ka, kb = params.kappa_a, params.kappa_b
    ua, ub = params.u_a, params.u_b
    j = params.coupling_j
    matrix = np.array(
        [
            [da - 0.5j * ka, j, _SQRT2 * np.conj(ea), np.conj(eb), 0.0],
            [j, db - 0.5j * kb, 0.0, np.conj(ea), _SQRT2 * np.conj(eb)],
            [_SQRT2 * ea, 0.0, 2 * da + 2 * ua - 1j * ka, _SQRT2 * j, 0.0],
            [eb, ea, _SQRT2 * j, da + db - 0.5j * (ka + kb), _SQRT2 * j],
            [0.0, _SQRT2 * eb, 0.0, _SQRT2 * j, 2 * db + 2 * ub - 1j * kb],
        ],
        dtype=complex,
    )
    rhs = np.array([-ea, -eb, 0.0, 0.0, 0.0], dtype=complex)
    _check_regular(matrix, "truncated-manifold 5x5 system")
    c10, c01, c20, c11, c02 = np.linalg.solve(matrix, rhs)
    return AmplitudeSet(c00=1.0, c10=c10, c01=c01, c20=c20, c11=c11, c02=c02)


def g2_approx(amps: AmplitudeSet) -> float | None:
    """Weak-drive second-order correlation of mode A: 2|c20|^2 / |c10|^4.

    Follows from the definition <adag adag a a>/<adag a>^2 with the state in
    the two-photon manifold and c00 = 1. None when the one-photon amplitude
    vanishes (correlation undefined).
    """
    mean = abs(amps.c10) ** 2
    denom = mean * mean
    if denom == 0.0:
        return None
    return 2.0 * abs(amps.c20) ** 2 / denom


def mean_photon_approx(amps: AmplitudeSet) -> float:
    """Weak-drive mean photon number of mode A: |c10|^2."""
    return abs(amps.c10) ** 2


def _check_regular(matrix: np.ndarray, label: str) -> None:
    det = np.linalg.det(matrix)
    scale = np.max(np.abs(matrix))
    if abs(det) < 1e-14 * scale ** matrix.shape[0]:
        raise SolverError(f"{label} is singular (|det| ~ {abs(det):.3e})")
