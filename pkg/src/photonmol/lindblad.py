"""Exact steady state of the dissipative dynamics and photon-statistics
observables."""

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import SolverError
from .fock import HilbertSpec, mode_annihilators
from .model import unvec, vec

# Mean photon numbers below this are treated as exactly zero when forming g2.
_G2_FLOOR = 1e-300

# Trace drift per integration step signalling an unstable step size.
_TRACE_DRIFT_LIMIT = 1e-6


@dataclass(frozen=True)
class Observables:
    """Mean photon numbers and equal-time second-order correlations.

    g2 values are None when the corresponding mean photon number vanishes
    (the correlation is undefined rather than NaN).
    """

    mean_n_a: float
    mean_n_b: float
    g2_a: float | None
    g2_b: float | None


def steady_state(liouv: np.ndarray) -> np.ndarray:
    """Unique steady density matrix of the generator.

    One row of L vec(rho) = 0 is replaced by the trace constraint and the
    square system solved directly; the result is Hermitized and
    trace-normalized.
    """
    size = liouv.shape[0]
    dim = int(round(math.sqrt(size)))
    system = liouv.copy()
    system[0, :] = 0.0
    system[0, :: dim + 1] = 1.0  # trace row
    rhs = np.zeros(size, dtype=complex)
    rhs[0] = 1.0
    try:
        lu = scipy.linalg.lu_factor(system)
        solution = scipy.linalg.lu_solve(lu, rhs)
        for _ in range(2):  # iterative refinement tightens tiny populations
            solution += scipy.linalg.lu_solve(lu, rhs - system @ solution)
    except (scipy.linalg.LinAlgError, ValueError) as err:
        raise SolverError(f"steady-state system is singular: {err}") from err
    rho = unvec(solution)
    rho = 0.5 * (rho + rho.conj().T)
    rho /= np.trace(rho).real

    residual = np.max(np.abs(liouv @ vec(rho)))
    tol = 1e-10 * max(np.max(np.abs(liouv)), 1.0)
    if residual > tol:
        cond = np.linalg.cond(system)
        raise SolverError(
            f"steady-state solve ill-conditioned: residual {residual:.3e} "
            f"exceeds {tol:.3e} (condition number ~{cond:.3e})"
        )
    return rho


def evolve(
    liouv: np.ndarray,
    rho0: np.ndarray,
    t_final: float,
    dt: float,
) -> np.ndarray:
    """Propagate a density matrix with a classical fourth-order Runge-Kutta
    scheme, renormalizing the trace after every step. Independent of
    steady_state(); used as its cross-check oracle."""
    if dt <= 0:
        raise ValueError("dt must be positive")
    if t_final < 0:
        raise ValueError("t_final must be non-negative")
    dim = rho0.shape[0]
    v = vec(rho0.astype(complex))

    n_full, remainder = divmod(t_final, dt)
    steps = [dt] * int(round(n_full))
    if remainder > 1e-12 * dt:
        steps.append(remainder)

    for h in steps:
        k1 = liouv @ v
        k2 = liouv @ (v + 0.5 * h * k1)
        k3 = liouv @ (v + 0.5 * h * k2)
        k4 = liouv @ (v + h * k3)
        v = v + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        trace = np.real(v[:: dim + 1].sum())
        if abs(trace - 1.0) > _TRACE_DRIFT_LIMIT:
            raise SolverError(
                f"trace drifted by {abs(trace - 1.0):.3e} in one step; "
                f"the step size dt={dt} is too large for this generator"
            )
        v = v / trace
    return unvec(v)


def observables(rho: np.ndarray, spec: HilbertSpec) -> Observables:
    """Mean photon numbers and g2(0) of both modes from a density matrix."""
    a, b = mode_annihilators(spec)
    means = []
    g2s = []
    for c in (a, b):
        cd = c.conj().T
        mean_n = max(np.trace(cd @ c @ rho).real, 0.0)
        means.append(mean_n)
        if mean_n < _G2_FLOOR:
            g2s.append(None)
        else:
            pair = max(np.trace(cd @ cd @ c @ c @ rho).real, 0.0)
            g2s.append(pair / mean_n**2)
    return Observables(mean_n_a=means[0], mean_n_b=means[1],
                       g2_a=g2s[0], g2_b=g2s[1])


def validate_density_matrix(
    rho: np.ndarray,
    hermitian_tol: float = 1e-10,
    trace_tol: float = 1e-10,
    eigenvalue_floor: float = -1e-8,
) -> None:
    """Raise if rho violates Hermiticity, unit trace, or positivity."""
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > hermitian_tol:
        raise SolverError(f"density matrix not Hermitian: deviation {herm:.3e}")
    trace_err = abs(np.trace(rho).real - 1.0)
    if trace_err > trace_tol:
        raise SolverError(f"density matrix trace off by {trace_err:.3e}")
    min_eig = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)).min()
    if min_eig < eigenvalue_floor:
        raise SolverError(f"density matrix indefinite: min eigenvalue {min_eig:.3e}")
