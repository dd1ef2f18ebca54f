"""Uniform point evaluation across the three solvers.

Solver ids (as used in JSON configs and on the command line):

* "MasterEquation"  exact steady state of the dissipative dynamics in a
                    truncated Fock space,
* "Hierarchy"       closed-form one-photon amplitudes plus the 3x3
                    two-photon system,
* "FullTruncated"   the full 5x5 steady amplitude system.
"""

from .amplitude import (
    full_truncated_steady,
    g2_approx,
    hierarchy_steady,
    mean_photon_approx,
)
from .fock import HilbertSpec
from .lindblad import observables, steady_state
from .model import SystemParams, liouvillian

SOLVER_MASTER_EQUATION = "MasterEquation"
SOLVER_HIERARCHY = "Hierarchy"
SOLVER_FULL_TRUNCATED = "FullTruncated"

SOLVERS = (SOLVER_MASTER_EQUATION, SOLVER_HIERARCHY, SOLVER_FULL_TRUNCATED)

_CANONICAL = {name.lower(): name for name in SOLVERS}

# Fock cutoff per mode for master-equation runs; one level above the
# two-photon manifold keeps the truncation error negligible at weak drive.
DEFAULT_N_MAX = 3


def normalize_solver(name: str) -> str:
    try:
        return _CANONICAL[name.lower()]
    except KeyError:
        raise ValueError(
            f"unknown solver {name!r}; expected one of {', '.join(SOLVERS)}"
        ) from None


def evaluate_point(
    params: SystemParams, solver: str, n_max: int = DEFAULT_N_MAX
) -> tuple[float | None, float]:
    """(g2_a, mean_n_a) at one parameter point under the chosen solver.

    g2_a is None where the correlation is undefined (zero mean photon
    number).
    """
    solver = normalize_solver(solver)
    if solver == SOLVER_MASTER_EQUATION:
        spec = HilbertSpec(n_max, n_max)
        rho = steady_state(liouvillian(params, spec))
        obs = observables(rho, spec)
        return obs.g2_a, obs.mean_n_a
    amps = hierarchy_steady(params) if solver == SOLVER_HIERARCHY \
        else full_truncated_steady(params)
    return g2_approx(amps), mean_photon_approx(amps)
