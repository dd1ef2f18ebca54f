"""Physical parameter set and generators of the open-system dynamics.

All rates and energies are dimensionless multiples of the common dissipation
scale kappa; the model lives in the frame rotating at the shared drive
frequency, so only detunings appear.
"""

import math
from dataclasses import asdict, dataclass, replace

import numpy as np

from .fock import HilbertSpec, mode_annihilators

_TAU = 2.0 * math.pi

PARAM_FIELDS = (
    "delta_a", "delta_b", "coupling_j", "u_a", "u_b",
    "eps_a", "eps_b", "phi_a", "phi_b", "kappa_a", "kappa_b",
)


@dataclass(frozen=True)
class SystemParams:
    """Parameters of two coupled, coherently driven Kerr-nonlinear modes.

    delta_a, delta_b   detunings of the modes from the drive
    coupling_j         real inter-mode coupling strength (>= 0)
    u_a, u_b           Kerr interaction strengths
    eps_a, eps_b       drive amplitudes (>= 0; phases carry the sign)
    phi_a, phi_b       drive phases in radians
    kappa_a, kappa_b   dissipation rates (> 0)
    """

    delta_a: float = 0.0
    delta_b: float = 0.0
    coupling_j: float = 0.0
    u_a: float = 0.0
    u_b: float = 0.0
    eps_a: float = 0.0
    eps_b: float = 0.0
    phi_a: float = 0.0
    phi_b: float = 0.0
    kappa_a: float = 1.0
    kappa_b: float = 1.0

    def __post_init__(self):
        if self.kappa_a <= 0 or self.kappa_b <= 0:
            raise ValueError("dissipation rates must be positive")
        if self.eps_a < 0 or self.eps_b < 0:
            raise ValueError("drive amplitudes must be non-negative")
        if self.coupling_j < 0:
            raise ValueError("coupling strength must be non-negative")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "SystemParams":
        unknown = set(data) - set(PARAM_FIELDS)
        if unknown:
            raise ValueError(f"unknown parameter fields: {sorted(unknown)}")
        return cls(**{k: float(v) for k, v in data.items()})

    def replace(self, **changes) -> "SystemParams":
        return replace(self, **changes)

    @property
    def is_symmetric(self) -> bool:
        """True when both modes share the same detuning and dissipation rate."""
        return self.delta_a == self.delta_b and self.kappa_a == self.kappa_b


@dataclass(frozen=True)
class DriveRatios:
    """Strength ratio eta = eps_a/eps_b and relative phase phi = phi_a - phi_b."""

    eta: float
    phi: float


def wrap_phase(angle: float) -> float:
    """Wrap an angle to (-pi, pi]."""
    wrapped = angle - _TAU * math.floor((angle + math.pi) / _TAU)
    if wrapped <= -math.pi:
        wrapped = math.pi
    return wrapped


def drive_ratios(params: SystemParams) -> DriveRatios:
    """Drive strength ratio and relative phase; eta is inf when only A is driven."""
    if params.eps_a == 0 and params.eps_b == 0:
        raise ValueError("drive ratios undefined: both drive amplitudes are zero")
    eta = math.inf if params.eps_b == 0 else params.eps_a / params.eps_b
    return DriveRatios(eta=eta, phi=wrap_phase(params.phi_a - params.phi_b))


def symmetric_params(
    coupling_j: float,
    delta: float = 0.0,
    u: float = 0.0,
    eta: float = math.inf,
    phi: float = 0.0,
    eps_a: float = 0.01,
    kappa: float = 1.0,
    u_a: float | None = None,
    u_b: float | None = None,
) -> SystemParams:
    """Build the symmetric configuration used throughout: equal detunings and
    dissipation rates, drive set by (eps_a, eta, phi) with phi on mode A.
    """
    if eta <= 0:
        raise ValueError("drive strength ratio eta must be positive")
    eps_b = 0.0 if math.isinf(eta) else eps_a / eta
    return SystemParams(
        delta_a=delta, delta_b=delta, coupling_j=coupling_j,
        u_a=u if u_a is None else u_a, u_b=u if u_b is None else u_b,
        eps_a=eps_a, eps_b=eps_b, phi_a=phi, phi_b=0.0,
        kappa_a=kappa, kappa_b=kappa,
    )


def hamiltonian(params: SystemParams, spec: HilbertSpec) -> np.ndarray:
    """Rotating-frame Hamiltonian: detunings, beam-splitter coupling, Kerr
    terms and coherent drives on both modes. Hermitian by construction."""
    a, b = mode_annihilators(spec)
    ad, bd = a.conj().T, b.conj().T
    h = (
        params.delta_a * (ad @ a)
        + params.delta_b * (bd @ b)
        + params.coupling_j * (a @ bd + ad @ b)
        + params.u_a * (ad @ ad @ a @ a)
        + params.u_b * (bd @ bd @ b @ b)
    )
    drive = (
        params.eps_a * np.exp(1j * params.phi_a) * ad
        + params.eps_b * np.exp(1j * params.phi_b) * bd
    )
    return h + drive + drive.conj().T


def vec(rho: np.ndarray) -> np.ndarray:
    """Column-stacking vectorization."""
    return rho.reshape(-1, order="F")


def unvec(v: np.ndarray) -> np.ndarray:
    dim = int(round(math.sqrt(v.size)))
    return v.reshape((dim, dim), order="F")


def liouvillian(params: SystemParams, spec: HilbertSpec) -> np.ndarray:
    """Generator of d(vec rho)/dt = L vec(rho): commutator with the Hamiltonian
    plus a dissipator kappa_x * D[x] for each mode, in column-stacking
    convention."""
    h = hamiltonian(params, spec)
    a, b = mode_annihilators(spec)
    dim = h.shape[0]
    eye = np.eye(dim, dtype=complex)
    liouv = -1j * (np.kron(eye, h) - np.kron(h.T, eye))
    for rate, c in ((params.kappa_a, a), (params.kappa_b, b)):
        cdc = c.conj().T @ c
        liouv += rate * (
            np.kron(c.conj(), c)
            - 0.5 * np.kron(eye, cdc)
            - 0.5 * np.kron(cdc.T, eye)
        )
    return liouv
