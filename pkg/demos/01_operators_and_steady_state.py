"""Build the two-mode system from the ground up and solve its steady state.

Everything is expressed in units of the dissipation rate kappa. We start
from the ladder operators, assemble the Hamiltonian and the generator of
the open-system dynamics, and compare the steady state of a single driven
linear mode against the textbook answer.
"""

import numpy as np

import photonmol as pm

# A small truncated Fock space: up to 3 photons per mode.
spec = pm.HilbertSpec(3, 3)
print(f"Hilbert space: {spec.n_max_a}+1 x {spec.n_max_b}+1 levels, "
      f"dimension {spec.dim}")

a, b = pm.mode_annihilators(spec)
print("\nannihilation of |1,0>:", np.round(a @ spec.basis_vector(1, 0), 3).real[:4], "...")
print("number operator diagonal (mode A):",
      np.diag(a.conj().T @ a).real.astype(int))

# Drive only mode A of a linear (no Kerr) pair of coupled modes.
params = pm.symmetric_params(coupling_j=3.0, delta=0.5, u=0.0,
                             eta=np.inf, eps_a=0.01)
h = pm.hamiltonian(params, spec)
print(f"\nHamiltonian is Hermitian: "
      f"{np.max(np.abs(h - h.conj().T)) < 1e-14}")

liouv = pm.liouvillian(params, spec)
rho = pm.steady_state(liouv)
obs = pm.observables(rho, spec)
print(f"steady state: <n_a> = {obs.mean_n_a:.3e}, g2_a = {obs.g2_a:.6f}")
print("a linear driven mode stays coherent, so g2 = 1 exactly")

# With the coupling switched off the driven mode is the damped oscillator
# of every quantum optics course: <n> = eps^2 / (delta^2 + kappa^2/4).
single = pm.symmetric_params(coupling_j=0.0, delta=0.5, eta=np.inf, eps_a=0.01)
obs_single = pm.observables(pm.steady_state(pm.liouvillian(single, spec)), spec)
expected = 0.01**2 / (0.5**2 + 0.25)
print(f"\nsingle mode: <n_a> = {obs_single.mean_n_a:.6e} "
      f"(analytic {expected:.6e})")

# The time integrator is an independent cross-check of the direct solve.
rho0 = np.zeros((spec.dim, spec.dim), dtype=complex)
rho0[0, 0] = 1.0
rho_t = pm.evolve(liouv, rho0, t_final=30.0, dt=1e-3)
print(f"\n|direct - integrated(t=30/kappa)| = "
      f"{np.max(np.abs(rho - rho_t)):.2e}")
