class SolverError(RuntimeError):
    """Raised when a numerical solve fails (singular/ill-conditioned system,
    unstable integration, or an optimization that finds no usable point)."""
