"""Bound states of the Kepler-Coulomb problem on 3D spaces of constant
curvature, with minimal-length corrections and an independent
finite-difference cross-check."""

from .geometry import (ATOMIC, Curvature, UnitScales, curved_cos, curved_cot,
                       curved_sin, curved_tan, volume_weight)
from .analytic import (EnergyLevel, HypergeometricData, QuantumNumbers,
                       RadialFunctionTable, bound_state_admissible,
                       energy_level, energy_n, flat_limit_gap,
                       hypergeometric_data, lambda_n, mobius_argument,
                       radial_wavefunction, radial_wavefunction_flat,
                       transition_level)
from .corrections import (CorrectedLevel, MinimalLength, combined_level,
                          crossover_level, length_bound_from_precision,
                          ml_shift, planck_Q, relative_shift_s)
from .oracle import (Discretization, SpectralReport, build,
                     count_bound_states, eigenfunction, eigenvalues,
                     eigenvalues_extrapolated, ode_residual, potential,
                     richardson, sturm_count)
from .specfun import (gauss2f1_terminating, jacobi_laguerre_limit_gap,
                      jacobi_poly, kummer1f1_terminating, laguerre_poly)

__version__ = "0.1.0"
