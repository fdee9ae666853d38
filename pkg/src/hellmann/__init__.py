"""Bound states, wave functions and scattering phase shifts of the
Hellmann potential and its PT-symmetric / non-Hermitian variants, with an
independent Numerov + shooting oracle for validation."""

__version__ = "0.1.0"

from .bound import (QuantumNumbers, SpectrumEntry, WaveSolution, bound_energy,
                    capital_lambda1, exponent_pair, normalization_constant,
                    quantization_residual, wave_solution, wavefunction)
from .errors import (BracketError, ConvergenceError, DomainError,
                     EvanescentChannelError, FitResidualError, HellmannError,
                     NonNormalizableError, NumericalError, PoleError,
                     QuantumNumberError)
from .model import (ApproxScheme, CoefficientMap, PotentialParams, ProfileRow,
                    Variant, approx_profile, centrifugal_approx,
                    inverse_x_approx, potential_1d, potential_radial,
                    profile_csv, variant_map)
from .oracle import (TABLE1, CalibrationResult, SolverConfig, TableRow,
                     calibrate_table, count_nodes, default_config,
                     integrate_radial, numeric_amplitude, numeric_phase,
                     numerov_eigen, table1_params, tuned_config,
                     validation_report)
from .scatter import (PhaseShiftResult, ScatterState, asymptotic_amplitude,
                      asymptotic_wavenumber, mod_pi, phase_shift,
                      scatter_state)
from .specfun import HyperTriple, f3f2_unit, gauss_2f1, log_gamma, pochhammer

__all__ = [name for name in dir() if not name.startswith("_")]
