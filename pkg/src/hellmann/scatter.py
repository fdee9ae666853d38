"""Scattering states and partial-wave phase shifts (Hermitian radial case).

With t = 1 - exp(-lam r) and epsilon = -E/lam, the approximated radial
equation becomes hypergeometric with the triple

    xi1 = mu - i*kappa + Lambda2,   xi2 = mu - i*kappa - Lambda2,   xi3 = 2*mu,

where kappa = sqrt(A (a - epsilon) - ell (ell+1)),
Lambda2 = sqrt(A (epsilon - b)), A = 2m/(lam hbar^2), and mu = 1 + ell is
the branch regular at the origin.  The r -> infinity connection of the
hypergeometric function yields a sine wave of wavenumber lam*kappa whose
offset gives the phase shift

    delta_ell = pi (1 + ell) / 2 + arg Gamma(2 i kappa)
                - arg Gamma(mu + i kappa - Lambda2)
                - arg Gamma(mu + i kappa + Lambda2).

For b > 0 and E > 0, Lambda2 is purely imaginary (epsilon < b always);
everything is still well defined through complex gamma arguments, and the
numeric oracle confirms the extracted phases in both regimes.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, EvanescentChannelError
from .model import PotentialParams
from .specfun import log_gamma

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ScatterState:
    energy: float
    epsilon: float
    kappa: complex
    capital_lambda2: complex
    mu: float
    xi1: complex
    xi2: complex
    xi3: complex
    propagating: bool        # kappa^2 > 0
    lambda2_real: bool       # epsilon - b >= 0 (real radical branch)


@dataclass(frozen=True)
class PhaseShiftResult:
    ell: int
    energy: float
    delta: float             # mod pi, in (-pi/2, pi/2]
    branch_count: int        # raw value = delta + branch_count * pi
    components: tuple[float, float, float]  # the three arg-Gamma terms
    lambda2_real: bool


def mod_pi(x: float) -> float:
    """Map x into (-pi/2, pi/2] modulo pi."""
    y = (x + math.pi / 2.0) % math.pi - math.pi / 2.0
    if y == -math.pi / 2.0:
        y = math.pi / 2.0
    return y


def scatter_state(params: PotentialParams, energy: float, ell: int) -> ScatterState:
    """Kinematic quantities of one partial wave at positive energy."""
    if energy <= 0:
        raise DomainError(f"scattering needs energy > 0, got {energy}")
    if params.lam <= 0:
        raise DomainError("scattering needs lam > 0")
    if ell < 0:
        raise DomainError(f"ell must be >= 0, got {ell}")
    A = 2.0 * params.mass / (params.lam * params.hbar ** 2)
    eps = -energy / params.lam
    kappa_sq = A * (params.a - eps) - ell * (ell + 1)
    kappa = cmath.sqrt(complex(kappa_sq))
    l2_sq = A * (eps - params.b)
    lam2 = cmath.sqrt(complex(l2_sq))
    mu = float(1 + ell)
    xi1 = mu - 1j * kappa + lam2
    xi2 = mu - 1j * kappa - lam2
    xi3 = complex(2.0 * mu)
    return ScatterState(energy, eps, kappa, lam2, mu, xi1, xi2, xi3,
                        propagating=kappa_sq > 0.0, lambda2_real=l2_sq >= 0.0)


def _gamma_phase(state: ScatterState, nu_sign: int = -1) -> tuple[float, float, float]:
    """The three arg-Gamma terms; nu_sign=-1 is the outgoing-wave choice.

    Flipping the sign of nu = -i kappa conjugates every argument and so
    flips the hypergeometric phase; kept accessible for exactly that test.
    """
    kap = state.kappa
    mu = state.mu
    lam2 = state.capital_lambda2
    s = -float(nu_sign)  # +1 for the standard convention
    c0 = log_gamma(2j * s * kap).imag
    c1 = log_gamma(mu + 1j * s * kap - lam2).imag
    c2 = log_gamma(mu + 1j * s * kap + lam2).imag
    return c0, c1, c2


def phase_shift(params: PotentialParams, energy: float, ell: int) -> PhaseShiftResult:
    """Partial-wave phase shift delta_ell of the approximated problem.

    Raises :class:`EvanescentChannelError` when kappa^2 <= 0 (no
    propagating wave to attach a phase to).  The result carries delta
    mod pi together with the integer branch count of the raw gamma
    arithmetic, since principal-branch args fix the phase only mod pi.
    """
    st = scatter_state(params, energy, ell)
    if not st.propagating:
        raise EvanescentChannelError(
            f"kappa^2 = {st.kappa.real**2 - st.kappa.imag**2:.6g} <= 0 at E = {energy}")
    c0, c1, c2 = _gamma_phase(st)
    raw = math.pi / 2.0 * (1 + ell) + c0 - c1 - c2
    delta = mod_pi(raw)
    branches = round((raw - delta) / math.pi)
    return PhaseShiftResult(ell, energy, delta, branches, (c0, c1, c2),
                            st.lambda2_real)


def asymptotic_amplitude(params: PotentialParams, energy: float, ell: int) -> float:
    """Amplitude of the r -> infinity sine wave of the regular solution.

    The solution normalized to t**mu near the origin behaves like
    amplitude * sin(delta + lam*kappa*r + pi/2) at large r, with

        amplitude = 2 Gamma(2 mu) |Gamma(2 i kappa)| /
                    |Gamma(mu + i kappa - Lambda2) Gamma(mu + i kappa + Lambda2)|.
    """
    st = scatter_state(params, energy, ell)
    if not st.propagating:
        raise EvanescentChannelError(f"no propagating channel at E = {energy}")
    kap = st.kappa
    log_mod = (log_gamma(complex(2.0 * st.mu)).real
               + log_gamma(2j * kap).real
               - log_gamma(st.mu + 1j * kap - st.capital_lambda2).real
               - log_gamma(st.mu + 1j * kap + st.capital_lambda2).real)
    return 2.0 * math.exp(log_mod)


def asymptotic_wavenumber(params: PotentialParams, energy: float, ell: int) -> float:
    """lam * kappa, the large-r wavenumber of the approximated equation."""
    st = scatter_state(params, energy, ell)
    if not st.propagating:
        raise EvanescentChannelError(f"no propagating channel at E = {energy}")
    return params.lam * st.kappa.real
