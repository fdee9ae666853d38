"""Independent numerical ground truth for the analytic results.

Numerov + shooting eigenvalue solver
------------------------------------
Integrates y'' = f(r) y outward on a uniform grid from the regular
boundary y ~ r**(ell+1) and locates eigenvalues by bisecting on the
interior node count (the count is a nondecreasing step function of the
energy; the n-th eigenvalue is the n -> n+1 transition).  Two details
matter for fourth-order convergence with a Coulomb-singular f:

* the f*y product at r = 0 is replaced by its analytic limit (y''(0)),
  not by f(0)*y(0) which is an indeterminate 0 * inf;
* the starting value carries the Frobenius series r**(ell+1) (1 + c1 r
  + c2 r**2) of the regular solution.

The ``PEKERIS_CENTRIFUGAL`` scheme solves the *fully* approximated
equation (1/r**2 -> lam^2/(1-e^{-lam r})^2 in the centrifugal term and
1/r -> lam/(1-e^{-lam r}) inside the potential), i.e. exactly the
problem whose spectrum the closed forms solve; ``EXACT_CENTRIFUGAL``
solves the true Hellmann problem.

Phase extraction fits A sin(lam*kappa*r + phi) over the last ten
asymptotic wavelengths by linear least squares.

Reference-table calibration
---------------------------
The published reference energies state no unit convention, so
:func:`calibrate_table` searches a small discrete space (scale
2m/hbar^2 in {1, 2, 4, 8}; table index read either as the radial index
or as the principal quantum number) and freezes the convention that
minimizes the worst deviation over the lam = 0.001 block.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .bound import QuantumNumbers, SpectrumEntry, bound_energy
from .errors import BracketError, DomainError, FitResidualError
from .model import ApproxScheme, PotentialParams, Variant

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn


@dataclass(frozen=True)
class SolverConfig:
    """Grid and search controls for the Numerov solver."""

    r_max: float
    step: float
    energy_bracket: Optional[tuple[float, float]] = None
    tolerance: float = 1e-10
    node_target: Optional[int] = None

    def __post_init__(self):
        if self.step <= 0:
            raise DomainError(f"step must be > 0, got {self.step}")
        if self.r_max / self.step < 1e3:
            raise DomainError("r_max/step must be >= 1000 for a meaningful grid")
        if self.tolerance <= 0:
            raise DomainError(f"tolerance must be > 0, got {self.tolerance}")


def default_config(params: PotentialParams) -> SolverConfig:
    """The documented default: r_max = max(50, 30/lam), step = r_max/2e5."""
    r_max = max(50.0, 30.0 / params.lam) if params.lam > 0 else 50.0
    return SolverConfig(r_max=r_max, step=r_max / 2e5)


def tuned_config(params: PotentialParams, qn: QuantumNumbers,
                 scheme: ApproxScheme) -> SolverConfig:
    """Physics-sized grid for high-accuracy eigenvalues of one state.

    r_max covers the outer turning point plus enough decay lengths that
    the Dirichlet truncation error is far below the discretization error;
    the step keeps the fourth-order error under ~1e-9 absolute.
    """
    try:
        variant = Variant.RADIAL_HERMITIAN if params.lam > 0 else Variant.COULOMB_LIMIT
        e_est = bound_energy(params, variant, qn).energy.real
    except DomainError:
        e_est = -0.1
    e_mag = max(abs(e_est), 1e-6)
    z_eff = max(abs(params.a) + abs(params.b), 1e-6)
    turn = z_eff / e_mag
    decay = math.sqrt(2.0 * params.mass * e_mag) / params.hbar
    r_max = max(50.0, 1.6 * turn + 30.0 / decay)
    return SolverConfig(r_max=r_max, step=min(0.01, r_max / 2e5))


def _origin_series(params: PotentialParams, energy: float, ell: int,
                   scheme: ApproxScheme) -> tuple[float, float, float]:
    """Frobenius data of f(r) = g/r^2 + p/r + q + O(r): returns (p, q, fy0).

    fy0 is the finite limit of f(r) * r**(ell+1) as r -> 0, used for the
    first Numerov step where f itself diverges.
    """
    s = 2.0 * params.mass / params.hbar ** 2
    a, b, lam = params.a, params.b, params.lam
    g = float(ell * (ell + 1))
    if scheme is ApproxScheme.PEKERIS_CENTRIFUGAL:
        # lam^2/(1-e^{-lam r})^2 = 1/r^2 + lam/r + 5 lam^2/12 + ...
        # lam(-a+b e^{-lam r})/(1-e^{-lam r}) = (b-a)/r + lam((b-a)/2 - b) + ...
        p = g * lam + s * (b - a)
        q = 5.0 * g * lam * lam / 12.0 + s * (lam * ((b - a) / 2.0 - b) - energy)
    else:
        # (-a + b e^{-lam r})/r = (b-a)/r - b lam + ...
        p = s * (b - a)
        q = s * (-b * lam - energy)
    if ell == 0:
        fy0 = p
    elif ell == 1:
        fy0 = g
    else:
        fy0 = 0.0
    return p, q, fy0


def _f_values(params: PotentialParams, energy: float, ell: int,
              scheme: ApproxScheme, r: np.ndarray) -> np.ndarray:
    """f(r) with y'' = f y on the grid; r[0] = 0 gets a sentinel 0."""
    s = 2.0 * params.mass / params.hbar ** 2
    a, b, lam = params.a, params.b, params.lam
    f = np.empty_like(r)
    f[0] = 0.0
    rr = r[1:]
    if scheme is ApproxScheme.PEKERIS_CENTRIFUGAL:
        if lam <= 0:
            raise DomainError("the Pekeris scheme needs lam > 0")
        em = np.exp(-lam * rr)
        v = lam * (-a + b * em) / (1.0 - em)
        cent = ell * (ell + 1) * lam ** 2 / (1.0 - em) ** 2
    elif scheme is ApproxScheme.EXACT_CENTRIFUGAL:
        v = (-a + b * np.exp(-lam * rr)) / rr
        cent = ell * (ell + 1) / rr ** 2
    else:
        raise DomainError(f"scheme {scheme} is not an eigenproblem scheme")
    f[1:] = s * (v - energy) + cent
    return f


@njit(cache=True)
def _numerov_count(f, h, y1, fy0):
    """Count sign changes of the outward Numerov solution; renormalizes."""
    c = h * h / 12.0
    nodes = 0
    ym = 0.0
    y = y1
    n = f.shape[0]
    for k in range(1, n - 1):
        if k == 1:
            prev = ym - c * fy0      # (1 - c f0) y0 with f0*y0 -> its limit
        else:
            prev = (1.0 - c * f[k - 1]) * ym
        yp = (2.0 * (1.0 + 5.0 * c * f[k]) * y - prev) / (1.0 - c * f[k + 1])
        if (yp < 0.0) != (y < 0.0):
            nodes += 1
        ym = y
        y = yp
        ay = abs(y)
        if ay > 1e250:
            ym /= ay
            y /= ay
    return nodes


@njit(cache=True)
def _numerov_store(f, h, y1, fy0, out):
    """Outward integration storing the wave; rescales history on overflow."""
    c = h * h / 12.0
    ym = 0.0
    y = y1
    n = f.shape[0]
    out[0] = 0.0
    out[1] = y1
    for k in range(1, n - 1):
        if k == 1:
            prev = ym - c * fy0
        else:
            prev = (1.0 - c * f[k - 1]) * ym
        yp = (2.0 * (1.0 + 5.0 * c * f[k]) * y - prev) / (1.0 - c * f[k + 1])
        ym = y
        y = yp
        out[k + 1] = yp
        ay = abs(y)
        if ay > 1e250:
            ym /= ay
            y /= ay
            for j in range(k + 2):
                out[j] /= ay


def _start_value(params, energy, ell, scheme, h):
    p, q, fy0 = _origin_series(params, energy, ell, scheme)
    c1 = p / (2.0 * (ell + 1))
    c2 = (p * c1 + q) / (4.0 * ell + 6.0)
    y1 = h ** (ell + 1) * (1.0 + c1 * h + c2 * h * h)
    return y1, fy0


def count_nodes(params: PotentialParams, energy: float, ell: int,
                scheme: ApproxScheme, cfg: SolverConfig) -> int:
    """Interior nodes of the outward solution at a trial energy."""
    h = cfg.step
    n = int(round(cfg.r_max / h)) + 1
    r = np.arange(n) * h
    f = _f_values(params, energy, ell, scheme, r)
    y1, fy0 = _start_value(params, energy, ell, scheme, h)
    return int(_numerov_count(f, h, y1, fy0))


def integrate_radial(params: PotentialParams, energy: float, ell: int,
                     scheme: ApproxScheme, cfg: SolverConfig):
    """Return (r_grid, y, node_count) of the outward solution."""
    h = cfg.step
    n = int(round(cfg.r_max / h)) + 1
    r = np.arange(n) * h
    f = _f_values(params, energy, ell, scheme, r)
    y1, fy0 = _start_value(params, energy, ell, scheme, h)
    y = np.empty(n)
    _numerov_store(f, h, y1, fy0, y)
    nodes = int(np.count_nonzero(np.signbit(y[2:]) != np.signbit(y[1:-1])))
    return r, y, nodes


def _continuum_edge(params: PotentialParams, ell: int, scheme: ApproxScheme) -> float:
    # large-r limit of the effective potential; bound states live below it
    if scheme is ApproxScheme.PEKERIS_CENTRIFUGAL:
        return (-params.a * params.lam
                + params.hbar ** 2 / (2.0 * params.mass) * ell * (ell + 1) * params.lam ** 2)
    return 0.0


def numerov_eigen(params: PotentialParams, qn: QuantumNumbers,
                  scheme: ApproxScheme, cfg: SolverConfig | None = None) -> SpectrumEntry:
    """Eigenvalue with ``qn.n`` interior nodes, by node-count bisection.

    The bracket comes from ``cfg.energy_bracket`` when given, otherwise
    from a coarse geometric scan below the continuum edge.  Bisection
    runs on the predicate ``count(E) >= n+1``, whose boundary is the
    eigenvalue of the grid-truncated problem.
    """
    if cfg is None:
        cfg = tuned_config(params, qn, scheme)
    n_target = qn.n if cfg.node_target is None else cfg.node_target
    ell = qn.ell

    edge = _continuum_edge(params, ell, scheme)
    if cfg.energy_bracket is not None:
        lo, hi = cfg.energy_bracket
    else:
        s = 2.0 * params.mass / params.hbar ** 2
        lo = -0.75 * s * (abs(params.a) + abs(params.b)) ** 2 - 1.0
        hi = edge - 1e-12
    c_lo = count_nodes(params, lo, ell, scheme, cfg)
    c_hi = count_nodes(params, hi, ell, scheme, cfg)
    if c_lo > n_target:
        # scan downward for a looser floor before giving up
        for _ in range(8):
            lo = lo * 4.0 - 1.0
            c_lo = count_nodes(params, lo, ell, scheme, cfg)
            if c_lo <= n_target:
                break
        else:
            raise BracketError(f"no energy with <= {n_target} nodes above E = {lo}")
    if c_hi < n_target + 1:
        raise BracketError(
            f"state n={n_target}, ell={ell} not bound below the continuum edge "
            f"{edge:.6g} (only {c_hi} nodes at E = {hi:.6g})")

    while hi - lo > cfg.tolerance:
        mid = 0.5 * (lo + hi)
        if count_nodes(params, mid, ell, scheme, cfg) >= n_target + 1:
            hi = mid
        else:
            lo = mid
    e = 0.5 * (lo + hi)
    return SpectrumEntry(complex(e), Variant.RADIAL_HERMITIAN, qn, "oracle")


def phase_fit_config(params: PotentialParams, energy: float, ell: int) -> SolverConfig:
    """Grid long enough for ten clean asymptotic wavelengths."""
    from .scatter import asymptotic_wavenumber
    k = asymptotic_wavenumber(params, energy, ell)
    wavelength = 2.0 * math.pi / k
    r_max = max(30.0 / params.lam, 60.0) + 10.0 * wavelength
    step = min(0.005, wavelength / 200.0)
    return SolverConfig(r_max=r_max, step=step)


def numeric_phase(params: PotentialParams, energy: float, ell: int,
                  scheme: ApproxScheme = ApproxScheme.PEKERIS_CENTRIFUGAL,
                  cfg: SolverConfig | None = None) -> float:
    """Phase shift extracted from the integrated wave, mod pi.

    Integrates outward from the regular boundary, least-squares fits
    A sin(lam*kappa*r + phi) over the last ten asymptotic wavelengths and
    maps phi to the same convention as the closed form
    (delta_ell = phi + pi*ell/2, reported mod pi).  A relative waveform
    residual above 1e-2 raises :class:`FitResidualError`.
    """
    from .scatter import asymptotic_wavenumber, mod_pi
    if cfg is None:
        cfg = phase_fit_config(params, energy, ell)
    k = asymptotic_wavenumber(params, energy, ell)
    r, y, _ = integrate_radial(params, energy, ell, scheme, cfg)
    wavelength = 2.0 * math.pi / k
    mask = r > cfg.r_max - 10.0 * wavelength
    design = np.column_stack([np.sin(k * r[mask]), np.cos(k * r[mask])])
    coef, *_ = np.linalg.lstsq(design, y[mask], rcond=None)
    amp = math.hypot(coef[0], coef[1])
    resid = math.sqrt(float(np.mean((design @ coef - y[mask]) ** 2))) / amp
    if resid > 1e-2:
        raise FitResidualError(f"asymptotic fit residual {resid:.3g} > 1e-2")
    phi = math.atan2(coef[1], coef[0])
    return mod_pi(phi + math.pi * ell / 2.0)


def numeric_amplitude(params: PotentialParams, energy: float, ell: int,
                      cfg: SolverConfig | None = None) -> float:
    """Asymptotic amplitude of the wave normalized to t**(ell+1) at the origin.

    Start values use the exact hypergeometric series at the first two grid
    points so the overall scale matches the analytic normalization.
    """
    from .scatter import asymptotic_wavenumber, scatter_state
    from .specfun import HyperTriple, gauss_2f1
    if cfg is None:
        cfg = phase_fit_config(params, energy, ell)
    st = scatter_state(params, energy, ell)
    k = asymptotic_wavenumber(params, energy, ell)
    h = cfg.step
    n = int(round(cfg.r_max / h)) + 1
    r = np.arange(n) * h
    f = _f_values(params, energy, ell, ApproxScheme.PEKERIS_CENTRIFUGAL, r)
    triple = HyperTriple(st.xi1, st.xi2, st.xi3)

    def exact_wave(rr: float) -> float:
        t = -math.expm1(-params.lam * rr)
        val = (t ** st.mu) * ((1.0 - t) ** (-1j * st.kappa)) * gauss_2f1(triple, complex(t))
        return val.real

    y = np.empty(n)
    c = h * h / 12.0
    y[0] = 0.0
    y[1] = exact_wave(r[1])
    y[2] = exact_wave(r[2])
    for k_i in range(2, n - 1):
        y[k_i + 1] = ((2.0 * (1.0 + 5.0 * c * f[k_i]) * y[k_i]
                       - (1.0 - c * f[k_i - 1]) * y[k_i - 1])
                      / (1.0 - c * f[k_i + 1]))
    wavelength = 2.0 * math.pi / k
    mask = r > cfg.r_max - 10.0 * wavelength
    design = np.column_stack([np.sin(k * r[mask]), np.cos(k * r[mask])])
    coef, *_ = np.linalg.lstsq(design, y[mask], rcond=None)
    return math.hypot(coef[0], coef[1])


# --------------------------------------------------------------------------
# Reference energies (three published columns per parameter set) and the
# unit-convention calibration.

@dataclass(frozen=True)
class TableRow:
    a: float
    b: float
    lam: float
    n_table: int
    ell: int
    present: float
    ref11: float
    ref28: float


TABLE1: tuple[TableRow, ...] = (
    # a = 1, b = 0.5, lam = 0.001
    TableRow(1.0, 0.5, 0.001, 1, 0, -0.25150, -0.25100, -0.25100),
    TableRow(1.0, 0.5, 0.001, 2, 0, -0.06400, -0.06349, -0.06349),
    TableRow(1.0, 0.5, 0.001, 2, 1, -0.06375, -0.06350, -0.06350),
    TableRow(1.0, 0.5, 0.001, 3, 0, -0.02928, -0.02876, -0.02876),
    TableRow(1.0, 0.5, 0.001, 3, 1, -0.02917, -0.02877, -0.02877),
    TableRow(1.0, 0.5, 0.001, 3, 2, -0.02895, -0.02877, -0.02877),
    TableRow(1.0, 0.5, 0.001, 4, 0, -0.01713, -0.01660, -0.01660),
    TableRow(1.0, 0.5, 0.001, 4, 1, -0.01706, -0.01660, -0.01660),
    TableRow(1.0, 0.5, 0.001, 4, 2, -0.01694, -0.01660, -0.01660),
    TableRow(1.0, 0.5, 0.001, 4, 3, -0.01675, -0.01661, -0.01660),
    # a = 1, b = -0.5, lam = 0.001
    TableRow(1.0, -0.5, 0.001, 1, 0, -2.25050, -2.24900, -2.24900),
    TableRow(1.0, -0.5, 0.001, 2, 0, -0.56300, -0.56150, -0.56150),
    TableRow(1.0, -0.5, 0.001, 2, 1, -0.56225, -0.56150, -0.56150),
    TableRow(1.0, -0.5, 0.001, 3, 0, -0.25050, -0.24900, -0.24900),
    TableRow(1.0, -0.5, 0.001, 3, 1, -0.25017, -0.24900, -0.24900),
    TableRow(1.0, -0.5, 0.001, 3, 2, -0.24950, -0.24900, -0.24900),
    TableRow(1.0, -0.5, 0.001, 4, 0, -0.14113, -0.13963, -0.13963),
    TableRow(1.0, -0.5, 0.001, 4, 1, -0.14094, -0.13963, -0.13963),
    TableRow(1.0, -0.5, 0.001, 4, 2, -0.14056, -0.13963, -0.13963),
    TableRow(1.0, -0.5, 0.001, 4, 3, -0.14000, -0.13963, -0.13963),
    # a = 1, b = 0.5, lam = 0.01
    TableRow(1.0, 0.5, 0.01, 1, 0, -0.26502, -0.25985, -0.25985),
    TableRow(1.0, 0.5, 0.01, 2, 0, -0.07760, -0.07193, -0.07193),
    TableRow(1.0, 0.5, 0.01, 2, 1, -0.07502, -0.07197, -0.07202),
    TableRow(1.0, 0.5, 0.01, 3, 0, -0.04300, -0.03657, -0.03657),
    TableRow(1.0, 0.5, 0.01, 3, 1, -0.04180, -0.03661, -0.03664),
    TableRow(1.0, 0.5, 0.01, 3, 2, -0.03947, -0.03665, -0.03681),
    TableRow(1.0, 0.5, 0.01, 4, 0, -0.03102, -0.02367, -0.02364),
    TableRow(1.0, 0.5, 0.01, 4, 1, -0.03031, -0.02371, -0.02371),
    TableRow(1.0, 0.5, 0.01, 4, 2, -0.02891, -0.02374, -0.02386),
    TableRow(1.0, 0.5, 0.01, 4, 3, -0.02690, -0.02378, -0.02404),
    # a = 1, b = -0.5, lam = 0.01
    TableRow(1.0, -0.5, 0.01, 1, 0, -2.25503, -2.24000, -2.24005),
    TableRow(1.0, -0.5, 0.01, 2, 0, -0.56760, -0.55270, -0.55270),
    TableRow(1.0, -0.5, 0.01, 2, 1, -0.56002, -0.55268, -0.55266),
    TableRow(1.0, -0.5, 0.01, 3, 0, -0.25522, -0.24040, -0.24044),
    TableRow(1.0, -0.5, 0.01, 3, 1, -0.25180, -0.24042, -0.24040),
    TableRow(1.0, -0.5, 0.01, 3, 2, -0.24502, -0.24040, -0.24034),
    TableRow(1.0, -0.5, 0.01, 4, 0, -0.14602, -0.13138, -0.13138),
    TableRow(1.0, -0.5, 0.01, 4, 1, -0.14406, -0.13137, -0.13135),
    TableRow(1.0, -0.5, 0.01, 4, 2, -0.14016, -0.13135, -0.13129),
    TableRow(1.0, -0.5, 0.01, 4, 3, -0.13440, -0.13134, -0.13120),
)

# frozen winner of calibrate_table(); tests re-run the search and assert it
TABLE1_SCALE = 4.0            # 2m/hbar^2
TABLE1_MASS = 2.0
TABLE1_HBAR = 1.0
TABLE1_INDEX_MAP = "principal"   # table n = n_radial + ell + 1

_INDEX_MAPS = ("radial", "principal")
_SCALES = (1.0, 2.0, 4.0, 8.0)


def table1_params(a: float, b: float, lam: float) -> PotentialParams:
    """Potential instance under the frozen reference-table convention."""
    return PotentialParams(a=a, b=b, lam=lam, mass=TABLE1_MASS, hbar=TABLE1_HBAR)


def _map_qn(row: TableRow, index_map: str) -> Optional[QuantumNumbers]:
    if index_map == "radial":
        return QuantumNumbers(row.n_table, row.ell)
    n_rad = row.n_table - row.ell - 1
    if n_rad < 0:
        return None
    return QuantumNumbers(n_rad, row.ell)


@dataclass(frozen=True)
class CalibrationResult:
    scale: float                   # selected 2m/hbar^2
    index_map: str
    max_deviation: float           # over the lam = 0.001 block
    per_row: tuple[dict, ...] = field(repr=False)

    @property
    def mass(self) -> float:
        return self.scale / 2.0

    @property
    def hbar(self) -> float:
        return 1.0


def calibrate_table(table: tuple[TableRow, ...] = TABLE1) -> CalibrationResult:
    """Search scale x index-map and freeze the best unit convention.

    The figure of merit is the maximum |present - analytic| over the
    lam = 0.001 rows; the winning convention's per-row report covers the
    whole table and is returned regardless of how good the fit is.
    """
    best = None
    for scale in _SCALES:
        for index_map in _INDEX_MAPS:
            devs = []
            usable = True
            for row in table:
                if row.lam != 0.001:
                    continue
                qn = _map_qn(row, index_map)
                if qn is None:
                    usable = False
                    break
                p = PotentialParams(row.a, row.b, row.lam, mass=scale / 2.0, hbar=1.0)
                e = bound_energy(p, Variant.RADIAL_HERMITIAN, qn).energy.real
                devs.append(abs(e - row.present))
            if not usable or not devs:
                continue
            worst = max(devs)
            if best is None or worst < best[0]:
                best = (worst, scale, index_map)
    worst, scale, index_map = best
    rows = []
    for row in table:
        qn = _map_qn(row, index_map)
        p = PotentialParams(row.a, row.b, row.lam, mass=scale / 2.0, hbar=1.0)
        e = bound_energy(p, Variant.RADIAL_HERMITIAN, qn).energy.real
        rows.append({
            "a": row.a, "b": row.b, "lam": row.lam,
            "n_table": row.n_table, "ell": row.ell,
            "n_radial": qn.n,
            "table_value": row.present,
            "ref11": row.ref11, "ref28": row.ref28,
            "analytic_value": e,
            "deviation": abs(e - row.present),
        })
    return CalibrationResult(scale, index_map, worst, tuple(rows))


def validation_report(include_oracle: bool = True,
                      oracle_step: float = 0.002) -> dict:
    """Per-row comparison of table, closed form and both Numerov oracles.

    ``oracle_exact`` solves the true Hellmann problem, ``oracle_approx``
    the fully approximated one; their deviations from the closed form
    quantify, respectively, the quality of the solvable approximation and
    the consistency of the derivation.
    """
    cal = calibrate_table()
    rows = []
    for rec in cal.per_row:
        qn = QuantumNumbers(rec["n_radial"], rec["ell"])
        p = PotentialParams(rec["a"], rec["b"], rec["lam"],
                            mass=cal.mass, hbar=cal.hbar)
        out = {
            "params": {"a": rec["a"], "b": rec["b"], "lam": rec["lam"],
                       "m": cal.mass, "hbar": cal.hbar},
            "qn": {"n": qn.n, "ell": qn.ell, "n_table": rec["n_table"]},
            "table_value": rec["table_value"],
            "ref11": rec["ref11"],
            "ref28": rec["ref28"],
            "analytic_value": rec["analytic_value"],
            "oracle_exact": None,
            "oracle_approx": None,
            "deviations": {"table_vs_analytic": rec["deviation"]},
        }
        if include_oracle:
            cfg = tuned_config(p, qn, ApproxScheme.PEKERIS_CENTRIFUGAL)
            cfg = SolverConfig(r_max=cfg.r_max, step=max(cfg.step, oracle_step),
                               tolerance=cfg.tolerance)
            e_apx = numerov_eigen(p, qn, ApproxScheme.PEKERIS_CENTRIFUGAL, cfg).energy.real
            e_exc = numerov_eigen(p, qn, ApproxScheme.EXACT_CENTRIFUGAL, cfg).energy.real
            out["oracle_exact"] = e_exc
            out["oracle_approx"] = e_apx
            out["deviations"]["analytic_vs_oracle_approx"] = abs(rec["analytic_value"] - e_apx)
            out["deviations"]["analytic_vs_oracle_exact"] = abs(rec["analytic_value"] - e_exc)
            out["deviations"]["table_vs_oracle_exact"] = abs(rec["table_value"] - e_exc)
        rows.append(out)
    return {
        "convention": {"scale": cal.scale, "mass": cal.mass, "hbar": cal.hbar,
                       "index_map": cal.index_map},
        "max_deviation_lam_0.001": cal.max_deviation,
        "rows": rows,
    }


def report_csv(report: dict) -> str:
    """Flat CSV of a validation report, 12 significant digits."""
    cols = ["a", "b", "lam", "n_table", "n", "ell", "table_value",
            "analytic_value", "oracle_exact", "oracle_approx",
            "table_vs_analytic"]
    lines = [",".join(cols)]
    for row in report["rows"]:
        vals = [row["params"]["a"], row["params"]["b"], row["params"]["lam"],
                row["qn"]["n_table"], row["qn"]["n"], row["qn"]["ell"],
                row["table_value"], row["analytic_value"],
                row["oracle_exact"], row["oracle_approx"],
                row["deviations"]["table_vs_analytic"]]
        lines.append(",".join("" if v is None else f"{v:.12g}" for v in vals))
    return "\n".join(lines) + "\n"


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, default=float) + "\n"
