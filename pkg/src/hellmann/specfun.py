"""Self-contained complex special-function kernel.

Provides the four primitives everything else is built on: principal-branch
complex log-gamma, Pochhammer symbols, the Gauss hypergeometric function
2F1 (terminating, series and z->1 connection paths), and a terminating
3F2 at unit argument.  All functions are pure and safe to call
concurrently; none of them keeps state.

Scalars are plain Python ``complex``.  Results are checked for finiteness
before being returned; a non-finite intermediate raises instead of
escaping silently.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, PoleError

# Lanczos approximation, g = 607/128 with 15 coefficients (Godfrey's set).
# Relative accuracy is ~1e-15 over the half plane Re z >= 1/2; arguments
# left of that are shifted right with the exact recurrence before use.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)

# Series controls for gauss_2f1: stop once the term magnitude has stayed
# below EPS * |partial sum| for three consecutive terms; give up at the cap.
_SERIES_EPS = 1e-16
_SERIES_RUN = 3
_SERIES_CAP = 100_000


@dataclass(frozen=True)
class HyperTriple:
    """Parameter triple (a', b', c') of a Gauss hypergeometric function."""

    a_param: complex
    b_param: complex
    c_param: complex


def _as_nonpositive_int(z: complex) -> int | None:
    """Return n >= 0 such that z == -n exactly, else None."""
    z = complex(z)
    if z.imag != 0.0:
        return None
    r = z.real
    if r > 0.0 or r != math.floor(r):
        return None
    return int(-r)


def log_gamma(z: complex) -> complex:
    """Principal branch of log Gamma(z).

    ``exp(log_gamma(x))`` reproduces Gamma on the positive real axis, and
    the principal branch satisfies log_gamma(z+1) = log_gamma(z) + Log(z)
    exactly, which is how arguments with Re z < 1/2 are handled (shift
    right, then subtract the principal logs).  Poles at the non-positive
    integers raise :class:`PoleError`.
    """
    z = complex(z)
    if _as_nonpositive_int(z) is not None:
        raise PoleError(f"log_gamma pole at z = {z}")
    shift = 0
    zs = z
    while zs.real < 0.5:
        zs += 1.0
        shift += 1
    acc = complex(_LANCZOS_C[0])
    for i in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[i] / (zs - 1.0 + i)
    t = zs - 0.5 + _LANCZOS_G
    out = _HALF_LOG_TWO_PI + (zs - 0.5) * cmath.log(t) - t + cmath.log(acc)
    for j in range(shift):
        out -= cmath.log(z + j)
    if not (math.isfinite(out.real) and math.isfinite(out.imag)):
        raise PoleError(f"log_gamma overflow/NaN at z = {z}")
    return out


def gamma(z: complex) -> complex:
    """Gamma(z) as exp(log_gamma(z))."""
    return cmath.exp(log_gamma(z))


def pochhammer(x: complex, k: int) -> complex:
    """Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer order k must be >= 0")
    out = complex(1.0)
    x = complex(x)
    for j in range(k):
        out *= x + j
    return out


def _terminating_2f1(n: int, b: complex, c: complex, z: complex) -> complex:
    """Finite sum for 2F1(-n, b; c; z); exact up to roundoff for any z.

    For real z close to 1 the direct alternating sum can cancel away most
    of its digits, so the polynomial is re-expanded around z = 1 through
    the exact connection

        2F1(-n, b; c; z) = ((c-b)_n / (c)_n) * 2F1(-n, b; b-c-n+1; 1-z),

    whose coefficients are pure products (no subtractions).
    """
    mc = _as_nonpositive_int(c)
    if mc is not None and mc < n:
        # (c)_k vanishes at k = mc + 1 <= n before the series terminates
        raise PoleError(f"2F1 lower parameter c = {c} truncates before degree {n}")
    if z.imag == 0.0 and 0.75 <= z.real <= 1.0 and n > 0:
        c2 = b - c - n + 1.0
        m2 = _as_nonpositive_int(c2)
        if m2 is None or m2 >= n:
            k_fac = pochhammer(c - b, n) / pochhammer(c, n)
            return k_fac * _terminating_direct(n, b, c2, 1.0 - z)
    return _terminating_direct(n, b, c, z)


def _terminating_direct(n: int, b: complex, c: complex, z: complex) -> complex:
    total = complex(1.0)
    term = complex(1.0)
    for k in range(n):
        term *= (-n + k) * (b + k) * z / ((c + k) * (k + 1))
        total += term
    return total


def gauss_2f1(params: HyperTriple, z: complex) -> complex:
    """Gauss hypergeometric function 2F1(a', b'; c'; z).

    Evaluation strategy, in order:

    * ``z == 0`` returns 1 exactly.
    * a' or b' a non-positive integer: exact finite sum (any z).
    * real z in [0.5, 1) with non-integer c'-a'-b': two-series connection
      in powers of 1-z (fast near the z=1 singularity).
    * |z| < 1: direct power series with a relative cutoff of 1e-16 held
      for three consecutive terms, capped at 1e5 terms.

    Anything else raises :class:`ConvergenceError`, and a c' pole that is
    actually reached raises :class:`PoleError`.
    """
    a, b, c = complex(params.a_param), complex(params.b_param), complex(params.c_param)
    z = complex(z)
    if z == 0:
        return complex(1.0)

    na = _as_nonpositive_int(a)
    nb = _as_nonpositive_int(b)
    if na is not None or nb is not None:
        if na is not None and (nb is None or na <= nb):
            return _terminating_2f1(na, b, c, z)
        return _terminating_2f1(nb, a, c, z)

    if _as_nonpositive_int(c) is not None:
        raise PoleError(f"2F1 pole from lower parameter c = {c}")

    if z.imag == 0.0 and 0.5 <= z.real < 1.0:
        s = c - a - b
        if z.real != 0.0 and _as_nonpositive_int(s) is None and _as_nonpositive_int(-s) is None:
            return _connection_2f1(a, b, c, z.real)

    if abs(z) < 1.0:
        return _series_2f1(a, b, c, z)

    raise ConvergenceError(f"2F1 series does not converge at z = {z} for non-terminating parameters")


def _series_2f1(a: complex, b: complex, c: complex, z: complex) -> complex:
    total = complex(1.0)
    term = complex(1.0)
    below = 0
    for k in range(_SERIES_CAP):
        term *= (a + k) * (b + k) * z / ((c + k) * (k + 1))
        total += term
        if abs(term) < _SERIES_EPS * abs(total):
            below += 1
            if below >= _SERIES_RUN:
                if not (math.isfinite(total.real) and math.isfinite(total.imag)):
                    raise ConvergenceError("2F1 series produced a non-finite sum")
                return total
        else:
            below = 0
    raise ConvergenceError(f"2F1 series exceeded {_SERIES_CAP} terms at z = {z}")


def _connection_2f1(a: complex, b: complex, c: complex, z: float) -> complex:
    # 2F1(a,b;c;z) expressed through two series in (1-z); valid when
    # c-a-b is not an integer.
    s = c - a - b
    w = 1.0 - z
    g1 = cmath.exp(log_gamma(c) + log_gamma(s) - log_gamma(c - a) - log_gamma(c - b))
    g2 = cmath.exp(log_gamma(c) + log_gamma(-s) - log_gamma(a) - log_gamma(b))
    f1 = _series_2f1(a, b, 1.0 - s, complex(w))
    f2 = _series_2f1(c - a, c - b, 1.0 + s, complex(w))
    return g1 * f1 + g2 * (w ** complex(s)) * f2


def f3f2_unit(nu: complex, alpha: complex, beta: complex,
              mu_plus_nu: complex, gamma_low: complex) -> complex:
    """Terminating 3F2(nu, alpha, beta; mu_plus_nu; gamma_low; 1).

    One of the upper parameters ``alpha``/``beta`` must be a non-positive
    integer so the sum is finite; the terms are Pochhammer ratios and the
    sum is exact up to roundoff.
    """
    n_a = _as_nonpositive_int(alpha)
    n_b = _as_nonpositive_int(beta)
    if n_a is None and n_b is None:
        raise DomainError("3F2 needs a terminating upper parameter (alpha or beta a non-positive integer)")
    if n_a is None or (n_b is not None and n_b < n_a):
        alpha, beta = beta, alpha
        n_a = n_b
    total = complex(1.0)
    term = complex(1.0)
    for k in range(n_a):
        term *= (nu + k) * (alpha + k) * (beta + k) / ((mu_plus_nu + k) * (gamma_low + k) * (k + 1))
        total += term
    if not (math.isfinite(total.real) and math.isfinite(total.imag)):
        raise ConvergenceError("3F2 sum produced a non-finite value")
    return total
