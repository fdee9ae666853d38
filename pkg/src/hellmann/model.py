"""Potential definitions, unit conventions, variants and approximations.

The Hellmann potential is the screened-Coulomb superposition

    V(r) = (1/r) * (-a + b * exp(-lam * r)),

with Coulomb strength ``a``, screened strength ``b`` and screening rate
``lam``.  Mass and hbar are explicit fields of :class:`PotentialParams`
so no unit system is ever hard-coded.

Two approximations make the problem exactly solvable:

* ``1/r**2 ~ lam**2 / (1 - exp(-lam*r))**2`` for the centrifugal term of
  the radial problem (Pekeris-type), and
* ``1/x ~ lam / (1 - exp(-lam*x))`` for the one-dimensional variants.

The non-Hermitian variants are generated by complexifying (a, b, lam);
:func:`variant_map` returns the effective coefficient triple.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .errors import DomainError


class Variant(enum.Enum):
    """Which member of the potential family is being solved."""

    RADIAL_HERMITIAN = "radial"
    COULOMB_LIMIT = "coulomb"
    PT_SYMMETRIC_1D = "pt1d"
    NON_HERMITIAN_PT = "nhpt"
    NON_PT_CASE1 = "nonpt1"
    NON_PT_CASE2 = "nonpt2"

    @classmethod
    def from_name(cls, name: str) -> "Variant":
        for v in cls:
            if v.value == name:
                return v
        raise DomainError(f"unknown variant {name!r}; choose from "
                          f"{[v.value for v in cls]}")

    @property
    def is_one_dimensional(self) -> bool:
        return self in (Variant.PT_SYMMETRIC_1D, Variant.NON_HERMITIAN_PT,
                        Variant.NON_PT_CASE1, Variant.NON_PT_CASE2)


class ApproxScheme(enum.Enum):
    """Centrifugal / inverse-coordinate approximation selector."""

    EXACT_CENTRIFUGAL = "exact"
    PEKERIS_CENTRIFUGAL = "pekeris"
    INVERSE_X_EXP = "inverse-x"

    @classmethod
    def from_name(cls, name: str) -> "ApproxScheme":
        for s in cls:
            if s.value == name:
                return s
        raise DomainError(f"unknown scheme {name!r}; choose from "
                          f"{[s.value for s in cls]}")


@dataclass(frozen=True)
class PotentialParams:
    """One potential instance with its unit convention.

    a, b carry energy*length, lam carries 1/length.  The base record is
    always real; variants complexify internally via :func:`variant_map`.
    """

    a: float
    b: float
    lam: float
    mass: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("a", "b", "lam", "mass", "hbar"):
            val = getattr(self, name)
            if not math.isfinite(val):
                raise DomainError(f"{name} must be finite, got {val}")
        if self.mass <= 0:
            raise DomainError(f"mass must be > 0, got {self.mass}")
        if self.hbar <= 0:
            raise DomainError(f"hbar must be > 0, got {self.hbar}")
        if self.lam < 0:
            raise DomainError(f"lam must be >= 0, got {self.lam}")


@dataclass(frozen=True)
class CoefficientMap:
    """Complexified (a, b, lam) after a variant substitution."""

    a_eff: complex
    b_eff: complex
    lam_eff: complex


def potential_radial(params: PotentialParams, r: float) -> float:
    """V(r) = (1/r)(-a + b e^{-lam r}) for r > 0."""
    if r <= 0:
        raise DomainError(f"r must be > 0, got {r}")
    return (-params.a + params.b * math.exp(-params.lam * r)) / r


def potential_1d(coeffs: CoefficientMap, x: float) -> complex:
    """One-dimensional family member -a/x + (b/x) e^{-lam x}, complexified.

    Takes the effective coefficients from :func:`variant_map` so the same
    expression covers the Hermitian, PT-symmetric and non-PT cases.
    """
    if x == 0:
        raise DomainError("x must be nonzero")
    a, b, lam = coeffs.a_eff, coeffs.b_eff, coeffs.lam_eff
    return -a / x + (b / x) * cmath.exp(-lam * x)


def centrifugal_approx(lam: float, r: float) -> float:
    """lam^2 / (1 - e^{-lam r})^2, the solvable stand-in for 1/r^2."""
    if r <= 0:
        raise DomainError(f"r must be > 0, got {r}")
    if lam <= 0:
        raise DomainError(f"lam must be > 0, got {lam}")
    return lam ** 2 / (1.0 - math.exp(-lam * r)) ** 2


def inverse_x_approx(lam: float, x: float) -> float:
    """lam / (1 - e^{-lam x}), the solvable stand-in for 1/x."""
    if x <= 0:
        raise DomainError(f"x must be > 0, got {x}")
    if lam <= 0:
        raise DomainError(f"lam must be > 0, got {lam}")
    return lam / (1.0 - math.exp(-lam * x))


@dataclass(frozen=True)
class ProfileRow:
    r: float
    exact: float
    approx: float
    rel_err: float


def approx_profile(lam: float, r_min: float, r_max: float, points: int,
                   scheme: ApproxScheme) -> list[ProfileRow]:
    """Tabulate exact vs approximate inverse-coordinate functions.

    For ``INVERSE_X_EXP`` the pair is (1/x, lam/(1-e^{-lam x})); for
    ``PEKERIS_CENTRIFUGAL`` it is (1/r^2, lam^2/(1-e^{-lam r})^2).
    The relative error is (approx - exact)/exact, suitable for plotting.
    """
    if not (0 < r_min < r_max):
        raise DomainError(f"need 0 < r_min < r_max, got ({r_min}, {r_max})")
    if points < 2:
        raise DomainError(f"need at least 2 points, got {points}")
    if scheme is ApproxScheme.EXACT_CENTRIFUGAL:
        raise DomainError("profile compares an approximation against the exact "
                          "function; pick pekeris or inverse-x")
    rows = []
    step = (r_max - r_min) / (points - 1)
    for i in range(points):
        r = r_min + i * step
        if scheme is ApproxScheme.INVERSE_X_EXP:
            exact = 1.0 / r
            approx = inverse_x_approx(lam, r)
        else:
            exact = 1.0 / r ** 2
            approx = centrifugal_approx(lam, r)
        rows.append(ProfileRow(r, exact, approx, (approx - exact) / exact))
    return rows


def profile_csv(rows: list[ProfileRow]) -> str:
    """CSV text for a profile: header ``r,exact,approx,rel_err``, 12 significant digits."""
    lines = ["r,exact,approx,rel_err"]
    for row in rows:
        lines.append(",".join(f"{v:.12g}" for v in (row.r, row.exact, row.approx, row.rel_err)))
    return "\n".join(lines) + "\n"


def variant_map(params: PotentialParams, variant: Variant) -> CoefficientMap:
    """Effective (a, b, lam) after the variant's complexification.

    * NON_HERMITIAN_PT: a -> ia, b -> ib, lam -> i lam
    * NON_PT_CASE1:     lam -> i lam only
    * NON_PT_CASE2:     a -> ia, b -> ib only
    * identity for the Hermitian variants.
    """
    a, b, lam = complex(params.a), complex(params.b), complex(params.lam)
    if variant is Variant.NON_HERMITIAN_PT:
        return CoefficientMap(1j * a, 1j * b, 1j * lam)
    if variant is Variant.NON_PT_CASE1:
        return CoefficientMap(a, b, 1j * lam)
    if variant is Variant.NON_PT_CASE2:
        return CoefficientMap(1j * a, 1j * b, lam)
    return CoefficientMap(a, b, lam)
