"""Potential values, approximation profiles and variant maps."""

import math

import pytest

from hellmann.errors import DomainError
from hellmann.model import (ApproxScheme, PotentialParams, Variant,
                            approx_profile, centrifugal_approx,
                            inverse_x_approx, potential_1d, potential_radial,
                            profile_csv, variant_map)


def test_pure_coulomb_value():
    p = PotentialParams(a=1.0, b=0.0, lam=0.37)
    assert potential_radial(p, 2.0) == -0.5


def test_unscreened_repulsive_value():
    p = PotentialParams(a=0.0, b=1.0, lam=0.0)
    assert potential_radial(p, 2.0) == 0.5


def test_potential_golden_point():
    # -1 + 0.5 exp(-0.001), exact arithmetic
    p = PotentialParams(a=1.0, b=0.5, lam=0.001)
    assert abs(potential_radial(p, 1.0) - (-0.5004997500833125)) < 1e-16


@pytest.mark.parametrize("r", [0.0, -1.0])
def test_potential_domain(r):
    with pytest.raises(DomainError):
        potential_radial(PotentialParams(1.0, 0.5, 0.1), r)


def test_params_validation():
    with pytest.raises(DomainError):
        PotentialParams(1.0, 0.5, -0.1)
    with pytest.raises(DomainError):
        PotentialParams(1.0, 0.5, 0.1, mass=0.0)
    with pytest.raises(DomainError):
        PotentialParams(float("inf"), 0.5, 0.1)


def test_centrifugal_exact_point():
    # lam = 1, r = ln 2: 1/(1 - 1/2)^2 = 4
    assert abs(centrifugal_approx(1.0, math.log(2.0)) - 4.0) < 1e-14


def test_centrifugal_small_lam_ratio():
    for lr in (1e-6, 1e-4, 1e-3):
        r = 2.0
        lam = lr / r
        ratio = centrifugal_approx(lam, r) * r * r
        assert abs(ratio - 1.0) < 2.0 * lr


def test_centrifugal_golden_point():
    got = centrifugal_approx(0.01, 10.0)
    assert abs(got - 0.011042504026157965) < 1e-15
    rel = (got - 0.01) / 0.01
    assert abs(rel - 0.10425040261579643) < 1e-12


def test_centrifugal_first_order_error_bound():
    # |approx - exact| / approx <= lam * r in the small-screening regime
    for lr in (0.001, 0.01, 0.05, 0.099):
        lam, r = lr / 3.0, 3.0
        approx = centrifugal_approx(lam, r)
        exact = 1.0 / r ** 2
        assert abs(approx - exact) / approx <= lr


def test_profile_rejects_bad_range():
    with pytest.raises(DomainError):
        approx_profile(0.1, 1.0, 1.0, 10, ApproxScheme.INVERSE_X_EXP)
    with pytest.raises(DomainError):
        approx_profile(0.1, 0.5, 2.0, 1, ApproxScheme.INVERSE_X_EXP)
    with pytest.raises(DomainError):
        approx_profile(0.1, 0.5, 2.0, 10, ApproxScheme.EXACT_CENTRIFUGAL)


def test_profile_small_lam_limit():
    rows = approx_profile(1e-8, 0.1, 50.0, 25, ApproxScheme.INVERSE_X_EXP)
    assert all(abs(t.rel_err) < 1e-6 for t in rows)


@pytest.mark.parametrize("scheme", [ApproxScheme.INVERSE_X_EXP,
                                    ApproxScheme.PEKERIS_CENTRIFUGAL])
def test_profile_error_grows_with_r(scheme):
    rows = approx_profile(0.1, 0.1, 50.0, 100, scheme)
    errs = [t.rel_err for t in rows]
    assert all(e > 0 for e in errs)
    assert all(b > a for a, b in zip(errs, errs[1:]))


def test_profile_csv_shape():
    rows = approx_profile(0.1, 0.5, 1.0, 3, ApproxScheme.INVERSE_X_EXP)
    text = profile_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == "r,exact,approx,rel_err"
    assert len(lines) == 4
    first = lines[1].split(",")
    assert first[0] == "0.5"
    assert abs(float(first[1]) - 2.0) < 1e-12
    # 12 significant digits survive the round trip
    ref = inverse_x_approx(0.1, 0.5)
    assert abs(float(first[2]) - ref) < 1e-11 * ref


def test_variant_map_identity():
    p = PotentialParams(1.0, 0.5, 0.1)
    cm = variant_map(p, Variant.RADIAL_HERMITIAN)
    assert (cm.a_eff, cm.b_eff, cm.lam_eff) == (1.0, 0.5, 0.1)


def test_variant_map_case1():
    cm = variant_map(PotentialParams(1.0, 0.5, 0.1), Variant.NON_PT_CASE1)
    assert (cm.a_eff, cm.b_eff, cm.lam_eff) == (1.0, 0.5, 0.1j)


def test_variant_map_case2():
    cm = variant_map(PotentialParams(1.0, 0.5, 0.1), Variant.NON_PT_CASE2)
    assert (cm.a_eff, cm.b_eff, cm.lam_eff) == (1.0j, 0.5j, 0.1)


def test_variant_map_nhpt():
    cm = variant_map(PotentialParams(1.0, 0.5, 0.1), Variant.NON_HERMITIAN_PT)
    assert (cm.a_eff, cm.b_eff, cm.lam_eff) == (1.0j, 0.5j, 0.1j)


def test_nhpt_is_pt_symmetric_pointwise():
    # V*(-x) = V(x) on a real grid
    cm = variant_map(PotentialParams(1.0, 0.5, 0.2), Variant.NON_HERMITIAN_PT)
    for x in (0.3, 1.0, 2.7, 5.5, -0.8, -3.1):
        lhs = potential_1d(cm, -x).conjugate()
        rhs = potential_1d(cm, x)
        assert abs(lhs - rhs) < 1e-12 * max(1.0, abs(rhs))


def test_case1_is_not_hermitian():
    cm = variant_map(PotentialParams(1.0, 0.5, 0.2), Variant.NON_PT_CASE1)
    for x in (0.3, 1.0, 2.7):
        assert abs(potential_1d(cm, x).conjugate() - potential_1d(cm, x)) > 1e-6


def test_case1_is_not_pt_symmetric():
    cm = variant_map(PotentialParams(1.0, 0.5, 0.2), Variant.NON_PT_CASE1)
    for x in (0.3, 1.0, 2.7):
        assert abs(potential_1d(cm, -x).conjugate() - potential_1d(cm, x)) > 1e-6


def test_variant_names_round_trip():
    for v in Variant:
        assert Variant.from_name(v.value) is v
    with pytest.raises(DomainError):
        Variant.from_name("bogus")
