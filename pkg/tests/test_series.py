"""Series evaluator tests: unilateral, bilateral, and terminating elliptic."""

import random

import pytest

from qident.errors import DomainError, NotTerminating
from qident.policy import DEFAULT_POLICY, QPower, TruncationPolicy
from qident.qcore import csqrt, poch_inf, poch_int, poch_multi_inf, theta
from qident.series import SeriesSpec, SeriesValue, eval_omega, eval_phi, eval_psi

from conftest import rel


# ---------------------------------------------------------------------------
# eval_phi
# ---------------------------------------------------------------------------

def test_phi_zero_argument():
    spec = SeriesSpec(numerator=[0.5, 0.3], denominator=[0.7], argument=0.0,
                      q=0.4, kind="unilateral")
    sv = eval_phi(spec)
    assert sv.value == 1


def test_phi_q_binomial_theorem():
    # 1phi0(a; -; q, x) = (a x)_inf / (x)_inf
    a, x, q = 0.5, 0.3, 0.4
    spec = SeriesSpec(numerator=[a], denominator=[], argument=x, q=q,
                      kind="unilateral")
    sv = eval_phi(spec)
    assert rel(sv.value, poch_inf(a * x, q) / poch_inf(x, q)) < 1e-12
    assert not sv.terminated


def test_phi_structural_termination_three_terms():
    q = 0.35
    a, b = QPower(-2), 0.6 + 0.2j
    spec = SeriesSpec(numerator=[a, 0.4], denominator=[b], argument=0.7, q=q,
                      kind="unilateral")
    sv = eval_phi(spec)
    assert sv.terminated and sv.terms_used == 3
    # brute-force 3-term oracle with the (r=2, s=1) sign convention (exponent 0)
    total = 0.0 + 0j
    for k in range(3):
        total += poch_int(q**-2, q, k) * poch_int(0.4, q, k) * 0.7**k \
            / (poch_int(q, q, k) * poch_int(0.6 + 0.2j, q, k))
    assert rel(sv.value, total) < 1e-12


def test_phi_balanced_sign_factor_free_brute_force():
    # r = s + 1: the displayed sign/power factor is identically 1.
    rng = random.Random(13)
    for _ in range(10):
        q = rng.uniform(0.1, 0.5)
        nums = [complex(rng.uniform(-0.8, 0.8), rng.uniform(-0.4, 0.4))
                for _ in range(3)]
        dens = [complex(rng.uniform(0.3, 0.9), rng.uniform(-0.3, 0.3))
                for _ in range(2)]
        x = rng.uniform(0.1, 0.6)
        spec = SeriesSpec(numerator=nums, denominator=dens, argument=x, q=q,
                          kind="unilateral")
        sv = eval_phi(spec)
        brute = 0.0 + 0j
        for k in range(80):
            term = x**k / poch_int(q, q, k)
            for v in nums:
                term *= poch_int(v, q, k)
            for v in dens:
                term /= poch_int(v, q, k)
            brute += term
        assert rel(sv.value, brute) < 1e-12


def test_phi_nonterminating_divergent_argument_rejected():
    spec = SeriesSpec(numerator=[0.5], denominator=[], argument=1.2, q=0.4,
                      kind="unilateral")
    with pytest.raises(DomainError):
        eval_phi(spec)


def test_phi_rejects_bilateral_spec():
    spec = SeriesSpec(numerator=[0.5], denominator=[0.2], argument=0.3, q=0.4,
                      kind="bilateral")
    with pytest.raises(DomainError):
        eval_phi(spec)


# ---------------------------------------------------------------------------
# eval_psi
# ---------------------------------------------------------------------------

def test_psi_lower_termination_reduces_to_phi():
    # 1psi1 with b = q: all n < 0 terms vanish, equal to 1phi0(a; q, x).
    a, x, q = 0.6, 0.3, 0.4
    bil = SeriesSpec(numerator=[a], denominator=[QPower(1)], argument=x, q=q,
                     kind="bilateral")
    uni = SeriesSpec(numerator=[a], denominator=[], argument=x, q=q,
                     kind="unilateral")
    sv_b, sv_u = eval_psi(bil), eval_phi(uni)
    assert rel(sv_b.value, sv_u.value) < 1e-12
    assert sv_b.window is not None and sv_b.window[0] == 0


def test_psi_ramanujan_closed_form():
    a, b, x, q = 0.9, 0.2, 0.5, 0.3
    spec = SeriesSpec(numerator=[a], denominator=[b], argument=x, q=q,
                      kind="bilateral")
    sv = eval_psi(spec)
    closed = poch_multi_inf([q, b / a, a * x, q / (a * x)], q) \
        / poch_multi_inf([b, q / a, x, b / (a * x)], q)
    assert rel(sv.value, closed) < 1e-10


def test_psi_structural_two_sided_window():
    # numerator tag q^{-2} cuts above at 2; denominator tag q^{3} cuts below
    # at 1 - 3 = -2: support exactly [-2, 2].
    q = 0.35
    spec = SeriesSpec(numerator=[QPower(-2), 0.4], denominator=[QPower(3), 0.7],
                      argument=0.5, q=q, kind="bilateral")
    sv = eval_psi(spec)
    assert sv.terminated is True
    assert sv.window == (-2, 2)
    assert sv.terms_used == 5


def test_psi_explicit_window_matches_structural():
    q = 0.35
    spec = SeriesSpec(numerator=[QPower(-2), 0.4], denominator=[QPower(3), 0.7],
                      argument=0.5, q=q, kind="bilateral")
    auto = eval_psi(spec)
    boxed = eval_psi(spec, window=(-10, 10))
    assert rel(auto.value, boxed.value) < 1e-14


def test_psi_window_stability():
    # doubling the converged window changes the value by < 10 * series_tol
    a, b, x, q = 0.9, 0.2, 0.5, 0.3
    spec = SeriesSpec(numerator=[a], denominator=[b], argument=x, q=q,
                      kind="bilateral")
    sv = eval_psi(spec)
    lo, hi = sv.window
    doubled = eval_psi(spec, window=(2 * lo, 2 * hi))
    assert rel(sv.value, doubled.value) < 10 * DEFAULT_POLICY.series_tol


def test_psi_6psi6_within_term_budget():
    # very-well-poised 6psi6 draws with |q a^2/(bcde)| <= 0.5 converge within
    # max_terms = 400
    rng = random.Random(29)
    policy = TruncationPolicy(max_terms=400)
    for _ in range(10):
        q = rng.uniform(0.1, 0.5)
        a = rng.uniform(0.5, 0.9)
        b, c, d, e = (rng.uniform(0.55, 0.9) for _ in range(4))
        x = q * a * a / (b * c * d * e)
        if abs(x) > 0.5:
            continue
        sa = csqrt(a)
        spec = SeriesSpec(
            numerator=[q * sa, -q * sa, b, c, d, e],
            denominator=[sa, -sa, a * q / b, a * q / c, a * q / d, a * q / e],
            argument=x, q=q, kind="bilateral")
        sv = eval_psi(spec, policy)
        assert sv.terms_used <= 400


# ---------------------------------------------------------------------------
# eval_omega
# ---------------------------------------------------------------------------

def _omega_rest_for_jackson(a, b, c, d, n, q):
    """Numerator parameters a4..a8 of the terminating very-well-poised sum
    with the balancing constraint solved for e."""
    e = q ** (1 + n) * a * a / (b * c * d)
    return [b, c, d, e, QPower(-n)], e


def test_omega_n0_single_term():
    q = 0.3
    rest, _ = _omega_rest_for_jackson(0.5, 0.3, 0.7, 0.2, 0, q)
    sv = eval_omega(0.5, rest, q, 0.0)
    assert sv.terminated and sv.terms_used == 1
    assert abs(sv.value - 1) < 1e-14


def test_omega_n1_two_term_oracle():
    a, b, c, d, n, q, p = 0.5, 0.3, 0.7, 0.2, 1, 0.3, 0.0
    rest, e = _omega_rest_for_jackson(a, b, c, d, n, q)
    sv = eval_omega(a, rest, q, p)
    # explicit k = 1 term of the very-well-poised sum at p = 0
    k1 = (theta(a * q**2, p) / theta(a, p)) * (1 - a) * q
    for v in (b, c, d, e, q**-n):
        k1 *= (1 - v)
    for v in (q, a * q / b, a * q / c, a * q / d, a * q / e, a * q ** (1 + n)):
        k1 /= (1 - v)
    assert sv.terms_used == 2
    assert rel(sv.value, 1 + k1) < 1e-12


def test_omega_matches_8phi7_at_p0():
    a, b, c, d, n, q = 0.5 + 0.1j, 0.3 - 0.2j, 0.7, 0.2 + 0.05j, 3, 0.35
    rest, e = _omega_rest_for_jackson(a, b, c, d, n, q)
    sv_o = eval_omega(a, rest, q, 0.0)
    sa = csqrt(a)
    spec = SeriesSpec(
        numerator=[a, q * sa, -q * sa, b, c, d, e, QPower(-n)],
        denominator=[sa, -sa, a * q / b, a * q / c, a * q / d, a * q / e,
                     a * q ** (n + 1)],
        argument=q, q=q, kind="unilateral")
    sv_p = eval_phi(spec)
    assert rel(sv_o.value, sv_p.value) < 1e-12


def test_omega_requires_termination():
    # balanced parameters (so the balance gate passes) but no exact
    # negative-q-power tag
    a1, q = 0.5, 0.3
    b, c, d, e = 0.3, 0.7, 0.2, 0.4
    balance = a1 ** 4 * q ** 2
    f = csqrt(balance) / (b * c * d * e)
    with pytest.raises(NotTerminating):
        eval_omega(a1, [b, c, d, e, f], q, 0.0)


def test_omega_balancing_enforced():
    q = 0.3
    with pytest.raises(DomainError):
        eval_omega(0.5, [0.3, 0.7, 0.2, 0.9, QPower(-2)], q, 0.0)
