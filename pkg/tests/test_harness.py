import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orliczlab.core import exp_minus, power, power_log, structural_constants
from orliczlab.errors import DomainError, GenerationError
from orliczlab.grid import Domain1D, GridFunction, luxemburg_norm, modular
from orliczlab.harness import (
    BLReport,
    HarnessTolerances,
    Profile,
    SequenceFamily,
    SequenceSpec,
    Verdict,
    concentration_spec,
    dominated_bound_audit,
    generate,
    plateau_spec,
    pointwise_taylor_bound_audit,
    run,
    sample,
    translation_spec,
    violator_spec,
    w_epsilon_integral,
)

G2 = power(2)
EPS = (0.5, 0.1, 0.01)


@pytest.fixture(scope="module")
def short_concentration():
    spec = concentration_spec(schedule=(16, 64, 256), cells=256)
    return spec, run(spec, G2, EPS)


# -- generation -------------------------------------------------------------------


def test_translation_samples_have_disjoint_supports():
    spec = translation_spec(schedule=(1, 3))
    for n in (1, 3):
        s = sample(spec, n)
        assert s.un.domain.cells == 512 * (n + 1)
        bump = s.un.values - s.u.values
        assert not np.any((bump != 0) & (s.u.values != 0))
        m_un, m_u, m_b = (modular(G2, f).value for f in (s.un, s.u, s.un - s.u))
        assert m_un == pytest.approx(m_u + m_b, rel=1e-14)


@pytest.mark.parametrize("n", [2, 8, 64])
def test_plateau_modular_diff_is_one_over_n(n):
    s = sample(plateau_spec(), n)
    assert modular(G2, s.diff).value == pytest.approx(1.0 / n, rel=1e-12)


def test_violator_norms_strictly_increase():
    spec = violator_spec()
    norms = [luxemburg_norm(G2, generate(spec, n)) for n in spec.n_schedule]
    assert all(b > a for a, b in zip(norms, norms[1:]))


@pytest.mark.parametrize("G", [power(2), power(3), power_log(2)], ids=str)
def test_concentration_bump_has_unit_modular(G):
    spec = concentration_spec(schedule=(16, 512))
    for n in spec.n_schedule:
        s = sample(spec, n, G)
        assert modular(G, s.diff).value == pytest.approx(1.0, abs=1e-8)
        assert s.scale > 0


def test_concentration_refines_grid():
    spec = concentration_spec()
    assert spec.grid_for(16).cells == 1024
    assert spec.grid_for(4096).h <= 1.0 / (4096 * 64) * (1 + 1e-12)


def test_exceptional_set_around_point():
    spec = concentration_spec()
    d = spec.grid_for(256)
    cells = spec.exceptional_set(256)
    xs = d.midpoints()[list(cells)]
    assert len(cells) > 0 and np.all(np.abs(xs - spec.point) <= 1.0 / 1024 + d.h)
    assert translation_spec().exceptional_set(3) == ()


def test_generation_errors():
    with pytest.raises(GenerationError):
        generate(concentration_spec(), 16)  # unit modular needs G
    with pytest.raises(GenerationError):
        generate(translation_spec(), 0)
    with pytest.raises(GenerationError):
        generate(translation_spec(), 2.5)


def test_spec_validation_and_round_trip():
    spec = concentration_spec()
    assert SequenceSpec.from_dict(spec.to_dict()) == spec
    with pytest.raises(DomainError):
        SequenceSpec("spiral", Domain1D(0, 1, 8), Profile("zero"), Profile("zero"), (1,))
    with pytest.raises(DomainError):
        Profile("triangle")


# -- pointwise audits --------------------------------------------------------------


def test_taylor_bound_example():
    d = Domain1D(0.0, 1.0, 4)
    un = GridFunction(d, np.full(4, 3.0))
    u = GridFunction(d, np.full(4, 1.0))
    a = pointwise_taylor_bound_audit(G2, un, u)
    # |9 - 4| <= g(1 + 4) * 1 = 10
    assert a.lhs == 5.0 and a.rhs == 10.0 and a.passed


def test_taylor_bound_zero_limit_is_tight():
    d = Domain1D(0.0, 1.0, 8)
    un = GridFunction(d, np.linspace(-2, 2, 8))
    a = pointwise_taylor_bound_audit(power_log(2), un, GridFunction.zeros(d))
    assert a.passed and a.margin == 0.0


def test_dominated_bound_example():
    d = Domain1D(0.0, 1.0, 2)
    un = GridFunction(d, np.array([2.0, 0.0]))
    u = GridFunction(d, np.array([1.0, 1.0]))
    # K = 4, C = 1, eps = 0.5: cell 0 lhs |4 - 1| = 3, rhs 8 * (0.5 * 1 + 2 * 4) = 68
    a = dominated_bound_audit(G2, un, u, 0.5, 4.0, 1.0)
    assert a.passed and a.extras["domination"].passed
    assert a.lhs == 3.0 and a.rhs == 68.0


def test_w_epsilon_vanishes_when_u_is_zero():
    d = Domain1D(0.0, 1.0, 16)
    un = GridFunction(d, np.linspace(0, 3, 16))
    assert w_epsilon_integral(G2, un, GridFunction.zeros(d), 0.1, 4.0, 1.0) == 0.0
    with pytest.raises(DomainError):
        w_epsilon_integral(G2, un, un, 1.0, 4.0, 1.0)


@pytest.mark.parametrize("G", [power(1.5), power(2), power(3), power_log(2)], ids=str)
@settings(max_examples=30, deadline=None)
@given(
    un_vals=st.lists(st.floats(-50, 50), min_size=8, max_size=8),
    u_vals=st.lists(st.floats(-50, 50), min_size=8, max_size=8),
    eps=st.sampled_from(EPS),
)
def test_pointwise_audits_hold(G, un_vals, u_vals, eps):
    c = structural_constants(G)
    d = Domain1D(0.0, 1.0, 8)
    un, u = GridFunction(d, np.array(un_vals)), GridFunction(d, np.array(u_vals))
    assert pointwise_taylor_bound_audit(G, un, u).passed
    audit = dominated_bound_audit(G, un, u, eps, c.K_est, c.C)
    assert audit.passed, audit.to_dict()


# -- run / reports ----------------------------------------------------------------------


def test_translation_defect_is_exactly_zero():
    rep = run(translation_spec(), power(3), EPS)
    assert all(r.defect <= 1e-12 for r in rep.rows)
    assert rep.verdict == Verdict.CONVERGENCE_OBSERVED.value


def test_concentration_report(short_concentration):
    spec, rep = short_concentration
    assert [r.n for r in rep.rows] == list(spec.n_schedule)
    assert rep.certificates["norm_bounded"] and rep.certificates["delta2"]
    assert rep.certificates["unit_modular_deviation"] <= 1e-8
    assert all(r.audits_passed for r in rep.rows)
    assert rep.rows[-1].defect < rep.rows[0].defect


def test_row_decomposition_identity(short_concentration):
    _, rep = short_concentration
    K, C = rep.constants["K_est"], rep.constants["C"]
    for r in rep.rows:
        for e in EPS:
            assert r.abs_defect_integral <= r.w_integrals[e] + e * 0.5 * C * K * K * r.modular_diff + 1e-9
            assert r.decomposition_margins[e] >= -1e-9
        assert r.defect <= r.abs_defect_integral + 1e-12


def test_limsup_bound_decreases_with_eps(short_concentration):
    _, rep = short_concentration
    # only meaningful once the W integrals have converged
    converged = [x for x in rep.limsup if x["w_integral"] <= rep.tolerances["defect"]]
    assert len(converged) >= 2
    bounds = [x["bound"] for x in sorted(converged, key=lambda x: -x["eps"])]
    assert all(b2 <= b1 * (1 + 1e-12) for b1, b2 in zip(bounds, bounds[1:]))
    for x in rep.limsup:
        assert x["bound_margin"] >= -1e-9
        assert x["c_prime_ratio"] == pytest.approx(x["abs_defect_integral"] / (x["eps"] * rep.constants["K_est"]))


@pytest.mark.parametrize("p", [2.0, 3.0])
def test_defect_matches_direct_p_power_computation(p):
    spec = violator_spec(schedule=(1, 4))
    rep = run(spec, power(p), EPS)
    for row, n in zip(rep.rows, spec.n_schedule):
        s = sample(spec, n)
        h = s.un.domain.h
        direct = h * (np.sum(np.abs(s.un.values) ** p) - np.sum(np.abs(s.diff.values) ** p) - np.sum(np.abs(s.u.values) ** p))
        assert row.defect == pytest.approx(abs(direct), abs=1e-12)


def test_violator_verdict():
    rep = run(violator_spec(), G2, EPS)
    assert rep.verdict == Verdict.HYPOTHESIS_VIOLATED.value
    assert not rep.certificates["norm_bounded"]


def test_plateau_verdict():
    rep = run(plateau_spec(), G2, EPS)
    assert rep.verdict == Verdict.CONVERGENCE_OBSERVED.value


def test_non_delta2_function_violates_hypotheses():
    rep = run(translation_spec(schedule=(1, 2), cells=64), exp_minus(), EPS)
    assert rep.verdict == Verdict.HYPOTHESIS_VIOLATED.value
    assert rep.limsup == ()


def test_inconclusive_when_schedule_too_short():
    # both bumps sit inside the exceptional set, but the defect only drops ~3x
    spec = concentration_spec(schedule=(256, 512), cells=256)
    assert run(spec, G2, EPS).verdict == Verdict.INCONCLUSIVE.value


def test_run_rejects_bad_inputs():
    with pytest.raises(DomainError):
        run(translation_spec(schedule=(1,)), G2, (0.0,))
    with pytest.raises(DomainError):
        run(translation_spec(schedule=()), G2, EPS)


def test_report_json_round_trip(short_concentration):
    _, rep = short_concentration
    back = BLReport.from_json(rep.to_json())
    assert back == rep
    assert back.to_json() == rep.to_json()


def test_report_csv(short_concentration):
    _, rep = short_concentration
    lines = rep.to_csv().splitlines()
    header = lines[0].split(",")
    assert header[:7] == ["n", "modular_un", "modular_diff", "modular_u", "defect", "lux_norm_un", "aeconv_sup"]
    assert "w_int_eps_0.1" in header and "dominated_b_eps_0.01" in header
    assert len(lines) == 1 + len(rep.rows)
    col = header.index("defect")
    assert [float(l.split(",")[col]) for l in lines[1:]] == [r.defect for r in rep.rows]


def test_tolerances_round_trip():
    t = HarnessTolerances(defect=1e-4)
    assert HarnessTolerances.from_dict(t.to_dict()) == t
    assert math.isclose(t.norm_growth, 0.01)
