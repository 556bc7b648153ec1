import math

import pytest
from hypothesis import given, strategies as st

from spinmem.errors import (
    MissingCavityTransmission,
    MissingDetuning,
    NonPositiveParameter,
    RegimeWarning,
)
from spinmem.params import (
    InputField,
    MediumParams,
    Scheme,
    db_to_linear,
    linear_to_db,
    load_config,
    params_from_mapping,
    pumping_rates,
    validate,
)


def base(**kw):
    d = dict(gamma0=1e-3, omega_rabi=math.sqrt(10), g2n=1e4, transit=0.01)
    d.update(kw)
    return MediumParams(**d)


def test_negative_gamma0_rejected():
    with pytest.raises(NonPositiveParameter):
        validate(base(gamma0=-0.1))


@pytest.mark.parametrize("field", ["omega_rabi", "g2n", "gamma"])
def test_nonpositive_rates_rejected(field):
    with pytest.raises(NonPositiveParameter):
        validate(base(**{field: 0.0}))


def test_cooperativity_product():
    assert base(g2n=1000.0, transit=0.1).cooperativity == pytest.approx(100.0)


def test_cavity_scheme_needs_transmission():
    with pytest.raises(MissingCavityTransmission):
        validate(base(), Scheme.CAVITY_EIT)
    v = validate(base(cavity_T=0.1), "cavity-eit")
    assert v.cooperativity == pytest.approx(1e4 / 0.1)


def test_fig2_point_fails_strict_regime_flag():
    with pytest.warns(RegimeWarning):
        v = validate(MediumParams.eit(100, 10, 1e-3), Scheme.SINGLE_PASS_EIT)
    # 0.001 < 1.0 < 1 is false at the upper edge
    assert v.flags["eit_transfer_regime"] is False
    assert v.cooperativity == pytest.approx(100)
    assert v.gamma_e == pytest.approx(10)


def test_raman_regime_flags_true_at_fig4_point():
    v = validate(MediumParams.raman(100, 0.01, 1e-3), "raman")
    assert v.flags == {"raman_detuning": True, "raman_slow_pumping": True,
                       "raman_transfer_regime": True}


def test_pumping_rates():
    assert pumping_rates(base(omega_rabi=math.sqrt(10)))[0] == pytest.approx(10)
    ge, gr = pumping_rates(base(omega_rabi=1.0, delta1=10.0))
    assert gr == pytest.approx(0.01)
    ge, gr = pumping_rates(base(omega_rabi=1e-9, delta1=10.0))
    assert ge < 1e-17 and gr < 1e-19


def test_missing_detuning():
    with pytest.raises(MissingDetuning):
        base().gamma_r
    with pytest.raises(MissingDetuning):
        validate(base(), "raman")


def test_db_conversion():
    assert db_to_linear(3.0103) == pytest.approx(0.5, abs=1e-5)
    assert db_to_linear(0.0) == 1.0
    assert InputField.from_db(3.0103).s_y_in == pytest.approx(2.0, abs=1e-4)
    with pytest.raises(NonPositiveParameter):
        InputField(0.0)


@given(st.floats(-40, 40))
def test_db_round_trip(db):
    assert linear_to_db(db_to_linear(db)) == pytest.approx(db, abs=1e-9)


@given(st.floats(1.0, 1e6), st.floats(1e-4, 10.0), st.floats(1.1, 10.0))
def test_cooperativity_linear_in_g2n_and_transit(g2n, transit, k):
    p = base(g2n=g2n, transit=transit)
    assert p.with_(g2n=k * g2n).cooperativity == pytest.approx(k * p.cooperativity)
    assert p.with_(transit=k * transit).cooperativity == pytest.approx(k * p.cooperativity)


@given(st.floats(0.1, 10.0))
def test_dimensional_rescaling(lam):
    p = MediumParams(gamma0=1e-3, omega_rabi=2.0, g2n=1e4, transit=0.01, delta1=10.0)
    q = MediumParams(gamma=lam, gamma0=1e-3 * lam, omega_rabi=2.0 * lam,
                     g2n=1e4 * lam ** 2, transit=0.01 / lam, delta1=10.0 * lam)
    assert q.cooperativity == pytest.approx(p.cooperativity)
    assert q.gamma_e == pytest.approx(lam * p.gamma_e)
    assert q.gamma_r == pytest.approx(lam * p.gamma_r)


def test_constructors_hit_requested_rates():
    e = MediumParams.eit(50, 10, 0.0)
    assert e.cooperativity == pytest.approx(50) and e.gamma_e == pytest.approx(10)
    r = MediumParams.raman(50, 0.01, 0.0)
    assert r.cooperativity == pytest.approx(50) and r.gamma_r == pytest.approx(0.01)
    c = MediumParams.cavity(100, 0.2, 0.0, gamma_r=0.01)
    assert c.cavity_cooperativity == pytest.approx(100) and c.gamma_r == pytest.approx(0.01)


def test_config_file(tmp_path):
    path = tmp_path / "medium.cfg"
    path.write_text("# fig 4\ncooperativity = 100\ngamma0 = 0.001  # decay\n"
                    "omega_rabi = 1\ndelta1 = 10\n")
    values = load_config(path)
    p = params_from_mapping(values, "raman")
    assert p.cooperativity == pytest.approx(100)
    assert p.gamma_r == pytest.approx(0.01)
    assert p.transit == pytest.approx(100 / 1e4)


def test_config_rejects_unknown_key(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("temperature = 3\n")
    with pytest.raises(ValueError):
        load_config(path)
