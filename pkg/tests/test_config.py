import logging

import pytest

from cyclecalc.config import Settings, get_settings, resolve_tol

ENV_VARS = [
    "CYCLECALC_INERTIA_TOL",
    "CYCLECALC_WEIGHT_EPS",
    "CYCLECALC_RESIDUAL_TOL",
    "CYCLECALC_SYMMETRY_TOL",
    "CYCLECALC_EIGENSOLVER",
    "CYCLECALC_LOG_LEVEL",
]


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for var in ENV_VARS:
        monkeypatch.delenv(var, raising=False)


def test_defaults():
    s = get_settings()
    assert s == Settings()
    assert s.inertia_tol == 1e-9
    assert s.weight_eps == 1e-12
    assert s.eigensolver == "jacobi"
    assert s.logging_level == logging.WARNING


@pytest.mark.parametrize("kwargs", [
    {"inertia_tol": 0.0},
    {"weight_eps": -1.0},
    {"residual_tol": 0.0},
    {"eigensolver": "qr"},
    {"log_level": "chatty"},
])
def test_settings_validation(kwargs):
    with pytest.raises(ValueError):
        Settings(**kwargs)


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("CYCLECALC_INERTIA_TOL", "1e-6")
    monkeypatch.setenv("CYCLECALC_EIGENSOLVER", " LAPACK ")
    monkeypatch.setenv("CYCLECALC_LOG_LEVEL", "debug")
    s = get_settings()
    assert s.inertia_tol == 1e-6
    assert s.eigensolver == "lapack"
    assert s.logging_level == logging.DEBUG


@pytest.mark.parametrize("var, value", [
    ("CYCLECALC_WEIGHT_EPS", "tiny"),
    ("CYCLECALC_RESIDUAL_TOL", "-1"),
    ("CYCLECALC_EIGENSOLVER", "power"),
])
def test_invalid_environment_value(monkeypatch, var, value):
    monkeypatch.setenv(var, value)
    with pytest.raises(ValueError, match="CYCLECALC_"):
        get_settings()


def test_blank_environment_value_keeps_default(monkeypatch):
    monkeypatch.setenv("CYCLECALC_INERTIA_TOL", "   ")
    assert get_settings().inertia_tol == 1e-9


def test_resolve_tol(monkeypatch):
    assert resolve_tol(0.5, "inertia_tol") == 0.5
    assert resolve_tol(None, "residual_tol") == 1e-8
    monkeypatch.setenv("CYCLECALC_RESIDUAL_TOL", "1e-3")
    assert resolve_tol(None, "residual_tol") == 1e-3


def test_with_overrides_skips_none():
    s = Settings().with_overrides(inertia_tol=1e-4, eigensolver=None)
    assert s.inertia_tol == 1e-4
    assert s.eigensolver == "jacobi"
    with pytest.raises(ValueError):
        Settings().with_overrides(inertia_tol=-1.0)
