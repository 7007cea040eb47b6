import importlib

import pytest

from cyclecalc.metadata import build_module_registry, describe_object, display_name

EXPECTED_REGISTRIES = {
    "cyclecalc.graphs.core.cycles": {
        "connected_components": "Number of components",
        "cycle_rank": "Cycle rank",
    },
    "cyclecalc.spectral.laplacian": {
        "laplacian": "Laplacian matrix",
        "inertia": "Inertia",
        "det_red": "Reduced determinant",
    },
    "cyclecalc.spectral.cycle_form": {
        "cycle_form": "Cycle form",
        "index_via_cycles": "Laplacian index via cycles",
        "index_bounds": "Component bounds on the Laplacian index",
    },
    "cyclecalc.spectral.thresholds": {
        "threshold_one_cycle": "One-cycle critical weight",
        "threshold_two_cycle": "Two-cycle resistance bound",
    },
    "cyclecalc.kuramoto.ring": {
        "h_n": "Ring stability function",
        "longest_stable_link": "Longest stable link",
    },
}


@pytest.mark.parametrize("module_name", sorted(EXPECTED_REGISTRIES))
def test_expected_registries_present(module_name):
    registry = build_module_registry(importlib.import_module(module_name))
    for key, name in EXPECTED_REGISTRIES[module_name].items():
        assert key in registry
        assert registry[key]["display_name"] == name
        assert registry[key]["definition"]
        assert registry[key]["category"]
        assert isinstance(registry[key]["aliases"], tuple)


def test_registry_excludes_private_helpers():
    registry = build_module_registry(importlib.import_module("cyclecalc.spectral.cycle_form"))
    assert all(not key.startswith("_") for key in registry)


def test_metadata_survives_graph_validation_wrapper():
    from cyclecalc.spectral import index_via_cycles

    assert display_name(index_via_cycles) == "Laplacian index via cycles"
    desc = describe_object(index_via_cycles)
    assert desc["name"] == "index_via_cycles"
    assert "Definition" not in desc["definition"]


def test_display_name_fallback():
    def helper():
        pass

    assert display_name(helper) == "helper"
    assert display_name(helper, "Helper") == "Helper"
