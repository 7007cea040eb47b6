import json
import logging

import numpy as np
import pytest
from click.testing import CliRunner

import cyclecalc.cli as cli_module
from cyclecalc import __version__
from cyclecalc.cli import Report, cli
from cyclecalc.oracle.eigen import Inertia

TRIANGLE = "# stable triangle\n0 1 1.0\n1 2 1.0\n2 0 -0.4\n"
DIAMOND = "0 1 1\n1 2 1\n2 3 1\n0 3 1\n0 2 -0.2\n"
BALANCED_SQUARE = "0 1 1\n1 2 1\n2 3 1\n0 3 -0.3333333333333333\n"
UNIT_RING = "0 1 1\n1 2 1\n0 2 1\n"


@pytest.fixture(autouse=True)
def _drop_cli_handlers():
    yield
    pkg_logger = logging.getLogger("cyclecalc")
    for handler in list(pkg_logger.handlers):
        if getattr(handler, "_cyclecalc_cli", False):
            pkg_logger.removeHandler(handler)
    pkg_logger.setLevel(logging.NOTSET)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write


def _json(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_index_text(runner, write):
    result = runner.invoke(cli, ["index", write("tri.txt", TRIANGLE)])
    assert result.exit_code == 0, result.output
    assert "Laplacian index via cycles: n+ = 0, n0 = 1, n- = 2" in result.stdout
    assert "Negative edges: 1, cycle rank: 1" in result.stdout


def test_index_both_json(runner, write):
    path = write("diamond.txt", DIAMOND)
    data = _json(runner.invoke(cli, ["--format", "json", "index", path, "--method", "both"]))
    assert data["command"] == "index"
    res = data["results"]
    assert res["methods"]["cycles"] == res["methods"]["direct"] == res["inertia"]
    assert res["inertia"] == {"n_plus": 0, "n_zero": 1, "n_minus": 3}
    assert res["cycle_rank"] == 2
    assert res["bounds"] == {"lower": 0, "upper": 1}
    assert res["tree_set_lower_bound"] == 0
    assert len(data["input_digest"]) == 64
    assert data["version"] == __version__


def test_index_direct_only(runner, write):
    data = _json(runner.invoke(cli, ["--format", "json", "index", write("r.txt", UNIT_RING), "--method", "direct"]))
    assert list(data["results"]["methods"]) == ["direct"]
    assert data["results"]["inertia"]["n_zero"] == 1


def test_report_json_round_trip(runner, write):
    result = runner.invoke(cli, ["--format", "json", "index", write("tri.txt", TRIANGLE)])
    report = Report.from_json(result.stdout)
    assert report.to_json() == result.stdout.strip()
    assert Report.from_json(report.to_json()) == report


def test_index_csv_flattens_results(runner, write):
    result = runner.invoke(cli, ["--format", "csv", "index", write("tri.txt", TRIANGLE)])
    assert result.exit_code == 0, result.output
    header, row = result.stdout.strip().splitlines()
    assert "inertia.n_plus" in header.split(",")
    assert "methods.cycles.n_zero" in header.split(",")
    assert len(row.split(",")) == len(header.split(","))


def test_index_reports_disagreement(runner, write, monkeypatch):
    monkeypatch.setattr(cli_module, "direct_index", lambda g, tol=None: Inertia(3, 0, 0))
    result = runner.invoke(cli, ["index", write("tri.txt", TRIANGLE), "--method", "both"])
    assert result.exit_code == 4
    assert "differs from direct inertia" in result.output


def test_detred(runner, write):
    data = _json(runner.invoke(cli, ["--format", "json", "detred", write("r.txt", UNIT_RING)]))
    res = data["results"]
    assert res["lhs"] == pytest.approx(3.0)
    assert res["rhs"] == pytest.approx(-3.0)
    assert res["sign_factor"] == res["expected_sign"] == -1


def test_detred_text(runner, write):
    result = runner.invoke(cli, ["detred", write("r.txt", UNIT_RING)])
    assert result.exit_code == 0
    assert "sign factor      = -1 (expected -1)" in result.stdout


def test_ring_table_json(runner):
    data = _json(runner.invoke(cli, ["--format", "json", "ring-table", "--n-list", "3,10"]))
    assert [row["n"] for row in data["rows"]] == [3, 10]
    assert data["rows"][0]["normalized_link"] == pytest.approx(0.447, abs=1e-3)
    assert data["rows"][1]["normalized_link"] == pytest.approx(0.297, abs=1e-3)
    assert all(row["is_long"] for row in data["rows"])
    assert data["results"] == {"count": 2}
    assert data["input_digest"] is None


def test_ring_table_csv(runner):
    result = runner.invoke(cli, ["--format", "csv", "ring-table", "--n-list", "4 5"])
    assert result.exit_code == 0, result.output
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "n,zeta_star,normalized_link,omega_wrap,is_long"
    assert [line.split(",")[0] for line in lines[1:]] == ["4", "5"]


@pytest.mark.parametrize("n_list", ["2,3", "three", ","])
def test_ring_table_rejects_bad_sizes(runner, n_list):
    result = runner.invoke(cli, ["ring-table", "--n-list", n_list])
    assert result.exit_code == 2


def test_ring_scan_json(runner):
    data = _json(runner.invoke(cli, ["--format", "json", "ring-scan", "--n", "9", "--steps", "5"]))
    assert data["results"] == {"count": 5, "poles": 0}
    assert data["rows"][0]["h_n"] == 9.0
    assert set(data["rows"][0]) == {"zeta", "h_n", "omega_wrap", "cos_wrap", "pole"}


def test_ring_scan_pole_becomes_null(runner):
    args = ["--format", "json", "ring-scan", "--n", "5", "--zeta-max", repr(float(np.pi)), "--steps", "2"]
    data = _json(runner.invoke(cli, args))
    assert data["results"]["poles"] == 1
    assert data["rows"][1]["pole"] is True
    assert data["rows"][1]["h_n"] is None


def test_ring_scan_rejects_empty_interval(runner):
    result = runner.invoke(cli, ["ring-scan", "--zeta-min", "1.0", "--zeta-max", "0.5"])
    assert result.exit_code == 2
    assert "Error:" in result.output


def test_classify_splay_triangle(runner, write):
    graph = write("ring.txt", UNIT_RING)
    theta = write("theta.txt", "# splay\n0\n2.0943951023931953\n4.1887902047863905\n")
    omega = write("omega.txt", "0\n0\n0\n")
    args = ["--format", "json", "classify", "--graph-file", graph, "--theta-file", theta, "--omega-file", omega]
    data = _json(runner.invoke(cli, args))
    res = data["results"]
    assert res["unstable_dim"] == 2
    assert res["zero_modes"] == 1
    assert res["stable"] is False
    assert len(res["long_links"]) == 3
    assert all(row["long"] for row in data["rows"])
    assert data["rows"][0]["jacobian_weight"] == pytest.approx(-0.5)


def test_classify_synchronized_text(runner, write):
    graph = write("ring.txt", UNIT_RING)
    zeros = write("zeros.txt", "0\n0\n0\n")
    args = ["classify", "--graph-file", graph, "--theta-file", zeros, "--omega-file", zeros]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.output
    assert "Unstable dimension: 0 (stable)" in result.stdout
    assert "Long links: none" in result.stdout


def test_classify_not_a_fixed_point(runner, write):
    graph = write("ring.txt", UNIT_RING)
    theta = write("theta.txt", "0\n0.3\n0.1\n")
    omega = write("omega.txt", "0\n0\n0\n")
    args = ["classify", "--graph-file", graph, "--theta-file", theta, "--omega-file", omega]
    result = runner.invoke(cli, args)
    assert result.exit_code == 6
    assert "exceeds tolerance" in result.output


def test_classify_degenerate_link(runner, write):
    graph = write("edge.txt", "0 1 1.0\n")
    theta = write("theta.txt", "0\n1.5707963267948966\n")
    omega = write("omega.txt", "-1\n1\n")
    args = ["classify", "--graph-file", graph, "--theta-file", theta, "--omega-file", omega]
    assert runner.invoke(cli, args).exit_code == 7


@pytest.mark.parametrize("theta_text", ["0\nabc\n0\n", "0\nnan\n0\n"])
def test_classify_rejects_bad_vectors(runner, write, theta_text):
    graph = write("ring.txt", UNIT_RING)
    theta = write("theta.txt", theta_text)
    omega = write("omega.txt", "0\n0\n0\n")
    args = ["classify", "--graph-file", graph, "--theta-file", theta, "--omega-file", omega]
    assert runner.invoke(cli, args).exit_code == 2


def test_classify_rejects_length_mismatch(runner, write):
    graph = write("ring.txt", UNIT_RING)
    theta = write("theta.txt", "0\n0\n")
    args = ["classify", "--graph-file", graph, "--theta-file", theta, "--omega-file", theta]
    assert runner.invoke(cli, args).exit_code == 2


def test_classify_reads_vectors_by_file_vertex_id(runner, write):
    # the first edge does not start at vertex 0
    graph = write("path.txt", "1 2 1.0\n0 1 1.0\n")
    theta = write("theta.txt", "0\n0.3\n0.6\n")
    omega = write("omega.txt", f"{-float(np.sin(0.3))!r}\n0\n{float(np.sin(0.3))!r}\n")
    args = ["--format", "json", "classify", "--graph-file", graph, "--theta-file", theta, "--omega-file", omega]
    data = _json(runner.invoke(cli, args))
    assert data["results"]["unstable_dim"] == 0
    assert data["results"]["residual"] < 1e-12
    links = {frozenset((row["tail"], row["head"])) for row in data["rows"]}
    assert links == {frozenset((1, 2)), frozenset((0, 1))}
    for row in data["rows"]:
        assert row["jacobian_weight"] == pytest.approx(np.cos(0.3))


def test_classify_requires_contiguous_vertex_ids(runner, write):
    graph = write("gap.txt", "0 1 1.0\n1 5 1.0\n")
    zeros = write("zeros.txt", "0\n0\n0\n")
    args = ["classify", "--graph-file", graph, "--theta-file", zeros, "--omega-file", zeros]
    result = runner.invoke(cli, args)
    assert result.exit_code == 2
    assert "0..2" in result.output


def test_cover_text(runner, write):
    result = runner.invoke(cli, ["cover", "--graph-file", write("d.txt", DIAMOND)])
    assert result.exit_code == 0, result.output
    lines = result.stdout.strip().splitlines()
    assert lines[0].startswith("# cover tree: 6 vertices, 5 edges")
    assert sum(1 for line in lines if line.startswith("# phi")) == 6


def test_cover_json(runner, write):
    data = _json(runner.invoke(cli, ["--format", "json", "cover", "--graph-file", write("d.txt", DIAMOND)]))
    res = data["results"]
    assert (res["n_tree_vertices"], res["n_tree_edges"], res["cycle_rank"]) == (6, 5, 2)
    assert res["phi"] == [0, 1, 2, 3, 2, 3]
    assert len(data["rows"]) == 5


def test_cover_reports_file_vertex_ids(runner, write):
    graph = write("t.json", '{"edges": [[5, 7, 1.0], [7, 9, 1.0], [5, 9, 1.0]]}')
    data = _json(runner.invoke(cli, ["--format", "json", "cover", "--graph-file", graph]))
    assert set(data["results"]["phi"]) == {5, 7, 9}
    text = runner.invoke(cli, ["cover", "--graph-file", graph]).stdout
    phi_lines = [line for line in text.splitlines() if line.startswith("# phi")]
    assert len(phi_lines) == 4
    assert {line.rsplit(" ", 1)[1] for line in phi_lines} == {"5", "7", "9"}


def test_selftest(runner):
    data = _json(runner.invoke(cli, ["--format", "json", "--seed", "3", "selftest", "--count", "25"]))
    assert data["results"]["failures"] == 0
    assert data["results"]["graphs"] == 25
    assert data["arguments"]["seed"] == 3


def test_selftest_reports_failures(runner, monkeypatch):
    monkeypatch.setattr(cli_module, "brute_force_index", lambda g, tol=None: Inertia(0, 0, g.n_vertices))
    result = runner.invoke(cli, ["selftest", "--count", "3"])
    assert result.exit_code == 4
    assert "check(s) failed" in result.output


@pytest.mark.parametrize("text, code", [
    ("0 1 1.0\n2 3 1.0\n", 3),
    ("0 1\n", 2),
    ("0 1 1.0\n1 0 2.0\n", 2),
    ("0 1 0.0\n", 7),
])
def test_index_exit_codes(runner, write, text, code):
    result = runner.invoke(cli, ["index", write("g.txt", text)])
    assert result.exit_code == code
    assert result.output.startswith("Error:")


def test_detred_singular_cycle_form(runner, write):
    result = runner.invoke(cli, ["detred", write("sq.txt", BALANCED_SQUARE)])
    assert result.exit_code == 5


def test_detred_disconnected(runner, write):
    result = runner.invoke(cli, ["detred", write("g.txt", "0 1 1.0\n2 3 1.0\n")])
    assert result.exit_code == 3


def test_missing_file_is_a_usage_error(runner, tmp_path):
    result = runner.invoke(cli, ["index", str(tmp_path / "missing.txt")])
    assert result.exit_code == 2


def test_nonpositive_tol_is_rejected(runner, write):
    result = runner.invoke(cli, ["--tol", "0", "index", write("tri.txt", TRIANGLE)])
    assert result.exit_code == 2


def test_degenerate_index_logs_warning(runner, write):
    result = runner.invoke(cli, ["--format", "json", "index", write("sq.txt", BALANCED_SQUARE)])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["results"]["degenerate"] is True
    assert data["results"]["inertia"] == {"n_plus": 0, "n_zero": 2, "n_minus": 2}
    assert "singular" in result.stderr


def test_log_level_debug(runner, write):
    result = runner.invoke(cli, ["--log-level", "debug", "index", write("tri.txt", TRIANGLE)])
    assert result.exit_code == 0
    assert "DEBUG cyclecalc" in result.stderr
