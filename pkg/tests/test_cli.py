import json

import pytest

import fracmatch
from config import Subcommand
from families.construction import gen_complete_bipartite, gen_ring_blocks
from graph_core.edge_list import parse_edge_list, read_edge_list, write_edge_list
from graph_core.graph_interface import Graph
from graph_core.named_graphs import complete_graph, cycle_graph, path_graph, petersen_graph, star_graph
from matching.fractional import HalfIntegralMatching, validate_certificate


@pytest.fixture
def edge_file(tmp_path):
    def write(name, g):
        path = tmp_path / f"{name}.txt"
        write_edge_list(path, g)
        return str(path)
    return write


def run(capsys, argv, **kwargs):
    code = fracmatch.main(argv, **kwargs)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_complete_bipartite(capsys, edge_file):
    code, out, _ = run(capsys, ["analyze", edge_file("k23", gen_complete_bipartite(2, 3))])
    assert code == 0
    report = json.loads(out)
    assert report["alpha_f"] == "4/2"
    assert report["bound"] == pytest.approx(2.0, abs=1e-8)
    assert report["equality"] is True


def test_analyze_single_edge(capsys, edge_file):
    code, out, _ = run(capsys, ["analyze", edge_file("k2", complete_graph(2))])
    report = json.loads(out)
    assert code == 0
    assert report["alpha_f"] == "2/2"
    assert report["bound"] == pytest.approx(1.0, abs=1e-8)
    assert report["equality"] is True
    assert report["d"] == 1 and report["membership"]["k_found"] == 0


def test_analyze_writes_output_file(capsys, edge_file, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, ["analyze", edge_file("k23", gen_complete_bipartite(2, 3)), "-o", str(target)])
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["alpha_f"] == "4/2"


def test_disconnected_input_is_a_precondition_failure(capsys, edge_file):
    code, out, err = run(capsys, ["analyze", edge_file("split", Graph(4, [(0, 1), (2, 3)]))])
    assert code == 3
    assert out == ""
    assert err.startswith("error:")


@pytest.mark.parametrize("argv", [
    ["analyze", "does-not-exist.txt"],
    ["analyze"],
    ["frobnicate"],
    ["fuzz", "--trials", "0"],
    ["fuzz", "--tol", "-1"],
    ["gen", "ring", "-d", "1", "-m", "1", "-c", "2"],
    ["gen", "kab", "-a", "0", "-b", "3"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, argv)[0] == 2


def test_malformed_edge_list_is_a_usage_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_bytes(b"3 1\n0 0")
    code, _, err = run(capsys, ["analyze", str(path)])
    assert code == 2
    assert "line 2" in err


def test_help_exits_cleanly(capsys):
    assert run(capsys, ["--help"])[0] == 0


def test_gen_ring_to_file(capsys, tmp_path):
    target = tmp_path / "g3.txt"
    code, out, err = run(capsys, ["gen", "ring", "-d", "2", "-m", "1", "-c", "3", "-o", str(target)])
    assert code == 0 and out == ""
    assert read_edge_list(target).n == 15
    assert "expected: n=15 d=2 k=3 alpha_f=12/2" in err


def test_gen_kab_to_stdout(capsys):
    code, out, _ = run(capsys, ["gen", "kab", "-a", "2", "-b", "3"])
    assert code == 0
    assert parse_edge_list(out) == gen_complete_bipartite(2, 3)


def test_verify_generated_member(capsys, tmp_path):
    target = tmp_path / "g3.txt"
    run(capsys, ["gen", "ring", "-d", "2", "-m", "1", "-c", "3", "-o", str(target)])
    code, out, _ = run(capsys, ["verify", str(target)])
    result = json.loads(out)
    assert code == 0
    assert result["passed"] and result["equality_outcome"] == "holds"
    assert result["report"]["alpha_f"] == "12/2"


def test_verify_petersen_reports_anomaly(capsys, edge_file):
    code, out, _ = run(capsys, ["verify", edge_file("petersen", petersen_graph())])
    result = json.loads(out)
    assert code == 0
    assert result["equality_outcome"] == "regular-case anomaly"
    assert result["anomalies"]


def test_verify_with_corrupted_report_exits_one(capsys, edge_file):
    def corrupt(report):
        return report.model_copy(update={"alpha_f_half_units": 0})

    code, out, _ = run(capsys, ["verify", edge_file("k23", gen_complete_bipartite(2, 3))], report_hook=corrupt)
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_fuzz_is_deterministic(capsys):
    argv = ["fuzz", "--n-max", "12", "--d-max", "3", "--trials", "20", "--seed", "7"]
    code, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert code == 0
    assert first == second
    summary = json.loads(first)
    assert summary["violations"] == 0 and summary["seed"] == 7


@pytest.mark.slow
def test_fuzz_acceptance_run(capsys):
    code, out, _ = run(capsys, ["fuzz", "--n-max", "40", "--trials", "1000", "--seed", "42"])
    assert code == 0
    assert json.loads(out)["violations"] == 0


def test_oracle_on_star(capsys, edge_file):
    code, out, _ = run(capsys, ["oracle", edge_file("k13", star_graph(3))])
    report = json.loads(out)
    assert code == 0
    assert report["alpha_f"] == "2/2"
    assert report["witness"]["s"] == [0]
    assert report["deficiency"] == 2
    assert report["agree"] is True


def test_oracle_on_complete_bipartite(capsys, edge_file):
    code, out, _ = run(capsys, ["oracle", edge_file("k23", gen_complete_bipartite(2, 3))])
    report = json.loads(out)
    assert report["witness"]["s"] == [0, 1]
    assert report["deficiency"] == 1 and report["agree"]


def test_oracle_refuses_large_inputs(capsys, edge_file):
    assert run(capsys, ["oracle", edge_file("p25", path_graph(25))])[0] == 2


RING_PARAMS = [(d, m, c) for d in range(2, 5) for m in range(1, 4) for c in range(1, 5)]


@pytest.mark.parametrize("d,m,c", RING_PARAMS)
def test_gen_analyze_verify_round_trip(capsys, tmp_path, d, m, c):
    target = tmp_path / "member.txt"
    assert run(capsys, ["gen", "ring", "-d", str(d), "-m", str(m), "-c", str(c), "-o", str(target)])[0] == 0
    code, first, _ = run(capsys, ["analyze", str(target)])
    assert code == 0 and json.loads(first)["equality"] is True
    assert run(capsys, ["analyze", str(target)])[1] == first
    assert run(capsys, ["verify", str(target), "--cap", "16"])[0] == 0


def certificate_from(g, rows):
    weights = {edge: 0 for edge in g.edges}
    weights.update({(u, v): w for u, v, w in rows})
    return HalfIntegralMatching(weights=weights, total=sum(w for _, _, w in rows))


@pytest.mark.parametrize("command", ["analyze", "oracle"])
def test_reports_carry_a_valid_certificate(capsys, edge_file, command):
    g = gen_ring_blocks(2, 1, 3)
    code, out, _ = run(capsys, [command, edge_file("ring", g)])
    report = json.loads(out)
    assert code == 0
    cert = certificate_from(g, report["certificate"])
    validate_certificate(g, cert)
    assert max(cert.loads(g.n)) <= 2
    assert report["alpha_f"] == f"{cert.total}/2"


def test_certificate_on_odd_cycle_is_all_halves(capsys, edge_file):
    code, out, _ = run(capsys, ["analyze", edge_file("c5", cycle_graph(5))])
    rows = json.loads(out)["certificate"]
    assert code == 0
    assert [tuple(row) for row in rows] == [(0, 1, 1), (0, 4, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1)]


def test_oversized_header_is_a_usage_error(capsys, tmp_path):
    path = tmp_path / "huge.txt"
    path.write_bytes(b"10000000000 0")
    code, out, err = run(capsys, ["analyze", str(path)])
    assert code == 2 and out == ""
    assert "line 1" in err


def test_memory_exhaustion_is_reported_not_raised(capsys, edge_file, monkeypatch):
    def exhaust(args, config, report_hook):
        raise MemoryError

    monkeypatch.setitem(fracmatch.COMMANDS, Subcommand.ANALYZE, exhaust)
    code, out, err = run(capsys, ["analyze", edge_file("k2", complete_graph(2))])
    assert code == 2 and out == ""
    assert err.startswith("error:")
