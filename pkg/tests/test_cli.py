import csv
import io
import os
import subprocess
import sys

import pytest

from dmagic.cli import main
from dmagic.graphs import parse_graph, prism
from dmagic.verifier import parse_certificate


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_version(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["--version"])
    assert exit_info.value.code == 0
    assert "dmagic 0.1.0" in capsys.readouterr().out


def test_no_arguments_is_a_usage_error():
    with pytest.raises(SystemExit) as exit_info:
        main([])
    assert exit_info.value.code == 2


def test_graph_generation(tmp_path, capsys):
    target = tmp_path / "p4.graph"
    code, out, _ = run(capsys, "graph", "--family", "prism", "--n", "4", "-o", str(target))
    assert code == 0
    assert parse_graph(target.read_text()) == prism(4)
    assert not [p for p in os.listdir(tmp_path) if p.startswith(".dmagic.")]


def test_graph_to_stdout(capsys):
    code, out, _ = run(capsys, "graph", "--family", "cycle", "--n", "4")
    assert code == 0
    assert out.startswith("graph 4 4\n")


def test_graph_missing_parameter(capsys):
    code, _, err = run(capsys, "graph", "--family", "multipartite")
    assert code == 2
    assert "--sizes" in err


def test_construct_verify_round_trip(tmp_path, capsys):
    cert = tmp_path / "k43.cert"
    graph = tmp_path / "k43.graph"
    code, out, _ = run(capsys, "construct", "--family", "kmokn", "--m", "4", "--n", "3",
                       "--cert-out", str(cert), "--graph-out", str(graph))
    assert code == 0
    assert out.strip() == "magic mu=6"
    code, out, _ = run(capsys, "verify", "--graph", str(graph), "--cert", str(cert))
    assert code == 0
    assert out.strip() == "magic mu=6"


def test_construct_default_output_files(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, _, _ = run(capsys, "construct", "--family", "kmokn", "--m", "2", "--n", "2")
    assert code == 0
    assert (tmp_path / "kmokn-2-2.graph").exists()
    assert (tmp_path / "kmokn-2-2.cert").exists()
    code, _, _ = run(capsys, "verify",
                     "--graph", str(tmp_path / "kmokn-2-2.graph"),
                     "--cert", str(tmp_path / "kmokn-2-2.cert"))
    assert code == 0


def test_construct_not_magic_cell(capsys):
    code, out, err = run(capsys, "construct", "--family", "kmokn", "--m", "6", "--n", "3")
    assert code == 1
    assert "theorem1" in err


def test_construct_open_cell(capsys):
    code, out, err = run(capsys, "construct", "--family", "kmokn", "--m", "3", "--n", "3")
    assert code == 2
    assert "search" in err


def test_construct_even_complete(capsys):
    code, _, err = run(capsys, "construct", "--family", "complete", "--n", "6")
    assert code == 1
    assert "not-magic" in err


def test_verify_rejects_tampered_mu(tmp_path, capsys):
    cert = tmp_path / "c.cert"
    graph = tmp_path / "c.graph"
    run(capsys, "construct", "--family", "kmokn", "--m", "2", "--n", "2",
        "--cert-out", str(cert), "--graph-out", str(graph))
    text = cert.read_text().replace("mu 2", "mu 3")
    cert.write_text(text)
    code, out, _ = run(capsys, "verify", "--graph", str(graph), "--cert", str(cert))
    assert code == 1
    assert "violation" in out


def test_verify_rejects_tampered_labels(tmp_path, capsys):
    cert = tmp_path / "c.cert"
    graph = tmp_path / "c.graph"
    run(capsys, "construct", "--family", "kmokn", "--m", "2", "--n", "2",
        "--cert-out", str(cert), "--graph-out", str(graph))
    # swap the labels of vertices 0 and 2 across the blocks: weights diverge
    text = cert.read_text().replace("l 0 2", "l 0 1").replace("l 2 1", "l 2 2")
    cert.write_text(text)
    code, out, _ = run(capsys, "verify", "--graph", str(graph), "--cert", str(cert))
    assert code == 1
    assert "violation vertex=3" in out


def test_verify_malformed_certificate(tmp_path, capsys):
    graph = tmp_path / "c.graph"
    cert = tmp_path / "c.cert"
    run(capsys, "graph", "--family", "cycle", "--n", "4", "-o", str(graph))
    cert.write_text("certificate 4\nmu 0\nl 0 0\n")
    code, _, err = run(capsys, "verify", "--graph", str(graph), "--cert", str(cert))
    assert code == 2
    assert "error:" in err


def test_verify_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "verify", "--graph", str(tmp_path / "nope"),
                       "--cert", str(tmp_path / "nope2"))
    assert code == 2
    assert "error:" in err


def test_decide_exit_codes(capsys):
    assert run(capsys, "decide", "--family", "kmokn", "--m", "4", "--n", "3")[0] == 0
    assert run(capsys, "decide", "--family", "kmokn", "--m", "6", "--n", "3")[0] == 1
    assert run(capsys, "decide", "--family", "kmokn", "--m", "3", "--n", "3")[0] == 2


def test_decide_output_format(capsys):
    code, out, _ = run(capsys, "decide", "--family", "kmokn", "--m", "4", "--n", "3")
    assert out.strip() == "magic case1 mu=6"
    code, out, _ = run(capsys, "decide", "--family", "kmokn", "--m", "3", "--n", "2")
    assert out.strip() == "magic case2 mu=4"
    code, out, _ = run(capsys, "decide", "--family", "kmokn", "--m", "6", "--n", "3")
    assert out.strip() == "not-magic theorem1"


def test_search_witness_and_certificate(tmp_path, capsys):
    graph = tmp_path / "k5.graph"
    cert = tmp_path / "k5.cert"
    run(capsys, "graph", "--family", "complete", "--n", "5", "-o", str(graph))
    code, out, _ = run(capsys, "search", "--graph", str(graph), "-o", str(cert))
    assert code == 0
    assert out.startswith("witness mu=")
    code, out, _ = run(capsys, "verify", "--graph", str(graph), "--cert", str(cert))
    assert code == 0


def test_search_witness_prints_certificate_without_output_file(tmp_path, capsys):
    graph = tmp_path / "k5.graph"
    run(capsys, "graph", "--family", "complete", "--n", "5", "-o", str(graph))
    code, out, _ = run(capsys, "search", "--graph", str(graph))
    assert code == 0
    summary, _, rest = out.partition("\n")
    assert summary.startswith("witness mu=")
    assert parse_certificate(rest).order == 5


def test_search_exhausted(tmp_path, capsys):
    graph = tmp_path / "p4.graph"
    run(capsys, "graph", "--family", "prism", "--n", "4", "-o", str(graph))
    code, out, _ = run(capsys, "search", "--graph", str(graph))
    assert code == 1
    assert out.startswith("exhausted-no-solution")


def test_search_inconclusive_budget(tmp_path, capsys):
    graph = tmp_path / "k6.graph"
    run(capsys, "graph", "--family", "complete", "--n", "6", "-o", str(graph))
    code, out, _ = run(capsys, "search", "--graph", str(graph), "--no-parity-prune",
                       "--nodes", "100")
    assert code == 2
    assert out.startswith("inconclusive")


def test_obstruct(tmp_path, capsys):
    graph = tmp_path / "p4.graph"
    run(capsys, "graph", "--family", "prism", "--n", "4", "-o", str(graph))
    code, out, _ = run(capsys, "obstruct", "--graph", str(graph))
    assert code == 1
    assert out.strip() == "not-magic parity-infeasible"

    graph = tmp_path / "p3.graph"
    run(capsys, "graph", "--family", "prism", "--n", "3", "-o", str(graph))
    code, out, _ = run(capsys, "obstruct", "--graph", str(graph))
    assert code == 1
    assert out.strip() == "not-magic theorem1 r=3 order=6"

    graph = tmp_path / "c4.graph"
    run(capsys, "graph", "--family", "cycle", "--n", "4", "-o", str(graph))
    code, out, _ = run(capsys, "obstruct", "--graph", str(graph))
    assert code == 2
    assert out.strip() == "inconclusive"


def test_partition(capsys):
    code, out, _ = run(capsys, "partition", "--N", "10", "--sizes", "2,3,5")
    assert code == 0
    lines = out.strip().splitlines()
    assert [len(line.split()) for line in lines] == [2, 3, 5]
    values = [int(x) for line in lines for x in line.split()]
    assert sorted(values) == [-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]
    for line in lines:
        assert sum(int(x) for x in line.split()) == 0


def test_partition_rejects_impossible_sizes(capsys):
    code, _, err = run(capsys, "partition", "--N", "7", "--sizes", "3,4")
    assert code == 2
    assert "error:" in err


def test_partition_rejects_malformed_sizes():
    with pytest.raises(SystemExit) as exit_info:
        main(["partition", "--N", "6", "--sizes", "3,x"])
    assert exit_info.value.code == 2


def test_table(tmp_path, capsys):
    certs = tmp_path / "certs"
    code, out, _ = run(capsys, "table", "--max-m", "3", "--max-n", "3",
                       "--search-limit", "9", "--cert-dir", str(certs))
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["family", "m", "n", "order", "status", "mu", "method", "nodes", "time_ms"]
    assert len(rows) == 10
    by_cell = {(r[1], r[2]): r for r in rows[1:]}
    assert by_cell[("2", "3")][4] == "not-magic"
    assert by_cell[("3", "3")][4] == "magic"
    assert by_cell[("3", "3")][6] == "search"
    # every magic cell wrote a graph plus certificate pair that re-verifies
    magic_cells = [(r[1], r[2]) for r in rows[1:] if r[4] == "magic"]
    assert magic_cells
    for m, n in magic_cells:
        stem = certs / f"kmokn-{m}-{n}"
        graph_file = stem.with_suffix(".graph")
        cert_file = stem.with_suffix(".cert")
        assert graph_file.exists() and cert_file.exists()
        code, out, _ = run(capsys, "verify", "--graph", str(graph_file),
                           "--cert", str(cert_file))
        assert code == 0


def test_table_respects_search_limit(capsys):
    code, out, _ = run(capsys, "table", "--max-m", "3", "--max-n", "3",
                       "--search-limit", "4")
    rows = list(csv.reader(io.StringIO(out)))
    by_cell = {(r[1], r[2]): r for r in rows[1:]}
    assert by_cell[("3", "3")][4] == "unknown"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dmagic", "decide", "--family", "kmokn", "--m", "4", "--n", "3"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "magic case1 mu=6"


def test_console_script_entry_point():
    proc = subprocess.run(["dmagic", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "dmagic 0.1.0"


def test_certificate_parse_of_cli_output(tmp_path, capsys):
    cert = tmp_path / "k7.cert"
    graph = tmp_path / "k7.graph"
    run(capsys, "construct", "--family", "complete", "--n", "7",
        "--cert-out", str(cert), "--graph-out", str(graph))
    parsed = parse_certificate(cert.read_text())
    assert parsed.order == 7
    assert parsed.mu == 2
