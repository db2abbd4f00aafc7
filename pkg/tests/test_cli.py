import json

import pytest

from planaraut import families
from planaraut.cli import main
from planaraut.graph import build_graph, dump_edge_list, parse_edge_list


@pytest.fixture
def write_graph(tmp_path):
    def write(g, name="g.txt"):
        p = tmp_path / name
        p.write_text(dump_edge_list(g))
        return str(p)
    return write


def test_analyze_cube_json(write_graph, capsys):
    assert main(["analyze", write_graph(families.cube()), "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["group"] == "xC2(S(4))" and d["order"] == "48"


def test_analyze_output_is_stable(write_graph, capsys):
    path = write_graph(families.nested(16))
    main(["analyze", path, "--json"])
    first = capsys.readouterr().out
    main(["analyze", path, "--json"])
    assert capsys.readouterr().out == first


def test_verify_path(write_graph, capsys):
    assert main(["verify", write_graph(families.path(4))]) == 0
    assert "order: 2" in capsys.readouterr().out


def test_not_planar_exit_code(write_graph):
    import networkx as nx

    assert main(["analyze", write_graph(families.from_networkx(nx.complete_graph(5)))]) == 2


def test_usage_errors(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("p graph 2 1\ne 0 x\n")
    assert main(["analyze", str(bad)]) == 1
    assert main(["analyze", str(tmp_path / "missing.txt")]) == 1


def test_oracle_command(write_graph, capsys):
    assert main(["oracle", write_graph(families.cycle(5)), "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["count"] == 10 and len(d["automorphisms"]) == 10


def test_oracle_too_large(write_graph):
    assert main(["oracle", write_graph(families.dodecahedron())]) == 1


@pytest.mark.parametrize("fmt", ["text", "dot", "colors"])
def test_reduce_formats(write_graph, capsys, fmt):
    assert main(["reduce", write_graph(families.nested(16)), "--format", fmt]) == 0
    out = capsys.readouterr().out
    if fmt == "dot":
        assert out.startswith("digraph reduction {")
    elif fmt == "colors":
        assert len(json.loads(out)) == 3
    else:
        assert out.startswith("level 0:")


def test_realize_emits_edge_list(capsys):
    assert main(["realize", "wr(S(2),S(3))"]) == 0
    out = capsys.readouterr().out
    assert "c predicted order 48" in out
    g = parse_edge_list(out)
    assert g.n > 0


def test_realize_with_seed(capsys):
    assert main(["realize", "S(2)", "--seed-graph", "cube"]) == 0
    assert "c predicted order 196608" in capsys.readouterr().out


def test_realize_syntax_error(capsys):
    assert main(["realize", "S("]) == 1


def test_bench_table(capsys):
    assert main(["bench", "--n", "50,100"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("backend:") and len(lines) == 4


def test_verify_reports_mismatch(write_graph, monkeypatch, capsys):
    import planaraut.cli as cli

    real = cli.analyze

    def wrong(g):
        rep = real(g)
        rep.order += 1
        return rep

    monkeypatch.setattr(cli, "analyze", wrong)
    assert main(["verify", write_graph(build_graph([(0, 1), (1, 2), (2, 0)]))]) == 3
    assert "MISMATCH" in capsys.readouterr().out
