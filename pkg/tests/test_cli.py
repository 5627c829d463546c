from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from conftest import hypergraphs
from tokengame.cli import argv_from_report, run_command
from tokengame.core import GameSpec, Rule
from tokengame.oracle import minimax_oracle
from tokengame.sliding import fig8_instance
from tokengame.textio import format_board, format_graph


def run(argv, stdin: str | None = None, monkeypatch=None) -> tuple[int, str]:
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    buf = io.StringIO()
    code = run_command(argv, buf)
    return code, buf.getvalue()


def run_json(argv, **kw) -> dict:
    code, out = run(argv + ["--json"], **kw)
    assert code == 0, out
    return json.loads(out)


@pytest.fixture
def triangle_edge(tmp_path):
    p = tmp_path / "tri.txt"
    p.write_text("vertices 3\nedge 0 1 2\n")
    return str(p)


@pytest.fixture
def fig8(tmp_path):
    g, D = fig8_instance()
    p = tmp_path / "fig8.graph"
    p.write_text(format_graph(g, D))
    return str(p)


# -- solve / oracle ------------------------------------------------------------

def test_single_triangle_edge_is_breaker(triangle_edge):
    rep = run_json(["solve", "--a", "3", "--b", "1", triangle_edge])
    assert rep["result"]["winner"] == "breaker"
    assert rep["stats"]["states"] > 0 and rep["stats"]["millis"] >= 0


def test_gen_biggap_piped_into_solve(monkeypatch):
    code, board = run(["gen", "biggap", "--k", "4", "--n", "9"])
    assert code == 0
    rep = run_json(["solve", "--a", "4", "--b", "star", "-"], stdin=board, monkeypatch=monkeypatch)
    assert rep["input"] == "-"
    assert rep["result"]["winner"] == "maker" and rep["result"]["distance"] == 5


def test_pipeline_through_the_module_entry_point():
    gen = subprocess.run([sys.executable, "-m", "tokengame", "gen", "nunchaku", "--L", "2"],
                         capture_output=True, text=True, check=True)
    solve = subprocess.run([sys.executable, "-m", "tokengame", "solve", "--a", "3", "--b", "star", "-"],
                           input=gen.stdout, capture_output=True, text=True)
    assert solve.returncode == 0
    assert "winner    maker" in solve.stdout


def test_human_report_lines(triangle_edge):
    code, out = run(["solve", "--a", "3", "--b", "1", triangle_edge])
    assert code == 0 and "winner    breaker" in out and "game" in out


@settings(max_examples=25)
@given(hypergraphs(n_max=5, m_max=3))
def test_star_star_matches_oracle(h):
    import tempfile

    with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
        f.write(format_board(h))
    rep = run_json(["solve", "--a", "star", "--b", "star", f.name])
    assert rep["result"]["winner"] == minimax_oracle(h, GameSpec(h.n, h.n)).name.lower()
    orc = run_json(["oracle", "--a", "star", "--b", "star", f.name])
    assert orc["result"]["winner"] == rep["result"]["winner"]


def test_compress_and_sliding_flags(tmp_path):
    p = tmp_path / "b.txt"
    p.write_text("vertices 4\nedge 0 1\nedge 1 2\nedge 2 3\n")
    plain = run_json(["solve", "--a", "2", "--b", "star", str(p)])
    comp = run_json(["solve", "--a", "2", "--b", "star", "--compress", str(p)])
    assert plain["result"]["winner"] == comp["result"]["winner"]
    assert plain["result"]["distance"] == comp["result"]["distance"]
    sl = run_json(["solve", "--a", "1", "--b", "1", "--sliding", str(p)])
    assert sl["params"]["sliding"] is True


# -- JSON round trip -----------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["solve", "--a", "2", "--b", "star", "--compress"],
    ["oracle", "--a", "1", "--b", "2", "--sliding"],
    ["theta"],
    ["tau"],
    ["reduce", "--a", "2", "--seed", "4"],
    ["arena", "--maker", "random", "--breaker", "optimal", "--a", "2", "--b", "1",
     "--max-rounds", "9", "--param", "seed=5"],
])
def test_report_reruns_to_the_same_result(argv, tmp_path):
    p = tmp_path / "board.txt"
    p.write_text("vertices 5\nedge 0 1 2\nedge 1 3\nedge 2 3 4\n")
    first = run_json(argv + [str(p)])
    again = run_json(argv_from_report(first))
    assert again["result"] == first["result"]
    assert again["params"] == first["params"]


def test_gen_report_reruns(tmp_path):
    first = run_json(["gen", "random", "--n", "7", "--m", "4", "--seed", "12"])
    again = run_json(argv_from_report(first))
    assert again["result"]["board"] == first["result"]["board"]


def test_ed_reports_rerun(fig8):
    for cmd in ("ed-solve", "ed-check", "ed-reduce"):
        first = run_json([cmd, fig8])
        assert run_json(argv_from_report(first))["result"] == first["result"]


# -- gen -----------------------------------------------------------------------

@pytest.mark.parametrize("argv,n", [
    (["nunchaku", "--L", "3"], 7),
    (["necklace", "--L", "4"], 8),
    (["diamond-nunchaku", "--n", "9"], 9),
    (["k-vs-1", "--k", "3"], 5),
    (["biggap", "--k", "4", "--n", "11"], 11),
    (["bigtheta", "--N", "2"], 20),
    (["random", "--n", "6", "--m", "3", "--k", "3"], 6),
])
def test_gen_families(argv, n):
    code, out = run(["gen"] + argv)
    assert code == 0 and out.startswith(f"vertices {n}\n")


def test_gen_bigtheta_emits_its_pairing():
    code, out = run(["gen", "bigtheta", "--N", "2"])
    assert sum(1 for line in out.splitlines() if line.startswith("pair ")) == 7


def test_gen_seed_reproducible_and_seed_sensitive():
    a = run(["gen", "random", "--n", "8", "--m", "5", "--seed", "1"])[1]
    b = run(["gen", "random", "--n", "8", "--m", "5", "--seed", "1"])[1]
    c = run(["gen", "random", "--n", "8", "--m", "5", "--seed", "2"])[1]
    assert a == b and a != c


def test_gen_writes_file(tmp_path):
    out = tmp_path / "n.txt"
    code, msg = run(["gen", "nunchaku", "--L", "2", "-o", str(out)])
    assert code == 0 and "wrote" in msg and out.read_text().startswith("vertices 5")


# -- thresholds, reduce, arena -------------------------------------------------

def test_theta_and_tau(tmp_path):
    p = tmp_path / "path.txt"
    p.write_text("vertices 3\nedge 0 1\nedge 1 2\n")
    assert run_json(["theta", str(p)])["result"]["theta"] == 2
    assert run_json(["tau", str(p)])["result"]["tau"] == 2


def test_theta_infinite_is_reported_as_inf(triangle_edge):
    assert run_json(["theta", triangle_edge])["result"]["theta"] == "inf"


def test_reduce_trace(tmp_path):
    code, board = run(["gen", "k-vs-1", "--k", "7"])
    p = tmp_path / "k7.txt"
    p.write_text(board)
    rep = run_json(["reduce", "--a", "7", str(p)])
    assert rep["result"]["winner"] == "maker" and len(rep["result"]["trace"]) == 3


def test_arena_dichotomy(tmp_path):
    p = tmp_path / "nun.txt"
    p.write_text(run(["gen", "nunchaku", "--L", "4"])[1])
    rep = run_json(["arena", "--maker", "dichotomy", "--breaker", "optimal", "--param", "L=4", str(p)])
    assert rep["result"]["verdict"] == "maker-win"
    assert rep["result"]["rounds"] == 3


def test_arena_pairing_breaker_uses_file_pairs(tmp_path):
    p = tmp_path / "pairs.txt"
    p.write_text("vertices 4\nedge 0 1\nedge 2 3\npair 0 1\npair 2 3\n")
    rep = run_json(["arena", "--maker", "random", "--breaker", "pairing", "--param", "seed=3",
                    "--max-rounds", "30", str(p)])
    assert rep["result"]["verdict"] == "breaker-survives"


# -- domination ----------------------------------------------------------------

def test_ed_check_fig8(fig8):
    rep = run_json(["ed-check", fig8])
    assert rep["result"]["equivalent"] is True


def test_ed_reduce_output_solves_to_the_same_side(fig8, tmp_path, monkeypatch):
    out = tmp_path / "red.txt"
    assert run(["ed-reduce", fig8, "-o", str(out)])[0] == 0
    text = out.read_text()
    assert text.startswith("# play as the (1,2) sliding game")
    solved = run_json(["solve", "--a", "1", "--b", "2", "--sliding", str(out)])
    ed = run_json(["ed-solve", fig8])
    assert (solved["result"]["winner"] == "maker") == (ed["result"]["winner"] == "attacker")


# -- errors and exit codes -----------------------------------------------------

def test_usage_errors_exit_2(triangle_edge, capsys):
    assert run(["solve", "--a", "zero", "--b", "1", triangle_edge])[0] == 2
    assert "--a" in capsys.readouterr().err
    assert run(["solve", "--b", "1", triangle_edge])[0] == 2
    assert run(["frobnicate"])[0] == 2
    assert run(["gen", "biggap", "--k", "4"])[0] == 2
    assert "--n" in capsys.readouterr().err


def test_file_errors_name_path_and_line(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("vertices 3\nedge 0 7\n")
    assert run(["solve", "--a", "1", "--b", "1", str(p)])[0] == 2
    err = capsys.readouterr().err
    assert str(p) in err and "2" in err
    assert run(["solve", "--a", "1", "--b", "1", str(tmp_path / "missing.txt")])[0] == 2


def test_threshold_rejects_placed_tokens(tmp_path, capsys):
    p = tmp_path / "t.txt"
    p.write_text("vertices 3\nedge 0 1\nmaker 0\n")
    assert run(["theta", str(p)])[0] == 2


def test_state_cap_exit_3(monkeypatch, tmp_path, capsys):
    p = tmp_path / "big.txt"
    p.write_text(run(["gen", "biggap", "--k", "4", "--n", "9"])[1])
    monkeypatch.setenv("TOKENGAME_STATE_CAP", "50")
    assert run(["solve", "--a", "4", "--b", "star", str(p)])[0] == 3
    assert "scale cap" in capsys.readouterr().err


def test_bad_cap_override_is_a_usage_error(monkeypatch, triangle_edge):
    monkeypatch.setenv("TOKENGAME_STATE_CAP", "lots")
    assert run(["solve", "--a", "1", "--b", "1", triangle_edge])[0] == 2


def test_ed_reduce_needs_guards(tmp_path):
    p = tmp_path / "g.graph"
    p.write_text("vertices 2\nedge 0 1\n")
    assert run(["ed-reduce", str(p)])[0] == 2
    assert run(["ed-solve", str(p), "--json"])[0] == 0


def test_sliding_rule_reaches_solver(tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("vertices 3\nedge 0 2\nmaker 0\nbreaker 2\n")
    rep = run_json(["solve", "--a", "1", "--b", "1", "--sliding", str(p)])
    from tokengame.textio import parse_board

    b = parse_board(p.read_text())
    w = minimax_oracle(b.hypergraph, GameSpec(1, 1, Rule.SLIDING), b.position)
    assert rep["result"]["winner"] == w.name.lower()
