import json

import pytest

from pedsolve.cli import run


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_solve_command(tmp_path, capsys):
    graph = write(tmp_path, "c6.txt", "6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n")
    assert run(["solve", graph]) == 0
    out = capsys.readouterr().out
    assert "min_size: 2" in out
    assert "ped_count: 10" in out
    assert "dim_count: 3" in out


def test_solve_weighted_rational(tmp_path, capsys):
    graph = write(tmp_path, "p4.txt", "4\n0 1\n1 2\n2 3\n")
    weights = write(tmp_path, "p4.w", "0 1 1/3\n1 2 2/5\n2 3 4\n")
    assert run(["solve", graph, "--weights", weights]) == 0
    out = capsys.readouterr().out
    assert "min_weight: 2/5" in out


def test_oracle_and_solve_agree(tmp_path, capsys):
    graph = write(tmp_path, "c6.txt", "6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n")
    run(["oracle", graph, "--machine"])
    oracle_out = json.loads(capsys.readouterr().out)
    run(["solve", graph, "--machine"])
    solve_out = json.loads(capsys.readouterr().out)
    assert oracle_out["ped_count"] == solve_out["ped_count"] == 10


def test_machine_mode_is_json(tmp_path, capsys):
    graph = write(tmp_path, "k13.txt", "4\n0 1\n0 2\n0 3\n")
    assert run(["structure", graph, "--machine"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec == {"kind": "complete-bipartite", "r_side": [0], "s_side": [1, 2, 3]}


def test_gen_deterministic(capsys):
    assert run(["gen", "--n", "50", "--seed", "7"]) == 0
    first = capsys.readouterr().out
    assert run(["gen", "--n", "50", "--seed", "7"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert first.splitlines()[1] == "50"


def test_gen_output_is_p6_free(capsys, tmp_path):
    assert run(["gen", "--n", "30", "--seed", "3"]) == 0
    text = capsys.readouterr().out
    graph = write(tmp_path, "gen.txt", text)
    assert run(["check-p6free", graph]) == 0
    assert "p6_free: True" in capsys.readouterr().out


def test_count_commands(tmp_path, capsys):
    graph = write(tmp_path, "c6.txt", "6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n")
    run(["count", graph])
    assert "ped_count: 10" in capsys.readouterr().out
    run(["count-dims", graph])
    assert "dim_count: 3" in capsys.readouterr().out


def test_verify_command(tmp_path, capsys):
    graph = write(tmp_path, "p4.txt", "4\n0 1\n1 2\n2 3\n")
    ped = write(tmp_path, "ped.txt", "1 2\n")
    assert run(["verify", graph, "--ped", ped]) == 0
    out = capsys.readouterr().out
    assert "is_ped: True" in out and "class: dim" in out
    bad = write(tmp_path, "bad.txt", "0 1\n2 3\n")
    run(["verify", graph, "--ped", bad])
    assert "is_ped: False" in capsys.readouterr().out


def test_reduce_command(tmp_path, capsys):
    graph = write(tmp_path, "k3.txt", "3\n0 1\n0 2\n1 2\n")
    assert run(["reduce", graph]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# gadget anchor=0")
    lines = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert lines[0] == "12" and len(lines) == 17  # n line + 16 edges


def test_exit_codes(tmp_path, capsys):
    bad = write(tmp_path, "bad.txt", "3\n0 0\n")
    assert run(["solve", bad]) == 2
    p13 = write(
        tmp_path, "p13.txt",
        "13\n" + "\n".join(f"{i} {i+1}" for i in range(12)) + "\n",
    )
    assert run(["solve", p13]) == 3
    big = write(
        tmp_path, "big.txt",
        "21\n" + "\n".join(f"0 {i}" for i in range(1, 21)) + "\n",
    )
    assert run(["oracle", big]) == 4
    capsys.readouterr()


def test_stdin_input(tmp_path, capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("2\n0 1\n"))
    assert run(["solve"]) == 0
    assert "min_size: 1" in capsys.readouterr().out
