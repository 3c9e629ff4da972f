import json
import subprocess
import sys

import pytest

from ggbij.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["count", "--family", "B", "--n", "7"], "3\n"),
        (["count", "--family", "G", "--n", "4", "--j", "2"], "1\n"),
        (["count", "--family", "A", "--n", "0"], "1\n"),
        (["count", "--family", "S", "--n", "4", "--j", "2"], "1\n"),
        (["--format", "json", "count", "--family", "C", "--n", "4"], '{"count": 2}\n'),
        (["count", "--family", "C", "--n", "4", "--format", "json"], '{"count": 2}\n'),
    ],
)
def test_count(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected


def test_count_A_C_equal_sum_over_j(capsys):
    for n in (0, 5, 17, 30):
        totals = {}
        for fam in "ACGS":
            if fam in "AC":
                _, out, _ = run(capsys, "count", "--family", fam, "--n", str(n))
                totals[fam] = int(out)
            else:
                totals[fam] = sum(
                    int(run(capsys, "count", "--family", fam, "--n", str(n), "--j", str(j))[1])
                    for j in range(n + 1)
                )
        assert totals["A"] == totals["G"] and totals["C"] == totals["S"]


def test_list(capsys):
    code, out, _ = run(capsys, "list", "--family", "G", "--n", "7", "--j", "2")
    assert code == 0 and out == '{"parts":[6,1]}\n{"parts":[5,2]}\n'
    code, out, _ = run(capsys, "list", "--family", "S", "--n", "4", "--j", "2")
    assert code == 0 and out == '{"positive":[4,4],"negative":[3,1]}\n'
    code, out, _ = run(capsys, "list", "--family", "G", "--n", "1", "--j", "2")
    assert code == 0 and out == ""
    code, out, _ = run(capsys, "--format", "text", "list", "--family", "G", "--n", "7", "--j", "2")
    assert out == "(6, 1)\n(5, 2)\n"


def test_list_is_line_delimited_json(capsys):
    _, out, _ = run(capsys, "list", "--family", "S", "--n", "30", "--j", "3")
    lines = out.splitlines()
    assert lines and all(set(json.loads(x)) == {"positive", "negative"} for x in lines)


def test_map(capsys, monkeypatch):
    code, out, _ = run(capsys, "map", "--direction", "g", "--j", "2", '{"parts":[3,1]}')
    assert code == 0 and out == '{"positive":[4,4],"negative":[3,1]}\n'
    code, out, _ = run(capsys, "map", "--direction", "h", "--j", "2", '{"positive":[4,4],"negative":[3,1]}')
    assert code == 0 and out == '{"parts":[3,1]}\n'
    code, out, _ = run(capsys, "map", "--direction", "g", "--j", "1",
                       stdin='{"parts":[4]}', monkeypatch=monkeypatch)
    assert code == 0 and out == '{"positive":[4],"negative":[]}\n'


@pytest.mark.parametrize(
    "argv",
    [
        ["map", "--direction", "g", "--j", "2", '{"parts":[4,2]}'],
        ["map", "--direction", "g", "--j", "3", '{"parts":[3,1]}'],
        ["map", "--direction", "h", "--j", "2", '{"positive":[4,4],"negative":[3,3]}'],
    ],
)
def test_map_membership_violation_exits_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["count", "--family", "Z", "--n", "3"],
        ["count", "--family", "A", "--n", "x"],
        ["count", "--family", "A", "--n", "-1"],
        ["count", "--family", "A", "--n", "4", "--j", "1"],
        ["count", "--family", "G", "--n", "4"],
        ["count", "--family", "A", "--n", "201"],
        ["list", "--family", "A", "--n", "4", "--j", "1"],
        ["list", "--family", "G", "--n", "4", "--j", "-1"],
        ["map", "--direction", "g", "--j", "2", '{"parts":[3,1'],
        ["map", "--direction", "g", "--j", "2", '{"parts":[0]}'],
        ["map", "--direction", "g", "--j", "2", '{"positive":[4,4],"negative":[3,1]}'],
        ["map", "--direction", "h", "--j", "2", '{"parts":[3,1]}'],
        ["map", "--direction", "g", "--j", "2", '[3, 1]'],
        ["map", "--direction", "g", "--j", "2", '{"parts":[1.5]}'],
        ["map", "--direction", "x", "--j", "2", '{"parts":[3,1]}'],
        ["verify", "--target", "bijection"],
        ["verify", "--target", "bijection", "--max-n", "-3"],
        ["verify", "--target", "identity", "--order", "501"],
        ["verify", "--target", "identity"],
        ["--format", "yaml", "count", "--family", "A", "--n", "3"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_caps_are_configurable(capsys, monkeypatch):
    code, _, _ = run(capsys, "--n-cap", "300", "count", "--family", "B", "--n", "250")
    assert code == 0
    monkeypatch.setenv("GG_MAX_N", "10")
    code, _, _ = run(capsys, "count", "--family", "B", "--n", "11")
    assert code == 2
    monkeypatch.setenv("GG_MAX_N", "ten")
    code, _, _ = run(capsys, "count", "--family", "B", "--n", "1")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--target", "bijection", "--max-n", "40"],
        ["verify", "--target", "identity", "--order", "100"],
        ["verify", "--target", "identity", "--order", "0"],
    ],
)
def test_verify(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and "OK" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify", "--target", "bijection", "--max-n", "10")
    assert code == 0 and json.loads(out)["ok"] is True


def test_verify_failure_exits_1(capsys, monkeypatch):
    import ggbij.qseries as qs

    monkeypatch.setattr(qs, "count_B", lambda n: 0)
    code, out, _ = run(capsys, "verify", "--target", "identity", "--order", "5")
    assert code == 1 and "FAILED at q^0" in out


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "ggbij", *argv], capture_output=True)


def test_json_output_is_byte_identical_across_runs():
    argv = ["--format", "json", "list", "--family", "S", "--n", "40", "--j", "4"]
    first, second = _cli(*argv), _cli(*argv)
    assert first.returncode == 0 and first.stdout
    assert first.stdout == second.stdout
    argv = ["--format", "json", "verify", "--target", "bijection", "--max-n", "25"]
    assert _cli(*argv).stdout == _cli(*argv).stdout


def test_malformed_stdin_never_tracebacks():
    proc = subprocess.run([sys.executable, "-m", "ggbij", "map", "--direction", "h", "--j", "1"],
                          input=b"\xff\xfe not json", capture_output=True)
    assert proc.returncode == 2
    assert b"Traceback" not in proc.stderr
