import io
import json
import subprocess
import sys

import pytest

from pbratteli.cli import main
from pbratteli.diagram import floor_cardinality


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_fib_closed_table():
    code, out = run("fib", "--p", "5", "--k", "1", "--pos", "0", "--s", "3..9", "--method", "closed")
    assert code == 0
    values = [int(line.split("\t")[1]) for line in out.splitlines()[1:]]
    assert values == [198, 1470, 9750, 60750, 363750, 2118750, 12093750]


def test_fib_all_methods():
    code, out = run("fib", "--p", "5", "--k", "2", "--pos", "9", "--s", "3", "--method", "all")
    assert code == 0
    assert out.splitlines()[1].split("\t") == ["3", "210", "210", "210", "match"]


def test_fib_bfile():
    code, out = run("fib", "--p", "3", "--k", "0", "--s", "1..4", "--method", "brute", "--format", "bfile")
    assert code == 0
    assert out == "1 1\n2 5\n3 27\n4 117\n"


def test_fib_json_and_threads():
    code, out = run("fib", "--p", "5", "--k", "1", "--pos", "3", "--s", "3..4", "--method", "all",
                    "--format", "json", "--threads", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc[0]["values"] == {"brute": 190, "recur": 190, "closed": 190} and doc[0]["match"]


def test_fib_budget_is_usage_error():
    code, _ = run("fib", "--p", "5", "--k", "0", "--s", "6", "--method", "brute", "--budget", "10")
    assert code == 2


def test_diagram_json():
    code, out = run("diagram", "--p", "3", "--max-floor", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["vertices"]) == sum(floor_cardinality(3, f) for f in range(1, 5)) == 2 + 3 + 9 + 10
    assert list(doc["vertices"][0]) == ["p", "floor", "k", "pos", "size", "leg"]
    assert {"upper", "lower", "block"} == set(doc["edges"][0])


def test_diagram_edge_object():
    _, out = run("diagram", "--p", "5", "--max-floor", "10")
    edges = json.loads(out)["edges"]
    assert {"upper": "p:5/f:10/k:2/l:9", "lower": "p:5/f:9/k:2/l:9",
            "block": {"idx": 9, "m": 0, "n": 100}} in edges
    v = [x for x in json.loads(out)["vertices"] if (x["floor"], x["k"], x["pos"]) == (10, 2, 9)]
    assert v == [{"p": 5, "floor": 10, "k": 2, "pos": 9, "size": 575, "leg": 284}]


def test_diagram_is_deterministic():
    assert run("diagram", "--p", "5", "--max-floor", "6")[1] == run("diagram", "--p", "5", "--max-floor", "6")[1]


def test_diagram_dot():
    code, out = run("diagram", "--p", "3", "--max-floor", "1", "--format", "dot")
    assert code == 0
    assert out.count("[label=") == 2 and "->" not in out


@pytest.mark.parametrize(
    "argv",
    [
        ("diagram", "--p", "4", "--max-floor", "3"),
        ("verify", "--p", "9", "--max-floor", "3"),
        ("gf", "--p", "5", "--k", "0", "--pos", "1"),
        ("diagram", "--p", "3", "--max-floor", "2", "--format", "bfile"),
        ("fib", "--p", "3", "--k", "0", "--s", "2", "--format", "dot"),
        ("fib", "--p", "3", "--k", "0", "--s", "x"),
    ],
)
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_odd_prime_message(capsys):
    main(["diagram", "--p", "4", "--max-floor", "3"], out=io.StringIO())
    assert "p must be an odd prime" in capsys.readouterr().err


@pytest.mark.parametrize("p,f", [(3, 8), (5, 6), (5, 3)])
def test_signbal(p, f):
    assert run("signbal", "--p", str(p), "--max-floor", str(f))[0] == 0


def test_gf():
    code, out = run("gf", "--p", "5", "--k", "1", "--pos", "0", "--terms", "3")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()[2:]]
    assert [r[2] for r in rows] == ["198", "1470", "9750"] and all(r[4] == "match" for r in rows)
    code, out = run("gf", "--p", "3", "--k", "0", "--terms", "1")
    assert code == 0 and out.splitlines()[2].split("\t")[2:] == ["5", "5", "match"]


@pytest.mark.parametrize("p,f", [(3, 10), (5, 8)])
def test_verify(p, f):
    code, out = run("verify", "--p", str(p), "--max-floor", str(f))
    report = json.loads(out)
    assert code == 0 and report["ok"]
    assert len(report["suites"]) >= 10
    assert all(set(s) >= {"name", "checked", "failures"} for s in report["suites"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pbratteli", "fib", "--p", "3", "--k", "0", "--s", "1", "--method", "brute"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.splitlines()[1] == "1\t1"
