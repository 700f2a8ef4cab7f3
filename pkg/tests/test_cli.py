import json
import subprocess
import sys
from pathlib import Path

import pytest

from orbitpoly import cli
from orbitpoly.errors import ConsistencyError

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
POSETS = sorted(p.name[: -len(".poset.json")] for p in (FIXTURES / "posets").glob("*.poset.json"))
GRAPHS = sorted(p.name[: -len(".graph.json")] for p in (FIXTURES / "graphs").glob("*.graph.json"))


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(data if isinstance(data, str) else json.dumps(data))
    return path


@pytest.fixture
def antichain2(tmp_path):
    return write(tmp_path, "antichain2.json", {"elements": ["x1", "x2"], "relations": []})


@pytest.fixture
def swap(tmp_path):
    return write(tmp_path, "swap.json", {"degree": 2, "generators": ["(x1 x2)"]})


def test_eval_falling_factorial(capsys):
    code, out = run(capsys, "eval", "--coeffs", "0,2,-3,1", "--at", "-1")
    assert code == 0 and out["value"] == "-6/1"


def test_orbital_order_poly_antichain(capsys, antichain2, swap):
    code, out = run(capsys, "orbital-order-poly", antichain2, "--group", swap)
    assert code == 0
    assert out["polynomial"] == {"degree": 2, "coefficients": ["0/1", "1/2", "1/2"]}
    assert [r["formula"] for r in out["values"]] == ["1/1", "3/1", "6/1"]


def test_orbital_order_poly_verify(capsys, antichain2, swap):
    code, out = run(capsys, "orbital-order-poly", antichain2, "--group", swap, "--verify", "--max-n", 5)
    assert code == 0 and out["verified"]
    assert all(r["pass"] for r in out["values"]) and len(out["values"]) == 5


def test_order_poly(capsys, tmp_path):
    chain = write(tmp_path, "c.json", {"elements": ["a", "b"], "relations": [["a", "b"]]})
    code, out = run(capsys, "order-poly", chain, "--strict")
    assert code == 0 and [r["value"] for r in out["values"]] == ["0/1", "1/1", "3/1"]


@pytest.mark.parametrize("name", POSETS)
def test_bundled_poset_fixtures_verify(capsys, name):
    poset = FIXTURES / "posets" / f"{name}.poset.json"
    group = FIXTURES / "posets" / f"{name}.group.json"
    code, out = run(capsys, "verify-reciprocity", poset, "--group", group, "--max-n", 3)
    assert code == 0 and out["passed"]


@pytest.mark.parametrize("name", GRAPHS)
def test_bundled_graph_fixtures_verify(capsys, name):
    graph = FIXTURES / "graphs" / f"{name}.graph.json"
    group = FIXTURES / "graphs" / f"{name}.group.json"
    code, out = run(capsys, "verify-graph-reciprocity", graph, "--group", group, "--max-n", 2)
    assert code == 0 and out["passed"]
    code, out = run(capsys, "chromatic", graph, "--group", group, "--verify", "--max-n", 3)
    assert code == 0 and out["verified"] and out["interpolant_matches"]


def test_chromatic_even_and_acyclic(capsys):
    graph = FIXTURES / "graphs" / "triangle-D3.graph.json"
    group = FIXTURES / "graphs" / "triangle-D3.group.json"
    code, out = run(capsys, "chromatic", graph, "--group", group, "--even", "--verify")
    assert code == 0 and out["verified"]
    code, out = run(capsys, "acyclic-orientations", graph)
    assert code == 0 and out["count"] == 6


def test_trivial_group_default(capsys):
    graph = FIXTURES / "graphs" / "triangle-trivial.graph.json"
    code, out = run(capsys, "chromatic", graph)
    assert out["polynomial"]["coefficients"] == ["0/1", "2/1", "-3/1", "1/1"]


def test_output_is_deterministic(capsys, antichain2, swap):
    argv = ["verify-reciprocity", str(antichain2), "--group", str(swap)]
    cli.main(argv)
    first = capsys.readouterr().out
    cli.main(argv)
    assert capsys.readouterr().out == first


def test_error_exit_codes(capsys, tmp_path, antichain2, swap):
    chain = write(tmp_path, "chain.json", {"elements": ["a", "b"], "relations": [["a", "b"]]})
    chain_swap = write(tmp_path, "cswap.json", {"degree": 2, "generators": ["(a b)"]})
    codes = {}
    codes["malformed"], _ = run(capsys, "order-poly", write(tmp_path, "bad.json", "{oops"))
    codes["unknown"], _ = run(capsys, "orbital-order-poly", antichain2, "--group",
                              write(tmp_path, "g.json", {"degree": 2, "generators": ["(x1 zz)"]}))
    codes["degree"], _ = run(capsys, "orbital-order-poly", antichain2, "--group",
                             write(tmp_path, "g3.json", {"degree": 3, "generators": []}))
    codes["cycle"], _ = run(capsys, "order-poly",
                            write(tmp_path, "cyc.json", {"elements": ["a", "b"], "relations": [["a", "b"], ["b", "a"]]}))
    codes["action"], err = run(capsys, "orbital-order-poly", chain, "--group", chain_swap)
    assert err["witness"] == {"element": "(a b)", "pair": ["a", "b"]}
    codes["budget"], _ = run(capsys, "--budget", 2, "orbital-order-poly", antichain2, "--group", swap, "--verify")
    assert codes == {"malformed": 3, "unknown": 4, "degree": 5, "cycle": 6, "action": 7, "budget": 9}


def test_loop_rejected(capsys, tmp_path):
    loop = write(tmp_path, "loop.json", {"vertices": ["a"], "edges": [["a", "a"]]})
    code, out = run(capsys, "acyclic-orientations", loop)
    assert code == 3 and "loop" in out["message"]


def test_budget_from_environment(capsys, monkeypatch, antichain2, swap):
    monkeypatch.setenv("ORBITPOLY_BUDGET", "2")
    code, _ = run(capsys, "verify-reciprocity", antichain2, "--group", swap)
    assert code == 9


def test_verification_failure_exit_code(capsys, monkeypatch, antichain2, swap):
    monkeypatch.setattr(cli, "orbit_count_oracle", lambda *a, **k: 0)
    code, out = run(capsys, "orbital-order-poly", antichain2, "--group", swap, "--verify")
    assert code == 1 and not out["verified"]


def test_consistency_exit_code(capsys, monkeypatch, antichain2, swap):
    def boom(*a, **k):
        raise ConsistencyError("forced")

    monkeypatch.setattr(cli, "orbital_order_polynomial", boom)
    code, _ = run(capsys, "orbital-order-poly", antichain2, "--group", swap)
    assert code == 8


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        cli.main(["orbital-order-poly"])
    assert info.value.code == 2


def test_module_entry_point(antichain2, swap):
    proc = subprocess.run(
        [sys.executable, "-m", "orbitpoly", "orbital-order-poly", str(antichain2), "--group", str(swap)],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["polynomial"]["degree"] == 2
    assert "ok" in proc.stderr
