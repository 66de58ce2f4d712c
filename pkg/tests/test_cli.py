import json

import pytest
from click.testing import CliRunner

from corpus import ALL, d1_matrices, ident
from lrtriples.cli import main
from lrtriples.linalg import Matrix, tau


@pytest.fixture
def run(tmp_path):
    runner = CliRunner()

    def go(*args, input=None):
        return runner.invoke(main, [str(a) for a in args], input=input, catch_exceptions=False)
    return go


def write(tmp_path, name, mats, field=None):
    doc = {k: m.to_json() for k, m in zip("ABC", mats)}
    if field:
        doc["field"] = field
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return path


def test_construct_nbg(run, tmp_path):
    out = tmp_path / "t.json"
    res = run("construct", "nbg:d=2,q=2", "--field", "q", "--out", out)
    assert res.exit_code == 0
    doc = json.loads(out.read_text())
    assert doc["derived"]["phi"] == ["-3/2", "-3"]


def test_construct_weyl_gf3(run):
    res = run("construct", "weyl:d=2", "--field", "gfp:3")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["field"] == {"kind": "gfp", "p": 3} and doc["derived"]["phi"] == ["1", "2"]


@pytest.mark.parametrize("args", [
    ("construct", "nbg:d=2,q=1", "--field", "q"),
    ("construct", "nbwp:d=2,j=0", "--field", "q"),
    ("construct", "nope:d=2"),
    ("construct", "nbg:d=2,q=2", "--field", "gfp:8"),
])
def test_construct_bad_input(run, args):
    assert run(*args).exit_code == 2


def test_recognize_d1(run, tmp_path):
    res = run("recognize", write(tmp_path, "d1.json", d1_matrices()))
    assert res.exit_code == 0
    assert res.output.splitlines()[0] == "LR triple, d=1, nonbipartite, normalized"
    assert "phi: -1" in res.output


def test_recognize_trivial(run, tmp_path):
    Z = Matrix.zero(1)
    res = run("recognize", write(tmp_path, "z.json", (Z, Z, Z)))
    assert res.exit_code == 0 and res.output.startswith("LR triple, trivial")


def test_recognize_rejects(run, tmp_path):
    T = tau(1)
    res = CliRunner().invoke(main, ["recognize", str(write(tmp_path, "t.json", (T, T, T)))])
    assert res.exit_code == 1
    assert "FlagNotRaised" in res.stderr


def test_malformed_input(run, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("recognize", bad).exit_code == 2
    assert run("recognize", tmp_path / "missing.json").exit_code == 2
    A, B, C = d1_matrices()
    assert run("recognize", write(tmp_path, "m.json", (A, B, Matrix.zero(3)))).exit_code == 2


def test_classify(run, tmp_path):
    out = tmp_path / "n.json"
    run("construct", "nbng:d=4,t=2", "--out", out)
    assert run("classify", out).output.strip() == "nbng:d=4,t=2"
    Z = Matrix.zero(1)
    assert run("classify", write(tmp_path, "z.json", (Z, Z, Z))).output.strip() == "trivial:d=0"
    run("construct", "b:d=4,t=2,rho0=1,rho0p=2", "--out", out)
    assert run("classify", out).output.strip() == "b:d=4,t=2,rho0=1,rho0p=2,rho0pp=-1/4"


def test_classify_reports_scaling(run, tmp_path):
    A, B, C = d1_matrices()
    res = run("classify", write(tmp_path, "s.json", (A.scale(2), B, C)))
    lines = res.output.splitlines()
    assert res.exit_code == 0 and lines[0].startswith("scaling: ") and lines[1] == "d1:d=1"


def test_verify_cycle_on_d1(run, tmp_path):
    res = run("verify", write(tmp_path, "d1.json", d1_matrices()), "--suite", "cycle")
    assert res.exit_code == 0
    assert "twelve-cycle scalar: 1" in res.output.splitlines()


def test_verify_detects_corrupted_derived_block(run, tmp_path):
    out = tmp_path / "t.json"
    run("construct", "nbg:d=3,q=2", "--out", out)
    doc = json.loads(out.read_text())
    doc["derived"]["phi"][1] = "7"
    out.write_text(json.dumps(doc))
    res = CliRunner().invoke(main, ["verify", str(out), "--suite", "data"])
    assert res.exit_code == 1
    assert "derived.phi" in res.stderr
    res = CliRunner().invoke(main, ["recognize", str(out)])
    assert res.exit_code == 1


def test_verify_module_q_option(run, tmp_path):
    out = tmp_path / "b2.json"
    run("construct", "b2:d=2,rho0=1,rho0p=1,rho0pp=-1", "--field", "gfp:13", "--out", out)
    res = run("verify", out, "--suite", "module", "--q", "5")
    assert res.exit_code == 0 and "identities hold" in res.output


def test_analyze(run, tmp_path):
    out = tmp_path / "t.json"
    run("construct", "b2:d=2,rho0=1,rho0p=1,rho0pp=-1", "--out", out)
    doc = json.loads(run("analyze", out).output)
    assert doc["derived"]["centralizer_dim"] == 2
    assert doc["derived"]["rho"] == [["1", "1"], ["1", "1"], ["-1", "-1"]]


@pytest.mark.parametrize("case", ALL[::3], ids=ident)
def test_round_trip_and_verify(run, tmp_path, case):
    text, field = case
    out = tmp_path / "t.json"
    args = ["construct", text, "--out", out] + (["--field", field] if field else [])
    assert run(*args).exit_code == 0
    assert run("recognize", out).exit_code == 0
    again = run("export-data", out)
    assert again.output == out.read_text()
    res = run("verify", out)
    assert res.exit_code == 0, res.output
