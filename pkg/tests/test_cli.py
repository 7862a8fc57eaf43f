import json
import math

import pytest

from noneuclid import cli

PI = math.pi


def test_parse_angle():
    assert cli.parse_angle("pi/2") == pytest.approx(PI / 2.0)
    assert cli.parse_angle("2pi/3") == pytest.approx(2.0 * PI / 3.0)
    assert cli.parse_angle("-3pi/4") == pytest.approx(-3.0 * PI / 4.0)
    assert cli.parse_angle("0.5pi") == pytest.approx(PI / 2.0)
    assert cli.parse_angle("1.25") == 1.25
    with pytest.raises(ValueError):
        cli.parse_angle("tau/2")


def test_parse_range():
    assert cli.parse_range("2.0") == [2.0]
    pts = cli.parse_range("1:2:5")
    assert pts == pytest.approx([1.0, 1.25, 1.5, 1.75, 2.0])
    with pytest.raises(ValueError):
        cli.parse_range("1:2")
    with pytest.raises(ValueError):
        cli.parse_range("1:2:0")


def test_volume_json(capsys):
    code = cli.run(["volume", "--alpha", "2pi/3", "--beta", "2pi/3",
                    "--gamma", "3pi/4", "--format", "json", "--no-timing"])
    assert code == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["geometry"] == "spherical"
    assert rec["volume"] == pytest.approx(31.0 * PI * PI / 576.0, abs=1e-7)
    assert set(rec) >= {"geometry", "alpha", "beta", "gamma", "theta", "T",
                        "volume", "err_estimate"}


def test_volume_hyperbolic_nulls(capsys):
    code = cli.run(["volume", "--alpha", "0.4", "--beta", "0.5",
                    "--gamma", "0.6", "--format", "json", "--no-timing"])
    assert code == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["geometry"] == "hyperbolic"
    assert rec["A"] is None and rec["B"] is None and rec["C"] is None


def test_geometry_mismatch(capsys):
    code = cli.run(["volume", "--alpha", "0.4", "--beta", "0.5",
                    "--gamma", "0.6", "--geometry", "spherical"])
    assert code == 2


def test_degrees_round_trip(capsys):
    code = cli.run(["volume", "--alpha", "120", "--beta", "120",
                    "--gamma", "135", "--degrees", "--format", "json",
                    "--no-timing"])
    assert code == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["alpha"] == pytest.approx(2.0 * PI / 3.0)
    assert rec["volume"] == pytest.approx(31.0 * PI * PI / 576.0, abs=1e-7)


def test_deterministic_output(capsys):
    argv = ["volume", "--alpha", "1.9", "--beta", "2.2", "--gamma", "2.5",
            "--format", "csv", "--no-timing"]
    cli.run(argv)
    first = capsys.readouterr().out
    cli.run(argv)
    assert capsys.readouterr().out == first
    assert first.splitlines()[0].startswith("geometry,alpha,beta")


def test_edges_plain(capsys):
    code = cli.run(["edges", "--alpha", "2pi/3", "--beta", "2pi/3",
                    "--gamma", "3pi/4", "--no-timing"])
    assert code == 0
    out = capsys.readouterr().out
    assert "l_alpha" in out and "1.047197551" in out


def test_delta_value(capsys):
    code = cli.run(["delta", "--alpha", "2.0943951", "--theta", "2.3561945",
                    "--format", "json", "--no-timing"])
    assert code == 0
    rec = json.loads(capsys.readouterr().out)
    # pi^2/16 - pi^2/9 up to the truncated inputs
    assert rec["delta"] == pytest.approx(-0.47977245, abs=1e-7)


def test_lobachevsky_value(capsys):
    code = cli.run(["lobachevsky", "--x", "pi/4", "--format", "json",
                    "--no-timing"])
    assert code == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["lobachevsky"] == pytest.approx(0.4579827971, abs=1e-9)


def test_orthoscheme_methods(capsys):
    vols = []
    for method in ("series", "delta", "integral"):
        code = cli.run(["orthoscheme", "--alpha", "0.6", "--beta", "1.3",
                        "--gamma", "0.9", "--method", method,
                        "--format", "json", "--no-timing"])
        assert code == 0
        vols.append(json.loads(capsys.readouterr().out)["volume"])
    assert max(vols) - min(vols) < 1e-9


def test_sweep_csv(capsys):
    code = cli.run(["sweep", "--alpha", "1.8:2.0:3", "--beta", "2pi/3",
                    "--gamma", "2pi/3"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "alpha,beta,gamma,theta,T,volume,err_estimate"
    assert len(lines) == 4


def test_env_tolerance(capsys, monkeypatch):
    monkeypatch.setenv("NONEUCLID_TOL", "1e-6")
    code = cli.run(["delta", "--alpha", "1.0", "--theta", "0.5",
                    "--format", "json", "--no-timing"])
    assert code == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["err_estimate"] < 1e-6
    monkeypatch.setenv("NONEUCLID_TOL", "-1")
    assert cli.run(["delta", "--alpha", "1.0", "--theta", "0.5"]) == 2


def test_domain_error_exit(capsys):
    code = cli.run(["volume", "--alpha", "pi/2", "--beta", "2.0",
                    "--gamma", "2.0"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_usage_error_exit(capsys):
    assert cli.run(["volume", "--alpha", "2.0"]) == 2
    assert cli.run(["nonsense"]) == 2


def test_selfcheck(capsys):
    code = cli.run(["selfcheck", "--seed", "42"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.count("[PASS]") == 9
    assert cli.run(["selfcheck", "--seed", "42", "--tol", "1e-30"]) == 1
