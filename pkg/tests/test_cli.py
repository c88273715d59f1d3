# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

import glob
import json
import os

import pytest
import ruamel.yaml as yaml

from howefock.cli import preprocess_argv, run
from howefock.commands.oracle.oracle import parse_checks
from howefock.core import ContextError

ONES = ["--m", "1", "--n", "1", "--p", "1", "--q", "1", "--d", "2"]
CONFIG_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "config", "oracle")


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_preprocess_argv():
    argv = ["lr", "--lambda", "-1,-1", "--mu", "0,-1", "--nu", "--m", "1"]
    assert preprocess_argv(argv) == ["lr", "--lambda=-1,-1", "--mu=0,-1", "--nu", "--m", "1"]


def test_lr(capsys):
    assert call(capsys, "lr", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1") == (0, "2", "")


def test_lr_generalized(capsys):
    code, out, _ = call(capsys, "lr", "--lambda", "0,-1", "--mu", "1,0", "--nu", "-1,-1")
    assert (code, out) == (0, "1")


def test_lr_json(capsys):
    code, out, _ = call(capsys, "lr", "--lambda", "2,1", "--mu", "1", "--nu", "1,1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"lambda": [2, 1], "mu": [1], "nu": [1, 1], "value": "1"}


def test_usage_errors(capsys):
    assert call(capsys, "--m", "1")[0] == 2
    assert call(capsys, "frobnicate")[0] == 2
    assert call(capsys, "lr", "--format", "xml")[0] == 2


def test_domain_error_exits_one(capsys):
    code, out, err = call(capsys, "branch", *ONES, "--lambda", "2,2", "--bound", "2")
    assert code == 1 and out == ""
    assert "error:" in err


def test_missing_trunc(capsys):
    code, _, err = call(capsys, "char", "--kind", "W", "--m", "1", "--d", "1", "--lambda", "1")
    assert code == 1 and "--trunc" in err


def test_char_W_json(capsys):
    code, out, _ = call(capsys, "char", "--kind", "W", "--m", "1", "--n", "1", "--d", "1", "--lambda", "2", "--trunc", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["vars"] == ["x1", "eta1"]
    assert [term["exp"] for term in payload["terms"]] == [[2, 0], [1, 1]]


def test_char_dual_text(capsys):
    code, out, _ = call(capsys, "char", "--kind", "dual", "--p", "1", "--q", "1", "--d", "1", "--lambda", "1")
    assert (code, out) == (0, "y1^-1 + y1^-2*zeta1")


def test_schur(capsys):
    assert call(capsys, "schur", "--lambda", "2,1", "--k", "2")[:2] == (0, "x1^2*x2 + x1*x2^2")
    code, out, _ = call(capsys, "schur", "--lambda", "2,1", "--mu", "1", "--k", "2", "--trunc", "2")
    assert (code, out) == (0, "x1^2 + 2*x1*x2 + x2^2 + O(deg 3)")


def test_hookschur(capsys):
    code, out, _ = call(capsys, "hookschur", "--m", "1", "--n", "1", "--lambda", "2", "--method", "tableau")
    assert (code, out) == (0, "x1^2 + x1*y1")


def test_verify_json(capsys):
    code, out, _ = call(capsys, "verify", *ONES, "--lambda", "1,-1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["matches_Lambda"] is True
    assert payload["Lambda"] == [-2, 1, 1, 0]


def test_verify_kernel(capsys):
    code, out, _ = call(capsys, "verify", *ONES, "--degree", "2")
    assert code == 0
    assert out.splitlines() == [
        "degree 0: kernel 1, labels 1",
        "degree 1: kernel 2, labels 2",
        "degree 2: kernel 5, labels 5",
    ]


def test_tensor_json(capsys):
    code, out, _ = call(capsys, "tensor", *ONES, "--mu", "1", "--nu", "1", "--d_max", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert [row["label"] for row in payload["entries"]] == [[1, 1], [2, 0], [3, -1], [4, -2]]
    assert payload["complete"] is False


def test_branch_text(capsys):
    code, out, _ = call(capsys, "branch", "--m", "2", "--p", "2", "--d", "2", "--lambda", "1,0", "--bound", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert lines[-1] == "bound 2, incomplete"


def test_oracle_passes(capsys):
    code, out, _ = call(capsys, "oracle", "--m", "1", "--n", "1", "--d", "2", "--trunc", "3", "--checks", "cauchy,hookschur,lr")
    assert code == 0
    assert out.splitlines() == ["cauchy: pass", "hookschur: pass", "lr: pass"]


def test_oracle_json(capsys):
    code, out, _ = call(capsys, "oracle", "--m", "1", "--d", "1", "--trunc", "3", "--checks", "cauchy", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["checks"]["cauchy"]["first_difference"] is None
    assert "time" not in payload["checks"]["cauchy"]


def test_oracle_unknown_check(capsys):
    code, _, err = call(capsys, "oracle", "--m", "1", "--d", "1", "--trunc", "2", "--checks", "cauchy,nope")
    assert code == 1 and "nope" in err


def test_yaml_config(tmp_path, capsys):
    config = tmp_path / "lr.yaml"
    config.write_text("command: lr\nlambda: [3, 2, 1]\nmu: [2, 1]\nnu: [2, 1]\n", encoding="utf-8")
    assert call(capsys, "--c", str(config)) == (0, "2", "")


def test_missing_config_file(tmp_path, capsys):
    assert call(capsys, "lr", "--c", str(tmp_path / "missing.yaml"))[0] == 2


def test_parse_checks():
    assert parse_checks("cauchy, lr") == ["cauchy", "lr"]
    assert parse_checks(["howe"]) == ["howe"]
    with pytest.raises(ContextError):
        parse_checks("")


@pytest.mark.parametrize("path", sorted(glob.glob(os.path.join(CONFIG_DIR, "*.yaml"))))
def test_shipped_configs(path):
    with open(path, "r", encoding="utf-8") as f:
        config = yaml.YAML(typ="rt").load(f.read())
    assert config["command"] == "oracle"
    assert parse_checks(config["checks"])
    assert config["save_name"] == os.path.splitext(os.path.basename(path))[0]
    assert config["m"] + config["n"] + config["p"] + config["q"] > 0


def test_save_dir_log_is_not_duplicated(tmp_path, capsys):
    argv = ["lr", "--lambda", "2,1", "--mu", "1", "--nu", "1,1", "--save_dir", str(tmp_path), "--log_level", "INFO"]
    assert call(capsys, *argv)[:2] == (0, "1")
    assert call(capsys, *argv)[:2] == (0, "1")
    text = (tmp_path / "howe" / "log.txt").read_text(encoding="utf-8")
    assert text.count("[lr] arguments:") == 2


@pytest.mark.slow
@pytest.mark.parametrize("path", sorted(glob.glob(os.path.join(CONFIG_DIR, "*.yaml"))))
def test_shipped_configs_pass(path, tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    code, out, err = call(capsys, "--c", path)
    assert code == 0, err
    assert all(line.endswith(": pass") for line in out.splitlines())
