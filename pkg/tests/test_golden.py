"""Byte-exact golden outputs for the CLI.

The generator values inside the goldens are independently pinned by the
unit and acceptance tests; these files additionally freeze formatting,
ordering, and note text so that any output drift shows up as a diff.
"""

import json
from pathlib import Path

from hodgeideals.cli import main

GOLDEN = Path(__file__).parent / "golden"

CUSP_TASK = {"vars": ["x", "y"],
             "divisor": {"components": [{"f": "x^2+y^3", "alpha": "9/10"}]},
             "task": "compute", "k": 2, "method": "auto"}
SNC_TASK = {"vars": ["x", "y"],
            "divisor": {"components": [{"f": "x", "alpha": "3/2"},
                                       {"f": "y", "alpha": "1/2"}]},
            "task": "compute", "k": 1, "method": "auto"}
CERT_TASK = {"vars": ["x", "y"],
             "divisor": {"components": [{"f": "x^2+y^3", "alpha": "4/5"}]},
             "task": "certify", "k": 0,
             "resolution": {"exceptional": [{"a": [2], "b": 1}, {"a": [3], "b": 2},
                                            {"a": [6], "b": 4}],
                            "strict_transform_smooth": True}}


def run(tmp_path, capsys, task, *argv):
    path = tmp_path / "task.json"
    path.write_text(json.dumps(task))
    code = main([*argv, str(path)])
    assert code == 0
    return capsys.readouterr().out


def test_cusp_compute_json_golden(tmp_path, capsys):
    out = run(tmp_path, capsys, CUSP_TASK, "--format", "json", "compute")
    assert out == (GOLDEN / "cusp_compute.json").read_text()


def test_snc_compute_text_golden(tmp_path, capsys):
    out = run(tmp_path, capsys, SNC_TASK, "--format", "text", "compute")
    assert out == (GOLDEN / "snc_compute.txt").read_text()


def test_certify_text_golden(tmp_path, capsys):
    out = run(tmp_path, capsys, CERT_TASK, "--format", "text", "certify")
    assert out == (GOLDEN / "certify_trivial.txt").read_text()
