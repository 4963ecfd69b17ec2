import io
import json
import subprocess
import sys

import pytest

from polychrome.cli import run


@pytest.fixture
def cli(monkeypatch, capsys):
    def call(argv, stdin=None):
        if stdin is not None:
            text = stdin if isinstance(stdin, str) else json.dumps(stdin)
            monkeypatch.setattr(sys, "stdin", io.StringIO(text))
        code = run(argv)
        cap = capsys.readouterr()
        out = json.loads(cap.out) if cap.out.strip() and not ("--pretty" in argv) else cap.out
        return code, out, cap.err

    return call


TRIANGLE = {"points": [["0", "0"], ["1", "1"], ["2", "0"]]}


class TestCheck:
    def test_aba_violation(self, cli):
        code, out, _ = cli(["check", "aba"], {"n": 3, "edges": [[0, 2], [1]]})
        assert code == 1 and out["witness"]["x"] == 0 and out["witness"]["y"] == 1

    def test_aba_ok(self, cli):
        code, out, _ = cli(["check", "aba"], {"n": 3, "edges": [[0, 1], [1, 2]]})
        assert code == 0 and out["ok"]

    def test_abab_lower(self, cli):
        code, _, _ = cli(["check", "abab-lower"], {"n": 4, "edges": [[0, 2], [1, 3]]})
        assert code == 1

    def test_order_search(self, cli):
        code, out, _ = cli(["order-search"], {"n": 4, "edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]})
        assert code == 1 and out["order"] is None
        code, out, _ = cli(["order-search"], {"n": 3, "edges": [[0, 2], [1]]})
        assert code == 0 and len(out["order"]) == 3


class TestErrors:
    def test_malformed_json(self, cli):
        code, _, err = cli(["check", "aba"], "{not json")
        assert code == 2 and "malformed" in err

    def test_unknown_subcommand(self, cli):
        code, _, err = cli(["frobnicate"])
        assert code == 2 and "usage" in err

    def test_precondition_named(self, cli):
        code, _, err = cli(["color", "-k", "2"], {"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]})
        # the class colorer drops the small edges; generic mode with a trace enforces the size
        assert code == 0
        code, _, err = cli(["color", "-k", "2", "--trace"], {"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]})
        assert code == 2 and json.loads(err)["error"] == "precondition"

    def test_missing_transform_flag(self, cli):
        code, _, err = cli(["transform", "pushback"], {"n": 2, "edges": [[0]]})
        assert code == 2 and "--count" in err

    def test_missing_file(self, cli):
        code, _, _ = cli(["check", "aba", "/nonexistent/file.json"])
        assert code == 2


class TestGenerateAndOracle:
    def test_sharpness_pipeline(self, cli):
        code, inst, _ = cli(["generate", "sharpness", "-k", "2"])
        assert code == 0 and inst["n"] == 3
        code, out, _ = cli(["oracle", "--poly", "-k", "2", "-m", "2"], inst)
        assert code == 1 and out["message"] == "no polychromatic coloring"

    def test_shallow_oracle(self, cli):
        code, inst, _ = cli(["generate", "noshallow", "-k", "4"])
        code, out, _ = cli(["oracle", "--shallow"], inst)
        assert code == 0 and out["min_shallowness"] == 2

    def test_hk(self, cli):
        code, inst, _ = cli(["generate", "hk", "-k", "3"])
        assert code == 0 and inst["n"] == 13 and len(inst["tree"]["labels"]) == 13
        code, _, _ = cli(["check", "abab"], inst)
        assert code == 0


class TestBuildAndColor:
    def test_halfplane_pipeline(self, cli):
        code, inst, _ = cli(["build", "halfplanes"], TRIANGLE)
        assert code == 0 and inst["point_order"] == [0, 1, 2]
        code, out, _ = cli(["color", "--class", "pshp", "-k", "2"], inst)
        assert code == 0 and out["k"] == 2 and len(out["colors"]) == 3

    def test_both_sides(self, cli):
        code, inst, _ = cli(["build", "halfplanes", "--side", "both"], TRIANGLE)
        assert code == 0 and "sides" in inst and "down" in inst["sides"]

    def test_intervals(self, cli):
        code, inst, _ = cli(["build", "intervals"], {"points": ["0", "1", "2"]})
        assert code == 0 and len(inst["edges"]) == 6

    def test_bottomless(self, cli):
        code, inst, _ = cli(["build", "bottomless", "--drop-empty"], {"points": [["0", "0"], ["1", "2"], ["2", "1"]]})
        assert code == 0 and [0, 2] in inst["edges"] and [] not in inst["edges"]

    def test_convex_chain(self, cli):
        geo = dict(TRIANGLE, shape={"kind": "convex_chain", "breakpoints": [["-1", "1"], ["0", "0"], ["1", "1"]]})
        code, inst, _ = cli(["build", "convex-chain"], geo)
        assert code == 0 and [0, 2] not in inst["edges"]

    def test_floats_refused(self, cli):
        code, _, err = cli(["build", "halfplanes"], {"points": [[0.5, 0], [1, 1], [2, 0]]})
        assert code == 2

    def test_balanced_failure_exit(self, cli):
        inst = {"n": 11, "edges": [[7, 8, 9, 10], [1, 6, 7], [1, 5, 7], [4, 5, 6, 7, 9, 10], [1, 2, 4, 7], [0]]}
        code, out, _ = cli(["color", "--balanced", "-k", "4"], inst)
        assert code == 1 and out["balanced"] is False

    def test_trace(self, cli):
        code, out, _ = cli(["color", "-k", "2", "--trace"], {"n": 6, "edges": [[0, 1, 2], [2, 3, 4], [3, 4, 5]]})
        assert code == 0 and out["trace"][0]["hitting"] == [2, 5]


class TestHitTransformVerify:
    def test_hit_reduce(self, cli):
        code, out, _ = cli(["hit", "--reduce"], {"n": 4, "edges": [[0, 1], [0, 1, 2], [2, 3], []]})
        assert code == 0 and out["edges_kept"] == [0, 2] and out["bound"] == 2

    def test_hit_oracle(self, cli):
        code, out, _ = cli(["hit", "--oracle"], {"n": 3, "edges": [[0, 1], [1, 2]]})
        assert out["min_shallowness"] == 1

    def test_transforms(self, cli):
        code, out, _ = cli(["transform", "dual"], {"n": 2, "edges": [[0], [0, 1], [1]]})
        assert code == 0 and out["base_edges"] == [[0, 1], [1, 2]]
        code, out, _ = cli(["transform", "pushback", "--count", "1"], {"n": 2, "edges": [[0]]})
        assert out["order"] == [1, 0] and out["x_set"] == [1]
        code, out, _ = cli(["transform", "pushfront", "--edge", "0"], {"n": 3, "edges": [[1], [1, 2]]})
        assert out["order"] == [1, 0, 2]
        code, out, _ = cli(["transform", "polar", "--vertex", "0"], {"n": 2, "edges": [[1]]})
        assert code == 0 and out["edge_source"] == [1]

    def test_pushfront_rejects_non_aba(self, cli):
        code, _, _ = cli(["transform", "pushfront", "--edge", "0"], {"n": 3, "edges": [[1], [0, 2]]})
        assert code == 2

    def test_verify(self, cli, tmp_path):
        col = tmp_path / "col.json"
        col.write_text(json.dumps({"colors": [1, 1], "k": 2}))
        code, out, _ = cli(["verify", "coloring", "--coloring", str(col), "-m", "2"], {"n": 2, "edges": [[0, 1]]})
        assert code == 1 and out["witness"]["missing_color"] == 2
        hs = tmp_path / "hs.json"
        hs.write_text(json.dumps({"vertices": [1], "shallowness": 1}))
        code, out, _ = cli(["verify", "hitting", "--hitting", str(hs), "-c", "1"], {"n": 3, "edges": [[0, 1], [1, 2]]})
        assert code == 0

    def test_epsnet(self, cli):
        pts = {"points": [[str(i), str(i * i)] for i in range(7)]}
        code, inst, _ = cli(["build", "halfplanes", "--side", "both"], pts)
        code, out, _ = cli(["epsnet", "--eps", "3/7"], inst)
        assert code == 0 and out["size"] <= 3
        code, out, _ = cli(["epsnet", "--eps", "3/7", "--partition"], inst)
        assert sorted(v for p in out["nets"] for v in p) == list(range(7))
        code, _, _ = cli(["epsnet", "--eps", "0.4.1"], inst)
        assert code == 2


class TestOutput:
    def test_out_file(self, cli, tmp_path):
        target = tmp_path / "o.json"
        code, out, _ = cli(["generate", "sharpness", "-k", "2", "--out", str(target)])
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["n"] == 3

    def test_pretty(self, cli):
        code, out, _ = cli(["generate", "sharpness", "-k", "2", "--pretty"])
        assert code == 0 and out.startswith("n: 3")

    def test_roundtrip(self, cli):
        inst = {"n": 5, "base_edges": [[0, 1], [3]], "x_set": [2], "flags": ["plain", "comp"]}
        code, out, _ = cli(["transform", "pushback", "--count", "0"], inst)
        out.pop("order")
        assert out == inst


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polychrome", "check", "aba"],
        input=json.dumps({"n": 3, "edges": [[0, 2], [1]]}),
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["witness"]["z"] == 2
