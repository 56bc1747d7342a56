import json
import subprocess
import sys

import pytest

from normcert.cli import main

GAUSS_INSTANCE = {
    "ring": "Q",
    "p": {"ring": "Q", "coeffs": ["1", "0", "1"]},
    "q": ["1", "1"],
    "x": [["3/2", "1/2"], ["1/2", "-1/2"]],
}

DEGREE_ONE_INSTANCE = {
    "ring": "Q",
    "p": ["-1", "1"],
    "q": ["1"],
    "x": [["3"]],
}


@pytest.fixture
def instance_path(tmp_path):
    path = tmp_path / "instance.json"
    path.write_text(json.dumps(GAUSS_INSTANCE))
    return str(path)


def run_certify(instance_path, tmp_path, *extra):
    out = str(tmp_path / "cert.json")
    code = main(["certify", "--input", instance_path, "--output", out, *extra])
    return code, out


class TestCertifyCommand:
    def test_writes_certificate(self, instance_path, tmp_path):
        code, out = run_certify(instance_path, tmp_path)
        assert code == 0
        cert = json.loads(open(out).read())
        assert cert["target"] == "5"
        assert all(f["exp"] in (1, -1) for f in cert["factors"])

    def test_stdout_when_no_output(self, instance_path, capsys):
        assert main(["certify", "--input", instance_path]) == 0
        cert = json.loads(capsys.readouterr().out)
        assert cert["target"] == "5"

    def test_byte_identical_reruns(self, instance_path, tmp_path):
        _, first = run_certify(instance_path, tmp_path, "--seed", "9")
        first_bytes = open(first, "rb").read()
        _, second = run_certify(instance_path, tmp_path, "--seed", "9")
        assert open(second, "rb").read() == first_bytes

    def test_env_seed_fallback(self, instance_path, tmp_path, monkeypatch):
        monkeypatch.setenv("NPCERT_SEED", "9")
        _, env_out = run_certify(instance_path, tmp_path)
        env_bytes = open(env_out, "rb").read()
        monkeypatch.delenv("NPCERT_SEED")
        _, flag_out = run_certify(instance_path, tmp_path, "--seed", "9")
        assert open(flag_out, "rb").read() == env_bytes

    def test_trace_flag(self, instance_path, tmp_path):
        code, out = run_certify(instance_path, tmp_path, "--trace")
        assert code == 0
        cert = json.loads(open(out).read())
        assert len(cert["trace"]) == 1
        assert set(cert["trace"][0]) == {"n", "p", "h", "r", "g", "b"}

    def test_degree_one_single_factor(self, tmp_path):
        path = tmp_path / "inst.json"
        path.write_text(json.dumps(DEGREE_ONE_INSTANCE))
        code, out = run_certify(str(path), tmp_path)
        assert code == 0
        cert = json.loads(open(out).read())
        assert cert["target"] == "9"
        assert cert["factors"] == [{"exp": 1, "vector": ["3"]}]

    def test_malformed_json_exits_3(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text('{"ring": "Q",')
        assert main(["certify", "--input", str(path)]) == 3
        err = capsys.readouterr().err
        assert "line" in err or "char" in err  # position-annotated message

    def test_missing_file_exits_3(self, tmp_path):
        assert main(["certify", "--input", str(tmp_path / "nope.json")]) == 3

    def test_invalid_instance_exits_3(self, tmp_path):
        path = tmp_path / "inst.json"
        path.write_text(json.dumps(dict(GAUSS_INSTANCE, q=["1"])))
        assert main(["certify", "--input", str(path)]) == 3

    def test_search_exhaustion_exits_2(self, tmp_path):
        # scalar value q(x) = 4 is never primitive, and a single try is spent
        # on the deterministic probe
        inst = {
            "ring": "Q",
            "p": ["-2", "0", "1"],
            "q": ["1"],
            "x": [["2", "0"]],
        }
        path = tmp_path / "inst.json"
        path.write_text(json.dumps(inst))
        assert main(["certify", "--input", str(path), "--max-tries", "1"]) == 2


class TestVerifyCommand:
    def test_round_trip_accepts(self, instance_path, tmp_path):
        _, out = run_certify(instance_path, tmp_path)
        assert main(["verify", "--input", instance_path, "--certificate", out]) == 0

    def test_flipped_exponent_rejected(self, instance_path, tmp_path, capsys):
        _, out = run_certify(instance_path, tmp_path)
        cert = json.loads(open(out).read())
        cert["factors"][0]["exp"] = -cert["factors"][0]["exp"]
        tampered = tmp_path / "tampered.json"
        tampered.write_text(json.dumps(cert))
        code = main(["verify", "--input", instance_path, "--certificate", str(tampered)])
        assert code == 1
        assert "product" in capsys.readouterr().err

    def test_wrong_target_rejected(self, instance_path, tmp_path):
        _, out = run_certify(instance_path, tmp_path)
        cert = json.loads(open(out).read())
        cert["target"] = "7"
        tampered = tmp_path / "tampered.json"
        tampered.write_text(json.dumps(cert))
        assert main(["verify", "--input", instance_path, "--certificate", str(tampered)]) == 1

    def test_parse_failure_exits_3(self, instance_path, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("[")
        assert main(["verify", "--input", instance_path, "--certificate", str(bad)]) == 3


class TestDemoCommand:
    def test_char2_single_field(self, capsys):
        assert main(["demo", "char2", "--field", "F4"]) == 0
        out = capsys.readouterr().out
        assert "F4" in out
        report = json.loads(out.strip().splitlines()[-1])
        assert report[0]["squares_off_line"] == 0

    def test_char3_single_field(self, capsys):
        assert main(["demo", "char3", "--field", "F3"]) == 0
        out = capsys.readouterr().out
        report = json.loads(out.strip().splitlines()[-1])
        assert report[0]["violations"] == 0
        assert report[0]["qualifying"] > 0

    def test_rejects_wrong_field(self):
        with pytest.raises(SystemExit):
            main(["demo", "char3", "--field", "F4"])

    def test_randsuite_small(self, capsys):
        assert main(["demo", "randsuite", "--count", "5", "--seed", "7"]) == 0
        assert "5/5 certificates verified" in capsys.readouterr().out


def test_console_entry_point(instance_path):
    proc = subprocess.run(
        [sys.executable, "-m", "normcert", "certify", "--input", instance_path],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["target"] == "5"
