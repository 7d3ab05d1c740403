"""End-to-end tests for the command line interface."""

import json

import pytest

from hcfam.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def invoke_json(capsys, *argv):
    code, out = invoke(capsys, *argv)
    return code, json.loads(out)


class TestFamily:
    def test_build_and_jacobi(self, capsys):
        code, doc = invoke_json(capsys, "family", "build", "--kind", "contraction")
        assert code == 0 and doc["labels"] == ["k0", "p0", "p1"] and doc["rank"] == 3
        code, doc = invoke_json(capsys, "family", "jacobi", "--kind", "deformation")
        assert code == 0 and doc["ok"] is True

    def test_fiber_at_infinity(self, capsys):
        code, doc = invoke_json(capsys, "family", "fiber", "--kind", "contraction", "--at", "inf")
        assert code == 0
        assert doc["invariants"]["dim_derived"] == 2
        assert doc["invariants"]["solvable"] is True

    def test_basechange(self, capsys):
        code, doc = invoke_json(
            capsys, "family", "basechange", "--kind", "contraction", "--exponent", "2"
        )
        assert code == 0 and doc["rank"] == 3
        code, _ = invoke(capsys, "family", "basechange", "--exponent", "0")
        assert code == 2

    def test_morphcheck_presets(self, capsys):
        code, doc = invoke_json(capsys, "family", "morphcheck", "--preset", "pullback-deformation")
        assert code == 0 and doc["morphism"] is True
        code, doc = invoke_json(
            capsys, "family", "morphcheck", "--preset", "identity-contraction-deformation"
        )
        assert code == 1 and doc["morphism"] is False and "witness" in doc
        code, _ = invoke(capsys, "family", "morphcheck", "--preset", "nonsense")
        assert code == 2


@pytest.fixture()
def module_file(tmp_path, capsys):
    code, out = invoke(
        capsys,
        "classify",
        "construct",
        "--weights",
        "even",
        "--class",
        "III",
        "--casimir",
        "0,0,1",
    )
    assert code == 0
    path = tmp_path / "module.json"
    path.write_text(out)
    return str(path)


class TestModule:
    def test_validate_round_trip(self, capsys, module_file):
        code, doc = invoke_json(capsys, "module", "validate", "--module", module_file)
        assert code == 0 and doc["ok"] is True

    def test_fiber_and_locus(self, capsys, module_file):
        code, doc = invoke_json(
            capsys, "module", "fiber", "--module", module_file, "--at", "1/8", "--window", "-6..6"
        )
        assert code == 1 and doc["irreducible"] is False
        code, doc = invoke_json(capsys, "module", "locus", "--module", module_file)
        assert code == 0 and "points" in doc

    def test_twist_then_iso_fails(self, capsys, module_file, tmp_path):
        code, out = invoke(capsys, "module", "twist", "--module", module_file, "--degree", "1")
        assert code == 0
        other = tmp_path / "twisted.json"
        other.write_text(out)
        code, doc = invoke_json(
            capsys, "module", "iso", "--module", module_file, "--other", str(other)
        )
        assert code == 1 and doc["isomorphic"] is False

    def test_iso_self(self, capsys, module_file):
        code, doc = invoke_json(
            capsys, "module", "iso", "--module", module_file, "--other", module_file
        )
        assert code == 0 and doc["isomorphic"] is True

    def test_missing_file_is_request_error(self, capsys):
        code, doc = invoke_json(capsys, "module", "validate", "--module", "/no/such/file.json")
        assert code == 2 and doc["error"] == "request"

    def test_swap_unequal_degrees_is_domain_error(self, capsys, module_file):
        code, doc = invoke_json(
            capsys, "module", "swap", "--module", module_file, "--indices", "2"
        )
        assert code == 3 and doc["error"] == "DegreeBoundViolated"


class TestClassify:
    def test_admissible_verdicts(self, capsys):
        code, doc = invoke_json(
            capsys, "classify", "admissible", "--weights", "even", "--casimir", "0,8,0"
        )
        assert code == 1 and doc["admissible"] is False
        code, doc = invoke_json(
            capsys, "classify", "admissible", "--weights", "odd", "--casimir", "0,8,0"
        )
        assert code == 0 and doc["admissible"] is True

    def test_inadmissible_construct_is_domain_error(self, capsys):
        code, doc = invoke_json(
            capsys,
            "classify",
            "construct",
            "--weights",
            "even",
            "--class",
            "III",
            "--casimir",
            "0,8,0",
        )
        assert code == 3 and doc["error"] == "InadmissibleCasimir"

    def test_report(self, capsys):
        code, doc = invoke_json(
            capsys, "classify", "report", "--weights", "lowest:3", "--class", "I:3"
        )
        assert code == 0 and doc["casimir_moduli"] == "single point"

    def test_probe_deterministic_bytes(self, capsys):
        argv = (
            "classify",
            "probe",
            "--weights",
            "even",
            "--class",
            "IV",
            "--casimir",
            "1,0,0",
            "--trials",
            "3",
            "--seed",
            "7",
            "--window",
            "-8..8",
        )
        code_a, out_a = invoke(capsys, *argv)
        code_b, out_b = invoke(capsys, *argv)
        assert code_a == code_b == 0
        assert out_a == out_b

    def test_bad_weights_is_request_error(self, capsys):
        code, _ = invoke(capsys, "classify", "admissible", "--weights", "banana")
        assert code == 2


class TestGrassmann:
    def test_pencil_and_subalg(self, capsys):
        code, doc = invoke_json(capsys, "grassmann", "pencil", "--pq", "1,1", "--det-one")
        assert code == 0 and len(doc["basis"]) == 3
        code, doc = invoke_json(capsys, "grassmann", "subalg", "--pq", "2,1", "--det-one")
        assert code == 0 and doc["subalgebra"] is True

    def test_limit_and_closure(self, capsys):
        code, doc = invoke_json(
            capsys, "grassmann", "limit", "--pq", "1,1", "--det-one", "--boundary", "inf"
        )
        assert code == 0 and len(doc["basis"]) == 2
        code, doc = invoke_json(
            capsys, "grassmann", "closure", "--pq", "1,1", "--det-one", "--boundary", "0"
        )
        assert code == 0 and doc["closed"] is True

    def test_compare_and_realform(self, capsys):
        code, doc = invoke_json(capsys, "grassmann", "compare", "--pq", "1,1", "--det-one")
        assert code == 0 and doc["isomorphic"] is True
        code, doc = invoke_json(
            capsys, "grassmann", "realform", "--pq", "1,1", "--det-one", "--at", "-1"
        )
        assert code == 0 and doc["signature"] == [0, 0, 3]

    def test_bad_pq_is_request_error(self, capsys):
        code, _ = invoke(capsys, "grassmann", "pencil", "--pq", "1")
        assert code == 2


class TestVerify:
    def test_quick_profile_passes(self, capsys):
        code, out = invoke(capsys, "verify", "--profile", "quick")
        assert code == 0
        lines = out.strip().splitlines()
        assert all(line.startswith("PASS") for line in lines[:-1])
        doc = json.loads(lines[-1])
        assert doc["passed"] == 6 and doc["failed"] == []


class TestDeterminism:
    def test_construct_output_byte_identical(self, capsys):
        argv = ("classify", "construct", "--weights", "odd", "--class", "I:1", "--casimir", "1,2,3")
        _, a = invoke(capsys, *argv)
        _, b = invoke(capsys, *argv)
        assert a == b
