import json
import pathlib
import subprocess
import sys

import pytest

FIXTURES = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "xmhopf.cli", *args],
        capture_output=True,
        text=True,
    )


def test_verify_valid_documents_exit_zero():
    for doc, name in [
        ("k_xi_z2.json", "k_xi_z2"),
        ("bichar_z2.json", "bichar_z2"),
        ("k_xi_s3.json", "k_xi_s3"),
        ("rho_z2.json", "rho_z2"),
        ("bichar_z2_gf5.json", "bichar_z2_gf5"),
    ]:
        proc = run_cli("verify", str(FIXTURES / doc), name)
        assert proc.returncode == 0, proc.stdout + proc.stderr
        assert "result: PASS" in proc.stdout


def test_verify_json_output():
    proc = run_cli("verify", str(FIXTURES / "k_xi_z2.json"), "k_xi_z2", "--json")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["ok"] is True
    assert payload["command"] == "verify"
    assert all(c["status"] == "pass" for c in payload["checks"])


def test_verify_candidates():
    doc = str(FIXTURES / "k_xi_z2.json")
    for name in ("unit_family", "sign_family", "constant_left", "constant_right"):
        assert run_cli("verify", doc, name).returncode == 0


def test_unknown_name_is_input_error():
    proc = run_cli("verify", str(FIXTURES / "k_xi_z2.json"), "missing")
    assert proc.returncode == 2
    assert "input error" in proc.stderr


def test_unreadable_document_is_input_error():
    proc = run_cli("verify", str(FIXTURES / "no_such_file.json"), "x")
    assert proc.returncode == 2


def test_malformed_document_is_input_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    proc = run_cli("verify", str(bad), "x")
    assert proc.returncode == 2


def test_stdin_input():
    data = (FIXTURES / "k_xi_z2.json").read_bytes()
    proc = subprocess.run(
        [sys.executable, "-m", "xmhopf.cli", "verify", "-", "k_xi_z2"],
        input=data,
        capture_output=True,
    )
    assert proc.returncode == 0


def test_integrals_command():
    proc = run_cli("integrals", str(FIXTURES / "bichar_z2.json"), "bichar_z2", "--json")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["outputs"]["left_dimension"] == 1
    assert payload["outputs"]["right_dimension"] == 1
    assert payload["outputs"]["left_basis"] == [[["1", "0"]]]


def test_grouplikes_command():
    proc = run_cli("grouplikes", str(FIXTURES / "bichar_z2.json"), "bichar_z2", "--json")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    fams = payload["outputs"]["families"]
    assert payload["outputs"]["count"] == 2
    flags = sorted(f["xi_grouplike"] for f in fams)
    assert flags == [False, True]


def test_dual_command():
    for doc, name in [("k_xi_z2.json", "k_xi_z2"), ("bichar_z2.json", "bichar_z2")]:
        proc = run_cli("dual", str(FIXTURES / doc), name)
        assert proc.returncode == 0, proc.stdout


def test_structure_theorem_command():
    doc = str(FIXTURES / "k_xi_z2.json")
    for module in ("dual_mod", "trivial_mod_2"):
        proc = run_cli("structure-theorem", doc, "k_xi_z2", module, "--json")
        assert proc.returncode == 0, proc.stdout
        payload = json.loads(proc.stdout)
        expected = 1 if module == "dual_mod" else 2
        assert payload["outputs"]["coinvariants_dimension"] == expected


def test_hom_command():
    doc = str(FIXTURES / "k_xi_z2.json")
    proc = run_cli("hom", doc, "k_xi_z2", "k1", "kh", "--degree", "1", "--json")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["outputs"]["degree_1_dimension"] == 1
    proc = run_cli("hom", doc, "k_xi_z2", "k1", "kh", "--json")
    payload = json.loads(proc.stdout)
    assert payload["outputs"]["degree_0_dimension"] == 0


def test_hom_command_accepts_element_labels():
    doc = str(FIXTURES / "k_xi_z2.json")
    proc = run_cli("hom", doc, "k_xi_z2", "k1", "kh", "--degree", "h", "--json")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["outputs"]["degree_1_dimension"] == 1
    proc = run_cli("hom", doc, "k_xi_z2", "k1", "kh", "--degree", "nope")
    assert proc.returncode == 2


def test_every_named_object_in_every_fixture_verifies():
    # in-process sweep: every shipped valid document passes `verify` for
    # every name it defines
    from xmhopf.cli import CommandResult, _verify_object
    from xmhopf.docio import parse

    for doc_path in sorted(FIXTURES.glob("*.json")):
        doc = parse(doc_path.read_bytes())
        for name in doc.all_names():
            res = CommandResult("verify", "-", name)
            _verify_object(doc, name, res)
            assert res.ok, f"{doc_path.name}:{name}"


def test_report_command():
    proc = run_cli("report", str(FIXTURES / "rho_z2.json"), "rho_z2", "--json")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["outputs"]["left_integral_dimension"] == 1
    assert payload["outputs"]["distinguished_grouplike"] == [["1", "0"], ["1", "0"]]


@pytest.mark.parametrize(
    "entry",
    json.loads((FIXTURES / "mutations" / "manifest.json").read_text()),
    ids=lambda e: e["file"],
)
def test_mutations_fail_with_witnesses(entry):
    path = str(FIXTURES / "mutations" / entry["file"])
    proc = run_cli("verify", path, entry["verify"])
    assert proc.returncode == 1, proc.stdout + proc.stderr
    assert "witness:" in proc.stdout
    assert "result: FAIL" in proc.stdout


def full_suite_outputs():
    commands = [
        ("verify", "k_xi_z2.json", ["k_xi_z2"]),
        ("verify", "bichar_z2.json", ["bichar_z2"]),
        ("verify", "k_xi_s3.json", ["k_xi_s3"]),
        ("verify", "rho_z2.json", ["rho_z2"]),
        ("integrals", "k_xi_z2.json", ["k_xi_z2"]),
        ("integrals", "bichar_z2.json", ["bichar_z2"]),
        ("grouplikes", "bichar_z2.json", ["bichar_z2"]),
        ("dual", "bichar_z2.json", ["bichar_z2"]),
        ("structure-theorem", "k_xi_z2.json", ["k_xi_z2", "dual_mod"]),
        ("hom", "k_xi_z2.json", ["k_xi_z2", "k1", "kh"]),
        ("report", "k_xi_z2.json", ["k_xi_z2"]),
    ]
    outputs = []
    for cmd, doc, args in commands:
        for flags in ([], ["--json"]):
            proc = run_cli(cmd, str(FIXTURES / doc), *args, *flags)
            outputs.append((cmd, doc, tuple(args), tuple(flags), proc.returncode, proc.stdout))
    return outputs


def test_reports_are_byte_identical_across_runs():
    assert full_suite_outputs() == full_suite_outputs()
