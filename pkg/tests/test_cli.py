import json

from click.testing import CliRunner

from phasetop.cli import main


def invoke(*args):
    return CliRunner().invoke(main, list(args))


def test_hf_sum_phase():
    r = invoke("hf", "sum", "--field", "phase", "--elems", "0,1/2")
    assert r.exit_code == 0
    assert r.output.strip() == "{S^1, z}"


def test_hf_sum_sign():
    r = invoke("hf", "sum", "--field", "sign", "--elems", "+,-")
    assert r.exit_code == 0
    assert r.output.strip() == "{-1, 0, 1}"


def test_hf_sum_bad_input():
    r = invoke("hf", "sum", "--field", "phase", "--elems", "0,wat")
    assert r.exit_code == 1
    assert "Error" in r.output


def test_covector_check():
    r = invoke("covector", "check", "--v", "0,0,0", "--x", "0,1/3,2/3")
    assert r.exit_code == 0 and r.output.strip() == "true"
    r = invoke("covector", "check", "--v", "0,0,0", "--x", "0,0,1/4")
    assert r.exit_code == 0 and r.output.strip() == "false"


def test_covector_enumerate_sign():
    r = invoke("covector", "enumerate", "--field", "sign", "--n", "2")
    assert r.exit_code == 0
    assert r.output.splitlines() == ["+,-", "-,+"]


def test_covector_enumerate_phase():
    r = invoke("covector", "enumerate", "--field", "phase", "--n", "2",
               "--m", "2")
    assert r.exit_code == 0
    assert r.output.splitlines() == ["0,1/2", "1/2,0"]


def test_covector_enumerate_needs_m_for_phase():
    r = invoke("covector", "enumerate", "--field", "phase", "--n", "2")
    assert r.exit_code == 1


def test_delta_member():
    r = invoke("delta", "member", "--v", "0,0,0", "--z", "1@0;1@1/2;1@0")
    assert r.exit_code == 0 and r.output.strip() == "true"
    r = invoke("delta", "member", "--v", "0,0,0", "--z", "1@0;1@1/8;1@0")
    assert r.exit_code == 0 and r.output.strip() == "false"


def test_pn_list():
    r = invoke("pn", "list", "--n", "3")
    assert r.exit_code == 0
    lines = r.output.splitlines()
    assert len(lines) == 9
    assert "U,L,1" in lines


def test_pn_meet_and_nu():
    r = invoke("pn", "meet", "--n", "3", "--x", "U,L,1", "--y", "L,U,1")
    assert r.exit_code == 0 and r.output.strip() == "-1,-1,1"
    r = invoke("pn", "nu", "--n", "3", "--x", "U,L,1")
    assert r.exit_code == 0 and r.output.strip() == "2"


def test_pn_rejects_bad_labels():
    # a clean "Error: ..." line, not a swallowed traceback
    r = invoke("pn", "nu", "--n", "3", "--x", "U,L,L")
    assert r.exit_code == 1 and "Error:" in r.output
    r = invoke("pn", "nu", "--n", "4", "--x", "U,L,1")
    assert r.exit_code == 1 and "Error:" in r.output
    r = invoke("pn", "meet", "--n", "3", "--x", "1,U,-1", "--y", "U,U,F")
    assert r.exit_code == 1 and "Error:" in r.output
    assert "1,U,-1" in r.output


def test_glue_verify_slice():
    r = invoke("glue", "verify-slice", "--n", "3", "--samples", "10",
               "--seed", "2")
    assert r.exit_code == 0
    assert r.output.startswith("suite slice-claims: PASS")


def test_glue_verify_slice_rejects_small_n():
    r = invoke("glue", "verify-slice", "--n", "2")
    assert r.exit_code == 1


def test_mesh_and_homology_round_trip():
    runner = CliRunner()
    with runner.isolated_filesystem():
        r = runner.invoke(main, ["mesh", "slice", "--n", "3", "--m", "2",
                                 "--out", "s.json"])
        assert r.exit_code == 0
        assert "16 top simplices" in r.output
        with open("s.json", "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        assert doc["n"] == 3 and doc["m"] == 2
        r = runner.invoke(main, ["homology", "--in", "s.json"])
        assert r.exit_code == 0
        assert r.output.strip() == "betti (1,0,0) euler 1 over Q"

        r = runner.invoke(main, ["mesh", "full", "--n", "3", "--m", "2",
                                 "--out", "f.json"])
        assert r.exit_code == 0
        r = runner.invoke(main, ["homology", "--in", "f.json",
                                 "--field", "f2"])
        assert r.exit_code == 0
        assert r.output.strip() == "betti (1,0,0,1) euler 0 over F2"


def test_mesh_rejects_odd_m():
    runner = CliRunner()
    with runner.isolated_filesystem():
        r = runner.invoke(main, ["mesh", "slice", "--n", "3", "--m", "3",
                                 "--out", "s.json"])
        assert r.exit_code == 1


def test_homology_rejects_bad_documents():
    runner = CliRunner()
    with runner.isolated_filesystem():
        with open("bad.json", "w", encoding="utf-8") as fh:
            fh.write("{not json")
        r = runner.invoke(main, ["homology", "--in", "bad.json"])
        assert r.exit_code == 1
        with open("halfbad.json", "w", encoding="utf-8") as fh:
            json.dump({"n": 2, "m": 2, "vertices": [], "simplices": [[0]]},
                      fh)
        r = runner.invoke(main, ["homology", "--in", "halfbad.json"])
        assert r.exit_code == 1
    r = invoke("homology", "--in", "no-such-file.json")
    assert r.exit_code == 2


def test_verify_writes_report_and_is_deterministic():
    runner = CliRunner()
    with runner.isolated_filesystem():
        args = ["verify", "sign-spheres", "--max-n", "3", "--seed", "5",
                "--report", "rep.json"]
        r = runner.invoke(main, args)
        assert r.exit_code == 0
        assert "suite sign-spheres: PASS" in r.output
        with open("rep.json", "rb") as fh:
            first = fh.read()
        r = runner.invoke(main, args)
        assert r.exit_code == 0
        with open("rep.json", "rb") as fh:
            assert fh.read() == first
        doc = json.loads(first)
        assert doc["passed"] is True
        assert doc["seed"] == 5


def test_verify_rejects_unknown_suite_and_bad_params():
    r = invoke("verify", "no-such-suite")
    assert r.exit_code == 2
    r = invoke("verify", "sign-spheres", "--max-n", "1")
    assert r.exit_code == 1
