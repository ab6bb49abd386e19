"""CLI tests: golden files, exit codes, and file round trips.

The golden documents under tests/goldens/ were captured from hand-verified
values (C2/S3 marks, the classical Witt product forms, the q-weighted
divisor-lattice polynomials checked at q = 1) before being frozen.
"""
import json
import pathlib
import subprocess
import sys

import pytest

from wittburnside.cli import main

GOLDENS = pathlib.Path(__file__).resolve().parent / "goldens"


def run_cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "wittburnside", *argv],
        capture_output=True,
        text=True,
    )


def run_main(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_vec(tmp_path, name, **fields):
    doc = {"schema_version": 1, **fields}
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def c2vec(tmp_path, name, flavor, components, ring="Z", **extra):
    return write_vec(
        tmp_path,
        name,
        group="C2",
        flavor=flavor,
        ring=ring,
        components=components,
        labels=["G", "1"],
        **extra,
    )


# --- golden files (byte-exact) ------------------------------------------------


@pytest.mark.parametrize(
    "argv,golden",
    [
        (("group", "info", "--group", "S3"), "group_info_S3.json"),
        (("universal", "--group", "C2", "--op", "prod"), "universal_C2_prod.json"),
        (("qpoly", "P", "--n", "6"), "qpoly_P_6.json"),
    ],
)
def test_golden_outputs(argv, golden):
    proc = run_cli(*argv)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout == (GOLDENS / golden).read_text(encoding="utf-8")


def test_goldens_are_deterministic():
    a = run_cli("group", "info", "--group", "S3")
    b = run_cli("group", "info", "--group", "S3")
    assert a.stdout == b.stdout


# --- exit codes ----------------------------------------------------------------


def test_unknown_group_exits_2(capsys):
    code, _, err = run_main(capsys, "group", "info", "--group", "X9")
    assert code == 2
    assert "SchemaError" in err


def test_ring_flag_disagreement_exits_2(capsys, tmp_path):
    a = c2vec(tmp_path, "a.json", "Witt", ["1", "2"], ring="Z/4")
    code, _, err = run_main(capsys, "witt", "neg", a, "--ring", "Z")
    assert code == 2
    assert "disagrees" in err


def test_domain_error_exits_3(capsys, tmp_path):
    a = c2vec(tmp_path, "a.json", "Aperiodic", ["0", "1"])
    code, _, err = run_main(capsys, "theta", "--inverse", a)
    assert code == 3
    assert "NotInvertibleIndex" in err


def test_flavor_mismatch_exits_2(capsys, tmp_path):
    a = c2vec(tmp_path, "a.json", "Necklace", ["0", "1"])
    code, _, err = run_main(capsys, "witt", "neg", a)
    assert code == 2
    assert "flavor" in err


def test_bad_labels_exit_2(capsys, tmp_path):
    a = write_vec(
        tmp_path,
        "a.json",
        group="C2",
        flavor="Witt",
        ring="Z",
        components=["1", "2"],
        labels=["1", "G"],
    )
    code, _, err = run_main(capsys, "witt", "neg", a)
    assert code == 2
    assert "labels" in err


def test_verify_pass_and_fault_exits(capsys):
    code, out, _ = run_main(capsys, "verify", "--suite", "diagrams", "--seed", "7")
    assert code == 0
    report = json.loads(out)
    assert report["failures"] == [] and report["cases_run"] > 0
    code, out, _ = run_main(
        capsys, "verify", "--suite", "diagrams", "--seed", "7", "--inject-fault"
    )
    assert code == 1
    report = json.loads(out)
    assert report["failures"][0]["case"] == "diagrams/sanity/identity-ghost"


# --- compute verbs through files -----------------------------------------------


def test_necklace_mul_one_hot(capsys, tmp_path):
    a = c2vec(tmp_path, "a.json", "Necklace", ["0", "1"])
    code, out, _ = run_main(capsys, "necklace", "mul", a, a)
    assert code == 0
    assert json.loads(out)["components"] == ["0", "2"]


def test_ghost_of_one_hot_at_G(capsys, tmp_path):
    a = write_vec(
        tmp_path,
        "a.json",
        group="S3",
        flavor="Witt",
        ring="Z",
        components=["1", "0", "0", "0"],
        labels=["G", "3a", "2a", "1"],
    )
    code, out, _ = run_main(capsys, "ghost", "--flavor", "Witt", a)
    assert code == 0
    assert json.loads(out)["components"] == ["1", "1", "1", "1"]


def test_witt_mul_residue_ring(capsys, tmp_path):
    a = c2vec(tmp_path, "a.json", "Witt", ["3", "2"], ring="Z/4")
    b = c2vec(tmp_path, "b.json", "Witt", ["2", "3"], ring="Z/4")
    code, out, _ = run_main(capsys, "witt", "mul", "--ring", "Z/4", a, b)
    assert code == 0
    # lift-reduce oracle: (3,2)*(2,3) over Z is (6, 47) -> (2, 3) mod 4
    assert json.loads(out)["components"] == ["2", "3"]


def test_teichmuller_file_round_trip(capsys, tmp_path):
    a = write_vec(
        tmp_path,
        "a.json",
        group="S3",
        flavor="Witt",
        ring="Q",
        components=["1", "-2", "3", "5"],
        labels=["G", "3a", "2a", "1"],
    )
    code, out, _ = run_main(capsys, "teichmuller", a)
    assert code == 0
    tau = tmp_path / "tau.json"
    tau.write_text(out, encoding="utf-8")
    code, out, _ = run_main(capsys, "teichmuller", "--inverse", str(tau))
    assert code == 0
    assert json.loads(out)["components"] == ["1", "-2", "3", "5"]


def test_ind_res_file_flow(capsys, tmp_path):
    a = write_vec(
        tmp_path,
        "a.json",
        group="S3",
        flavor="Witt",
        ring="Z",
        components=["1", "-2", "3", "5"],
        labels=["G", "3a", "2a", "1"],
    )
    code, out, _ = run_main(capsys, "res", "--group", "S3", "--class", "3a", a)
    assert code == 0
    doc = json.loads(out)
    assert doc["group"] == "S3.3a" and doc["labels"] == ["G", "1"]
    sub = tmp_path / "sub.json"
    sub.write_text(out, encoding="utf-8")
    code, out, _ = run_main(capsys, "ind", "--group", "S3", "--class", "3a", str(sub))
    assert code == 0
    ind = json.loads(out)
    assert ind["group"] == "S3" and len(ind["components"]) == 4
    # wrong ambient flags for the subgroup file are a schema error
    code, _, err = run_main(capsys, "ind", "--group", "S3", "--class", "2a", str(sub))
    assert code == 2 and "does not match" in err


def test_cyclic_and_qwitt_flow(capsys, tmp_path):
    cyc = write_vec(
        tmp_path,
        "cyc.json",
        group={"cyclic_trunc": [1, 2, 3, 6]},
        flavor="Witt",
        ring="Z",
        components=["2", "-1", "3", "0"],
        labels=[1, 2, 3, 6],
    )
    code, out, _ = run_main(capsys, "cyclic", "ghost", cyc)
    assert code == 0
    assert json.loads(out)["components"] == ["2", "2", "17", "89"]
    code, out, _ = run_main(capsys, "cyclic", "frobenius", "--r", "2", cyc)
    assert code == 0
    doc = json.loads(out)
    assert doc["labels"] == [1, 3] and doc["components"] == ["2", "27"]
    code, out, _ = run_main(capsys, "qwitt", "ghost", "--q", "2", cyc)
    assert code == 0
    assert json.loads(out)["components"] == ["2", "6", "41", "2094"]
    code, out, _ = run_main(capsys, "qwitt", "teichmuller", "--q", "2", cyc)
    assert code == 0
    qtau = tmp_path / "qtau.json"
    qtau.write_text(out, encoding="utf-8")
    code, out, _ = run_main(
        capsys, "qwitt", "teichmuller", "--q", "2", "--inverse", str(qtau)
    )
    assert code == 0
    assert json.loads(out)["components"] == ["2", "-1", "3", "0"]


def test_symbolic_q_requires_rational_q_ring(capsys, tmp_path):
    sym = write_vec(
        tmp_path,
        "sym.json",
        group={"cyclic_trunc": [1, 2]},
        flavor="Witt",
        ring="Q[q]",
        components=["2", "-1"],
        labels=[1, 2],
    )
    code, out, _ = run_main(capsys, "qwitt", "ghost", "--q", "q", sym)
    assert code == 0
    assert json.loads(out)["components"] == ["2", "4*q^1+-2"]
    zvec = write_vec(
        tmp_path,
        "z.json",
        group={"cyclic_trunc": [1, 2]},
        flavor="Witt",
        ring="Z",
        components=["2", "-1"],
        labels=[1, 2],
    )
    code, _, err = run_main(capsys, "qwitt", "ghost", "--q", "q", zvec)
    assert code == 2 and "SchemaError" in err


def test_artinhasse_file_round_trip(capsys, tmp_path):
    cyc = write_vec(
        tmp_path,
        "cyc.json",
        group={"cyclic_trunc": [1, 2, 3, 6]},
        flavor="Witt",
        ring="Z",
        components=["2", "-1", "3", "0"],
        labels=[1, 2, 3, 6],
    )
    code, out, _ = run_main(capsys, "artinhasse", "--q", "2", cyc)
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "curve" and doc["degree"] == 6
    curve = tmp_path / "curve.json"
    curve.write_text(out, encoding="utf-8")
    code, out, _ = run_main(
        capsys, "artinhasse", "--q", "2", "--inverse", "--trunc-set", "1,2,3,6",
        str(curve),
    )
    assert code == 0
    assert json.loads(out)["components"] == ["2", "-1", "3", "0"]


def test_coord_form_travels_through_files(capsys, tmp_path):
    a = c2vec(tmp_path, "a.json", "Witt", ["3", "5"], ring="Z/8")
    code, out, _ = run_main(capsys, "teichmuller", a)
    assert code == 0
    doc = json.loads(out)
    assert doc["coord_form"] is True and doc["flavor"] == "Necklace"
    tau = tmp_path / "tau.json"
    tau.write_text(out, encoding="utf-8")
    code, out, _ = run_main(capsys, "teichmuller", "--inverse", str(tau))
    assert code == 0
    assert json.loads(out)["components"] == ["3", "5"]
