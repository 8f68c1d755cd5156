from __future__ import annotations

import json

from centlat import group_from_json, hom_from_json, make_family


def out_json(proc):
    return json.loads(proc.stdout)


# ---------------------------------------------------------------- exit code 0


def test_lattice_json(cli):
    proc = cli("lattice", "quaternion(8)")
    assert proc.returncode == 0
    doc = out_json(proc)
    assert doc["group_order"] == 8
    assert [n["order"] for n in doc["nodes"]] == [2, 4, 4, 4, 8]
    assert doc["involution"] == [4, 1, 2, 3, 0]


def test_lattice_dot(cli):
    proc = cli("lattice", "quaternion(8)", "--dot")
    assert proc.returncode == 0
    assert proc.stdout.startswith("digraph centralizer_lattice {")
    assert "N4 -> N1;" in proc.stdout
    assert "N0 -> N4 [style=dashed, dir=none, constraint=false];" in proc.stdout


def test_check_crh_positive(cli):
    proc = cli("check-crh", "quotient(semidirect(4,4,3),[x^2*y^2])")
    assert proc.returncode == 0
    doc = out_json(proc)
    assert doc["kernel"] == [0, 10]
    assert doc["definitional"] == {"ok": True, "witness": None}
    assert doc["criterion"]["applicable"] and doc["criterion"]["ok"]


def test_iso_lattices_agree_groups_differ(cli):
    proc = cli("iso", "dihedral(8)", "quaternion(8)")
    assert proc.returncode == 0
    doc = out_json(proc)
    assert doc["lattice_isomorphic"] is True
    assert doc["group_isomorphic"] is False
    assert doc["lattice_node_map"] == [0, 1, 2, 3, 4]


def test_verify_figure3(cli):
    proc = cli("verify", "figure3")
    assert proc.returncode == 0
    doc = out_json(proc)
    assert doc["suite"] == "figure3" and doc["pass"] is True
    assert len(doc["cases"]) == 6
    assert all(case["pass"] for case in doc["cases"])


def test_verify_corollary(cli):
    proc = cli("verify", "corollary", "--n", "3")
    assert proc.returncode == 0
    assert out_json(proc)["pass"] is True


def test_export_group_round_trips(cli):
    proc = cli("export", "semidihedral(16)")
    assert proc.returncode == 0
    g = group_from_json(proc.stdout)
    assert g.same_table(make_family("semidihedral", 16))


def test_export_quotient_exports_hom(cli):
    proc = cli("export", "quotient(dihedral(8),[x^2])")
    assert proc.returncode == 0
    doc = out_json(proc)
    assert set(doc) == {"source", "target", "map"}
    h = hom_from_json(doc)
    assert h.mapping == (0, 1, 0, 1, 2, 3, 2, 3)


def test_table_import(cli, tmp_path):
    exported = cli("export", "quaternion(16)")
    path = tmp_path / "q16.json"
    path.write_text(exported.stdout, encoding="utf-8")
    proc = cli("lattice", f'table("{path}")')
    assert proc.returncode == 0
    assert out_json(proc)["group_order"] == 16


# ---------------------------------------------------------------- exit code 1


def test_check_crh_negative_with_witnesses(cli):
    proc = cli("check-crh", "quotient(dihedral(8),[x^2])")
    assert proc.returncode == 1
    doc = out_json(proc)
    assert doc["definitional"]["ok"] is False
    w = doc["definitional"]["witness"]
    assert w == {
        "subgroup": [0, 4],
        "image_of_centralizer": [0, 2],
        "centralizer_of_image": [0, 1, 2, 3],
    }
    assert doc["criterion"]["applicable"] is True
    assert doc["criterion"]["ok"] is False
    assert doc["criterion"]["witness_pair"] == [1, 4]
    assert doc["criterion"]["witness_commutator"] == 2


def test_check_crh_criterion_inapplicable(cli):
    # kernel = the rotation subgroup: normal but not central
    proc = cli("check-crh", "quotient(dihedral(8),[x])")
    assert proc.returncode == 1
    doc = out_json(proc)
    assert doc["definitional"]["ok"] is False
    assert doc["criterion"]["applicable"] is False
    assert "reason" in doc["criterion"]


def test_iso_negative(cli):
    proc = cli("iso", "dihedral(12)", "quaternion(8)")
    assert proc.returncode == 1
    doc = out_json(proc)
    assert doc["lattice_isomorphic"] is False
    assert doc["lattice_node_map"] is None


# --------------------------------------------------------------- exit code 64


def test_usage_errors(cli):
    assert cli().returncode == 64                          # no subcommand
    assert cli("frobnicate").returncode == 64              # unknown subcommand
    assert cli("lattice", "wedge(4)").returncode == 64     # parse error
    assert cli("lattice", "cyclic(4) junk").returncode == 64
    assert cli("check-crh", "dihedral(8)").returncode == 64  # not a quotient
    assert cli("verify", "corollary").returncode == 64     # missing --n
    assert cli("verify", "corollary", "--n", "9").returncode == 64
    assert cli("verify", "figure3", "--n", "3").returncode == 64
    assert cli("verify", "nonsense").returncode == 64
    assert cli("lattice", "cyclic(300)").returncode == 64  # over the cap
    assert cli("lattice", "cyclic(40)", "--cap", "32").returncode == 64
    assert cli("lattice", "semidirect(4,2,2)").returncode == 64  # bad action
    assert cli("lattice", "quotient(dihedral(8),[x^9*z])").returncode == 64
    # quotient by a non-normal subgroup
    assert cli("export", "quotient(dihedral(8),[y])").returncode == 64


def test_usage_errors_print_to_stderr(cli):
    proc = cli("lattice", "wedge(4)")
    assert proc.stdout == ""
    assert "parse error" in proc.stderr


# --------------------------------------------------------------- exit code 74


def test_io_errors(cli, tmp_path):
    proc = cli("lattice", f'table("{tmp_path}/missing.json")')
    assert proc.returncode == 74
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert cli("lattice", f'table("{bad}")').returncode == 74
    notgroup = tmp_path / "notgroup.json"
    notgroup.write_text('{"order": 2, "table": [[0, 1], [1, 2]]}', encoding="utf-8")
    assert cli("lattice", f'table("{notgroup}")').returncode == 74


# -------------------------------------------------------------- determinism


def test_output_is_deterministic(cli):
    for args in (
        ("lattice", "semidihedral(16)"),
        ("check-crh", "quotient(cover_dq(3),[y^2])"),
        ("iso", "dihedral(16)", "quaternion(16)"),
    ):
        first = cli(*args)
        second = cli(*args)
        assert first.returncode == second.returncode
        assert first.stdout == second.stdout
