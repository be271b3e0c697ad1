import json
from importlib import resources
from pathlib import Path

import pytest

from motivelab.cli import main


def dataset_path(name: str) -> str:
    return str(resources.files("motivelab").joinpath("datasets", name))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_schur_text(capsys):
    code, out, _ = run(capsys, "schur", "--group", "symmetric:4")
    assert code == 0
    assert "C2" in out


def test_schur_json_deterministic(capsys):
    code1, out1, _ = run(capsys, "schur", "--group", "elem_abelian:2,3", "--json")
    code2, out2, _ = run(capsys, "schur", "--group", "elem_abelian:2,3", "--json")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["invariant_factors"] == [2, 2, 2]


def test_chartable(capsys):
    code, out, _ = run(capsys, "chartable", "--group", "symmetric:3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["degrees"] == [1, 1, 2]
    assert payload["class_sizes"] == [1, 2, 3]


def test_motive_decompose(capsys):
    code, out, _ = run(capsys, "motive", "decompose", "--group", "cyclic:1",
                       "--catalog", "projective_space:2", "--action", "trivial",
                       "--json")
    assert code == 0
    atoms = json.loads(out)["atoms"]
    assert len(atoms) == 3
    assert all(a["kind"] == "twisted_unit" for a in atoms)


def test_motive_hom_and_restrict(tmp_path, capsys):
    skel = {"group": {"kind": "symmetric", "n": 3},
            "atoms": [{"kind": "twisted_unit", "class": []},
                      {"kind": "twisted_unit", "class": []}]}
    f = tmp_path / "skel.json"
    f.write_text(json.dumps(skel))
    code, out, _ = run(capsys, "motive", "hom", "--a", str(f), "--b", str(f), "--json")
    assert code == 0
    assert json.loads(out)["rank"] == 4 * 3
    code, out, _ = run(capsys, "motive", "restrict", "--a", str(f), "--json")
    assert code == 0
    assert json.loads(out)["plain_units"] == 2
    code, out, _ = run(capsys, "motive", "localized-eq", "--a", str(f), "--b", str(f))
    assert code == 0


def test_chow(capsys):
    code, out, _ = run(capsys, "chow", "--catalog", "del_pezzo_bl2", "--json")
    assert code == 0
    assert json.loads(out)["lefschetz_exponents"] == [0, 1, 1, 1, 2]


def test_measure_datasets(capsys):
    for name in ("swapped_points_c2.json", "p1_c2.json", "p2_trivial_c2.json"):
        code, out, _ = run(capsys, "measure", "factor-check", dataset_path(name))
        assert code == 0, name
    code, out, _ = run(capsys, "measure", "check", dataset_path("p1_c2.json"), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] and payload["hp"] == payload["orbifold"] == [4, 0]


def test_measure_blowups(capsys):
    for name in ("del_pezzo_blowup.json", "blowup_fixed_point.json"):
        code, out, _ = run(capsys, "measure", "blowup-check", dataset_path(name))
        assert code == 0, name


def test_measure_euler(capsys):
    code, out, _ = run(capsys, "measure", "euler",
                       dataset_path("swapped_points_c2.json"), "--json")
    assert code == 0
    assert json.loads(out)["multiplicities"] == ["1", "1"]


def test_measure_nc(capsys):
    code, out, _ = run(capsys, "measure", "nc", "--group", "cyclic:2",
                       "--catalog", "disjoint_points:2",
                       "--action", '{"point_orbits": [[0]]}', "--json")
    assert code == 0
    cls = json.loads(out)["class"]
    assert cls == [{"kind": "induced", "stabilizer": [0], "multiplicity": 1}]


def test_cocycle_roundtrip(tmp_path, capsys):
    from motivelab.cocycles import central_pairing_cocycle
    from motivelab.groups import cyclic_group
    alpha = central_pairing_cocycle(cyclic_group(2))
    f = tmp_path / "pairing.json"
    f.write_text(json.dumps({
        "group": {"kind": "product", "a": {"kind": "cyclic", "n": 2},
                  "b": {"kind": "cyclic", "n": 2}},
        "modulus": alpha.modulus,
        "exponents": [list(r) for r in alpha.table]}))
    code, out, _ = run(capsys, "cocycle", "check", str(f))
    assert code == 0
    code, out, _ = run(capsys, "cocycle", "classify", str(f), "--json")
    assert code == 0
    assert json.loads(out)["coordinates"] == [1]
    code, out, _ = run(capsys, "cocycle", "mul", str(f), str(f), "--json")
    assert code == 0
    assert json.loads(out)["coordinates"] == [0]


def test_twisted_command(capsys):
    code, out, _ = run(capsys, "twisted", "--group", "cyclic:4", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["dims"] == [1, 1, 1, 1]
    assert payload["center_dim"] == 4


def test_exit_codes(tmp_path, capsys):
    # usage error
    code, _, err = run(capsys, "schur", "--group", "nonsense:1")
    assert code == 1
    # check failure: corrupted cocycle
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "group": {"kind": "cyclic", "n": 2},
        "modulus": 2,
        "exponents": [[0, 1], [0, 0]]}))
    code, out, _ = run(capsys, "cocycle", "check", str(bad))
    assert code == 2
    # check failure: wrong fixed-locus data
    ds = tmp_path / "ds.json"
    ds.write_text(json.dumps({
        "group": {"kind": "cyclic", "n": 2},
        "symbol": {"catalog": "disjoint_points:2",
                   "action": {"point_orbits": [[0]]}},
        "fixed_locus": [2, 2]}))
    code, out, _ = run(capsys, "measure", "factor-check", str(ds))
    assert code == 2


def test_selftest_fast(capsys):
    code, out, _ = run(capsys, "selftest", "--fast")
    assert code == 0
    assert out.count("PASS") == 9


def test_measure_collection_symbol(capsys):
    code, out, _ = run(capsys, "measure", "check",
                       dataset_path("p1xp1_swap_c2.json"), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] and payload["hp"] == [5, 0]


def test_motive_decompose_collection_file(tmp_path, capsys):
    spec = {"blocks": [{"length": 1, "stabilizer": [0, 1]},
                       {"length": 2, "stabilizer": [0]},
                       {"length": 1, "stabilizer": [0, 1]}]}
    f = tmp_path / "spec.json"
    f.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "motive", "decompose", "--group", "cyclic:2",
                       "--collection", str(f), "--json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["atoms"]) == 3
    assert payload["possibly_isomorphic"] == []


def test_dataset_fixed_locus_dict_form(tmp_path, capsys):
    """Per-class data may be keyed by class representative instead of listed."""
    ds = tmp_path / "ds.json"
    ds.write_text(json.dumps({
        "group": {"kind": "cyclic", "n": 2},
        "symbol": {"catalog": "projective_space:1", "action": "trivial"},
        "fixed_locus": {"0": 2, "1": 2},
        "sectors": {"0": [2, 0], "1": [2, 0]}}))
    code, out, _ = run(capsys, "measure", "check", str(ds), "--json")
    assert code == 0
    assert json.loads(out)["ok"]
