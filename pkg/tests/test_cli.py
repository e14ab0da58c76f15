import json

import pytest

from nilorb.cli import canonical_json, main


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_roots(capsys):
    code, out, _ = run(capsys, ["roots", "--type", "A2"])
    assert code == 0
    assert "positive roots: 3" in out
    assert "marks" in out


def test_invalid_type(capsys):
    code, _, err = run(capsys, ["roots", "--type", "B1"])
    assert code == 1
    assert "rank" in err


def test_cosets_b2(capsys):
    code, out, _ = run(capsys, ["cosets", "--type", "B2", "--subsystem-from-extended-minus", "2"])
    assert code == 0
    assert out.splitlines()[0] == "2"


def test_cosets_full_group(capsys):
    code, out, _ = run(capsys, ["cosets", "--type", "A2", "--subsystem-from-extended-minus", "0", "--words"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1"
    assert lines[1] == "e"


def test_cosets_bad_node(capsys):
    code, _, err = run(capsys, ["cosets", "--type", "A2", "--subsystem-from-extended-minus", "9"])
    assert code == 1 and "range" in err


def test_pisystems(capsys):
    code, out, _ = run(capsys, ["pisystems", "--type", "A2"])
    assert code == 0
    assert out.splitlines()[0] == "2 classes"


def test_wdd(capsys):
    code, out, _ = run(capsys, ["wdd", "--type", "A2"])
    assert code == 0
    assert out.splitlines()[0] == "3 nilpotent orbits"


def test_orbits_text(capsys):
    code, out, _ = run(capsys, ["orbits", "--type", "A1", "--kac", "1,1"])
    assert code == 0
    assert out.count("h=(") == 3
    assert "2 nonzero orbits" in out
    assert '"component_dims":[1,2]' in out  # grading echo


def test_orbits_by_nregular_order(capsys):
    code, out, _ = run(capsys, ["orbits", "--type", "G2", "--nregular-order", "2"])
    assert code == 0
    assert "kac=0,0,1" in out
    assert "5 nonzero orbits" in out
    assert "dim 6, rank 2" in out


def test_orbits_json_schema_and_roundtrip(capsys):
    code, out, _ = run(capsys, ["orbits", "--type", "A1", "--kac", "1,1", "--output", "json"])
    assert code == 0
    line = out.strip()
    doc = json.loads(line)
    assert set(doc) == {"algebra", "kac", "m", "records", "summary", "seed", "schema"}
    assert doc["schema"] == 1
    assert doc["algebra"] == {"type": "A", "rank": 1}
    assert doc["m"] == 2 and doc["kac"] == [1, 1]
    assert len(doc["records"]) == 3
    for r in doc["records"]:
        assert set(r) == {"h", "e", "f", "dim", "wdd"}
    assert doc["summary"]["orbit_count"] == 2
    # byte-identical round trip
    assert canonical_json(doc) == line


def test_identical_config_identical_bytes(capsys):
    _, out1, _ = run(capsys, ["orbits", "--type", "G2", "--kac", "0,0,1", "--output", "json", "--seed", "5"])
    _, out2, _ = run(capsys, ["orbits", "--type", "G2", "--kac", "0,0,1", "--output", "json", "--seed", "5"])
    assert out1 == out2


def test_orbits_invalid_kac(capsys):
    code, _, err = run(capsys, ["orbits", "--type", "A1", "--kac", "0,0"])
    assert code == 1 and "order 0" in err
    code, _, err = run(capsys, ["orbits", "--type", "A1", "--kac", "1,1,1"])
    assert code == 1 and "labels" in err


def test_orbits_requires_exactly_one_source():
    with pytest.raises(SystemExit) as exc:
        main(["orbits", "--type", "A1", "--kac", "1,1", "--nregular-order", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["orbits", "--type", "A1"])
    assert exc.value.code == 2


def test_outer_request_rejected(capsys):
    code, _, err = run(capsys, ["orbits", "--type", "A1", "--kac", "1,1", "--outer"])
    assert code == 1
    assert "outer" in err


def test_nregular_table(capsys):
    code, out, _ = run(capsys, ["nregular", "--type", "G2", "--orders", "2..3"])
    assert code == 0
    lines = out.splitlines()
    assert lines[1].split()[2] == "5"
    assert lines[2].split()[3] == "2*"  # not very N-regular: starred
