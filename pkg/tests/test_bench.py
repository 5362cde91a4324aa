import csv
import json

from clique_interdict.bench import FIELDS, run_manifest
from clique_interdict.generators import c_fat, erdos_renyi
from clique_interdict.graph import write_dimacs


def test_manifest_to_csv(tmp_path):
    (tmp_path / "cf.clq").write_text(write_dimacs(c_fat(200, 1)))
    (tmp_path / "er.edges").write_text("\n".join(f"{u + 1} {v + 1}" for u, v in erdos_renyi(9, 0.5, 2).edges()))
    manifest = {
        "time_limit": 60,
        "runs": [
            {"graph": "cf.clq", "k": 10},
            {"graph": "er.edges", "c": 0.1, "name": "er9"},
            {"graph": "missing.clq", "k": 1},
        ],
    }
    (tmp_path / "m.json").write_text(json.dumps(manifest))
    rows = run_manifest(tmp_path / "m.json", tmp_path / "out.csv")
    with open(tmp_path / "out.csv") as fh:
        table = list(csv.DictReader(fh))
    assert list(table[0]) == FIELDS
    assert len(rows) == len(table) == 3
    assert table[0]["eta"] == "11" and table[0]["status"] == "solved"
    assert table[1]["instance"] == "er9"
    assert table[2]["status"] == "error"


def test_timeout_row(tmp_path):
    (tmp_path / "cf.clq").write_text(write_dimacs(c_fat(200, 2)))
    (tmp_path / "m.json").write_text(json.dumps({"time_limit": 0, "runs": [{"graph": "cf.clq", "k": 30}]}))
    (row,) = run_manifest(tmp_path / "m.json", tmp_path / "out.csv")
    assert row["status"] == "timeout" and row["eta"] == "-"
