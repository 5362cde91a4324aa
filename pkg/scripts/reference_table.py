#!/usr/bin/env python3
"""Reference instances and ablations through the bench harness.

Writes the c-fat instances (generated, see ``clique_interdict.generators``)
plus any DIMACS files found in ``--data`` into a work directory, builds a
manifest, and runs it once per configuration:

    python scripts/reference_table.py --out results/ --time-limit 1800
    python scripts/reference_table.py --out results/ --data ~/dimacs --ablations

One CSV per configuration lands in ``--out``; a compact eta/time table is
printed at the end.
"""

from __future__ import annotations

import argparse
import csv
import json
from pathlib import Path

from clique_interdict.bench import run_manifest
from clique_interdict.generators import c_fat
from clique_interdict.graph import write_dimacs

SCHEDULE = {
    "c-fat200-1": [10, 15, 20, 25, 30],
    "c-fat200-2": [10, 30],
    "brock200_2": [10, 25, 30],
}
GENERATED = {"c-fat200-1": (200, 1), "c-fat200-2": (200, 2)}
CONFIGS = {
    "full": {},
    "no-reduce": {"disable_reduce": True},
    "no-ub": {"disable_ub": True},
    "no-perm-cuts": {"disable_ordering_cuts": True},
}


def prepare(work: Path, data: Path | None) -> list[dict]:
    work.mkdir(parents=True, exist_ok=True)
    runs = []
    for name, ks in SCHEDULE.items():
        target = work / f"{name}.clq"
        if name in GENERATED:
            n, c = GENERATED[name]
            target.write_text(write_dimacs(c_fat(n, c), [f"generated c-fat n={n} c={c}"]))
        elif data is not None and (data / f"{name}.clq").is_file():
            target.write_text((data / f"{name}.clq").read_text())
        else:
            print(f"skipping {name}: no file in --data")
            continue
        runs += [{"graph": target.name, "k": k, "name": f"{name}/k={k}"} for k in ks]
    return runs


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--data", type=Path, default=None, help="directory holding DIMACS .clq files")
    ap.add_argument("--time-limit", type=float, default=1800.0)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--ablations", action="store_true")
    args = ap.parse_args()

    runs = prepare(args.out / "instances", args.data)
    manifest = args.out / "instances" / "manifest.json"
    manifest.write_text(json.dumps({"time_limit": args.time_limit, "seed": args.seed, "runs": runs}, indent=1))

    configs = CONFIGS if args.ablations else {"full": {}}
    table: dict[str, dict[str, str]] = {}
    for label, flags in configs.items():
        out_csv = args.out / f"{label}.csv"
        run_manifest(manifest, out_csv, args.workers, flags)
        with open(out_csv) as fh:
            for row in csv.DictReader(fh):
                table.setdefault(row["instance"], {})[label] = f"{row['eta']} ({row['time_ms']} ms)"

    width = max(map(len, table), default=10)
    print("instance".ljust(width), *(c.ljust(18) for c in configs))
    for inst, cells in table.items():
        print(inst.ljust(width), *(cells.get(c, "").ljust(18) for c in configs))


if __name__ == "__main__":
    main()
