"""Regenerate the bundled census gluing tables from their isosigs.

Run from the repository root:  python tools/make_fixtures.py
"""
from __future__ import annotations

import json
from pathlib import Path

from gendw.census import CENSUS
from gendw.isosig import from_isosig
from gendw.triangulation import Triangulation

OUT = Path(__file__).resolve().parents[1] / "src" / "gendw" / "data" / "census"


def _dump(tri: Triangulation, path: Path) -> None:
    rows = ",\n".join(
        "    [" + ", ".join(json.dumps({"tet": u, "perm": list(p)}) for u, p in row) + "]"
        for row in tri.gluings
    )
    path.write_text(f'{{\n  "tets": {tri.tet_count},\n  "gluings": [\n{rows}\n  ]\n}}\n',
                    encoding="utf-8")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for name, entry in CENSUS.items():
        if entry.isosig:
            _dump(from_isosig(entry.isosig), OUT / f"{name}.json")
    identity = (0, 1, 2, 3)
    s3 = Triangulation(tuple(tuple((1 - t, identity) for _ in range(4)) for t in range(2)))
    _dump(s3, OUT / "s3_double.json")


if __name__ == "__main__":
    main()
