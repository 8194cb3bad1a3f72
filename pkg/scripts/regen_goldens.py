#!/usr/bin/env python3
"""Regenerate the frozen catalog golden files from the symbolic formulas.

Run from the repository root after an intentional catalog change, then
review the diff; tests compare CLI output byte-for-byte against these.
"""

from pathlib import Path

from scorza.catalog import hermitian_json_obj, scorza_json_obj
from scorza.cli import render_json

OUT = Path(__file__).resolve().parent.parent / "src" / "scorza" / "data" / "catalog"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for k in range(2, 7):
        path = OUT / f"scorza_k{k}.json"
        path.write_text(render_json(scorza_json_obj(k)), encoding="utf-8")
        print("wrote", path)
    for r in range(1, 7):
        path = OUT / f"hermitian_r{r}.json"
        path.write_text(render_json(hermitian_json_obj(r)), encoding="utf-8")
        print("wrote", path)


if __name__ == "__main__":
    main()
