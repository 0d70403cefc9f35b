"""Regenerate the bundled quiver JSON files under quivers/."""

from __future__ import annotations

import pathlib

from cqt import (
    alternating_cycle_quiver,
    cycle_quiver,
    dynkin_quiver,
    g_quiver,
    kronecker_quiver,
    t_quiver,
)

OUT = pathlib.Path(__file__).resolve().parent.parent / "quivers"


def main() -> None:
    OUT.mkdir(exist_ok=True)
    files = {}
    for n in range(3, 9):
        files[f"c{n}"] = cycle_quiver(n)
    for a, b in [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (3, 5)]:
        files[f"g{a}{b}"] = g_quiver(a, b)
        files[f"t{a}{b}"] = t_quiver(a, b)
    for n in range(2, 6):
        files[f"a{n}-linear"] = dynkin_quiver("A", n)
    for n in (4, 5):
        files[f"d{n}"] = dynkin_quiver("D", n)
    for n in (6, 7, 8):
        files[f"e{n}"] = dynkin_quiver("E", n)
    files["kronecker"] = kronecker_quiver()
    files["alt4cycle"] = alternating_cycle_quiver(4)
    files["alt6cycle"] = alternating_cycle_quiver(6)
    for name, q in files.items():
        (OUT / f"{name}.json").write_text(q.to_json(indent=2) + "\n", encoding="utf-8")
    print(f"wrote {len(files)} files to {OUT}")


if __name__ == "__main__":
    main()
