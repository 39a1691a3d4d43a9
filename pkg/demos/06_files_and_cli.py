"""
Files, reports and the command line
===================================

Lattices and games round-trip through JSON documents; the ``veinott``
command runs the same analyses and can emit DOT for Graphviz.
"""

import json
import tempfile
from pathlib import Path

from veinott import catalog, io
from veinott.cli import run
from veinott.games import coordination_game

out = Path(tempfile.mkdtemp())
(out / "pentagon.json").write_text(io.dumps_lattice(catalog.n5()))
(out / "game.json").write_text(io.dumps_game(coordination_game(catalog.chain(2))))
print((out / "pentagon.json").read_text())

for argv in (
    ["check", str(out / "pentagon.json")],
    ["sl", "n5"],
    ["glb", "boolean:2", "--family", "{bot,p};{bot,q}"],
    ["game", str(out / "game.json")],
    ["counterexample"],
):
    status, text = run(argv)
    print("$ veinott", " ".join(argv), f"(exit {status})")
    print(text)

# %%
status, text = run(["sl", "m3", "--format", "machine"])
print(json.dumps(json.loads(text)["failure"], indent=1))
print(run(["export", "n5", "--format", "dot"])[1])
