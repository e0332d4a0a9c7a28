"""
Command-line tour
=================

Every capability is reachable from the ``synla`` command. Matrix files are
JSON documents ``{"n": n, "matrices": [{"name": ..., "rows": [[...]]}]}``.
"""

# %%
import json
import tempfile
from pathlib import Path

from synla.cli import main

work = Path(tempfile.mkdtemp())
spaces = work / "blocks.json"

# %% Generate a noncommutative subspace and certify it
main(["gen", "--kind", "subspace-blocks", "--n", "3", "--seed", "7", "--output", str(spaces)])
code = main(["certify", "--input", str(spaces), "--budget", "100"])
print("exit code:", code)

# %% The same in JSON, for machine consumption
sym2 = work / "sym2.json"
sym2.write_text(json.dumps({"n": 2, "matrices": [
    {"name": "e11", "rows": [[1, 0], [0, 0]]},
    {"name": "e22", "rows": [[0, 0], [0, 1]]},
    {"name": "e12", "rows": [[0, 1], [1, 0]]},
]}))
main(["commutant", "--input", str(sym2), "--format", "json"])

# %% Spectral operations on a single matrix
main(["ops", "--op", "resolution", "--input", str(sym2)])
