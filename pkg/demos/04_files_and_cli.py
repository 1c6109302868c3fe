"""
Reading matrices from files and using the command line
======================================================

Matrices can be given as JSON (``{"n": .., "entries": [[..]]}`` with complex
entries as ``{"re": .., "im": ..}``) or as Matrix Market files.  The same
files drive the ``schurbounds`` command.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

from schurbounds import analyze
from schurbounds.matrixio import read_matrix
from schurbounds.report import render_text

workdir = Path(tempfile.mkdtemp())

# %%
# A 3x3 complex Hermitian matrix in JSON.  Its diagonal is not sorted, so the
# report records the permutation that was applied.
doc = {
    "n": 3,
    "entries": [
        [4, {"re": 1, "im": -1}, 0.5],
        [{"re": 1, "im": 1}, 1, {"re": 0, "im": 2}],
        [0.5, {"re": 0, "im": -2}, 2],
    ],
}
json_path = workdir / "m.json"
json_path.write_text(json.dumps(doc))
print(render_text(analyze(read_matrix(json_path), str(json_path.name), verify=True)))

# %%
# The same matrix, lower triangle only, in Matrix Market form.
mm_path = workdir / "m.mtx"
mm_path.write_text(
    "%%MatrixMarket matrix coordinate complex hermitian\n"
    "3 3 6\n1 1 4 0\n2 1 1 1\n3 1 0.5 0\n2 2 1 0\n3 2 0 -2\n3 3 2 0\n"
)
print(render_text(analyze(read_matrix(mm_path), str(mm_path.name))))

# %%
# Command line equivalents.
for argv in (["verify", "-i", str(mm_path)], ["example", "paper-B"], ["random", "--n", "4", "--seed", "1", "--count", "3"]):
    proc = subprocess.run([sys.executable, "-m", "schurbounds", *argv], capture_output=True, text=True)
    print("$ schurbounds", " ".join(argv), f"  (exit {proc.returncode})")
    print(proc.stdout)
