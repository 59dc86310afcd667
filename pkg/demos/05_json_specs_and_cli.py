"""
JSON descriptions and the command line
======================================

The same descriptions drive both the library and the quandle-euler command.
"""

import pathlib
import subprocess
import sys

from quandle_euler import euler_characteristic, parse_spec, resolve
from quandle_euler.errors import QuandleError

SPECS = pathlib.Path(__file__).parent / "specs"

for path in sorted(SPECS.glob("*.json")):
    try:
        X = resolve(parse_spec(path.read_text()))
    except QuandleError as exc:
        print(f"{path.name:<26} rejected: {exc}")
        continue
    print(f"{path.name:<26} size {X.size:>3}  chi {euler_characteristic(X).value}")

nested = '{"type": "product", "factors": [{"type": "dihedral", "n": 3}, {"type": "sphere", "dim": 2}]}'
print("\nR3 x DS^2 from a string:", euler_characteristic(resolve(parse_spec(nested))).value)

try:
    parse_spec('{"type": "sphere"}')
except QuandleError as exc:
    print("bad description:", exc)

# the command line, run as a module so no install step is needed
cmd = [sys.executable, "-m", "quandle_euler", "--json", "euler", str(SPECS / "sphere2.json")]
done = subprocess.run(cmd, capture_output=True, text=True)
print("\n$ quandle-euler --json euler sphere2.json")
print(done.stdout.strip(), " exit", done.returncode)

cmd = [sys.executable, "-m", "quandle_euler", "check", str(SPECS / "cycle3.json"),
       str(SPECS / "cycle3.json"), "--law", "union"]
done = subprocess.run(cmd, capture_output=True, text=True)
print("\n$ quandle-euler check cycle3.json cycle3.json --law union")
print(done.stdout.strip(), " exit", done.returncode)
