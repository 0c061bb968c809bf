#!/usr/bin/env python3
"""Runs the CLI on the sample data and validates every output against its schema."""
import json
import subprocess
import sys
from pathlib import Path

from jsonschema import Draft202012Validator

binary, root = sys.argv[1], Path(sys.argv[2])
schemas = root / "schemas"
data = root / "data"

cases = [
    ("classify", ["--input", data / "identity_tuple.json", "--exact"], 0),
    ("classify", ["--input", data / "triangular_tuple.json"], 0),
    ("classify", ["--input", data / "principal_tuple.json", "--exact"], 0),
    ("classify", ["--input", data / "phase_point.json", "--phase-point"], 0),
    ("witness", ["--input", data / "triangular_tuple.json", "--exact"], 0),
    ("witness", ["--input", data / "triangular_tuple.json"], 0),
    ("witness", ["--input", data / "identity_tuple.json", "--exact"], 0),
    ("witness", ["--input", data / "principal_tuple.json", "--exact"], 1),
    ("invariants", ["--input", data / "triangular_tuple.json", "--exact"], 0),
    ("invariants", ["--input", data / "principal_tuple.json"], 0),
    ("sample", ["--kind", "su2", "--count", "2", "--seed", "1"], 0),
    ("sample", ["--kind", "su2-algebra", "--count", "2", "--seed", "1"], 0),
    ("sample", ["--kind", "sl2c", "--count", "2", "--seed", "1", "--bound", "3"], 0),
    ("sample", ["--kind", "sl2c", "--count", "2", "--seed", "1", "--exact"], 0),
    ("sample", ["--kind", "mu0", "--n", "3", "--seed", "1"], 0),
    ("sample", ["--kind", "diagonal", "--n", "3", "--seed", "1"], 0),
    ("reduce", ["--poly", data / "pT12.txt"], 0),
    ("radical-check", ["--n", "3", "--mu", "2,1,1", "--trials", "4", "--seed", "2"], 0),
    ("radical-check", ["--n", "2", "--mu", "1,-1"], 1),
    ("gauge-fix", ["--seed", "3"], 0),
    ("gauge-fix", ["--seed", "3", "--lattice", "2x3,periodic"], 0),
    ("energy", ["--seed", "3"], 0),
    ("energy", ["--lattice", "0x2"], 1),
    ("measure-density", ["--n", "2", "--seed", "3", "--bound", "3"], 0),
    ("measure-density", ["--input", data / "triangular_tuple.json"], 0),
    ("classify", ["--input", data / "missing.json"], 2),
]

failures = 0
for command, args, expected in cases:
    argv = [binary, command] + [str(a) for a in args]
    proc = subprocess.run(argv, capture_output=True, text=True)
    label = " ".join(str(a) for a in argv[1:])
    if proc.returncode != expected:
        print(f"FAIL exit {proc.returncode} != {expected}: {label}\n{proc.stderr}")
        failures += 1
        continue
    name = command if expected == 0 else "error"
    schema = json.loads((schemas / f"{name}.json").read_text())
    errors = list(Draft202012Validator(schema).iter_errors(json.loads(proc.stdout)))
    if errors:
        print(f"FAIL schema {name}: {label}")
        for e in errors[:5]:
            print("   ", e.message, list(e.absolute_path))
        failures += 1
    else:
        print(f"ok   {label}")

for path in sorted(schemas.glob("*.json")):
    Draft202012Validator.check_schema(json.loads(path.read_text()))
    if path.stem == "error":
        continue
    proc = subprocess.run([binary, path.stem, "--schema"], capture_output=True, text=True)
    if proc.returncode != 0 or json.loads(proc.stdout) != json.loads(path.read_text()):
        print(f"FAIL --schema output differs for {path.stem}")
        failures += 1

sys.exit(1 if failures else 0)
