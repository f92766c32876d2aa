"""Validate JSON documents emitted by the ricci CLI against the shipped schema."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

RECORD_KEYS = {"index", "id", "status", "error", "graph6", "n", "m", "max_degree", "min_curvature",
               "bound", "tight", "satisfies_c1", "satisfies_c2", "candidate_counterexample"}


def run(cli, args, stdin=""):
    proc = subprocess.run([cli, *args], input=stdin, capture_output=True, text=True, check=False)
    return proc.returncode, proc.stdout


def no_floats(node, path="$"):
    if isinstance(node, float):
        raise AssertionError(f"floating-point value at {path}")
    if isinstance(node, dict):
        for k, v in node.items():
            if k != "seconds":
                no_floats(v, f"{path}.{k}")
    if isinstance(node, list):
        for i, v in enumerate(node):
            no_floats(v, f"{path}[{i}]")


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)

    _, q3 = run(cli, ["gen", "hypercube", "3"])
    _, c6 = run(cli, ["gen", "cycle", "6"])
    cases = [
        (["curv", "all", "--json", "--witness", "--alpha", "1/3"], q3, 0),
        (["curv", "pair", "--json", "--x", "0", "--y", "7"], q3, 0),
        (["verify", "bound", "--json", "--witness"], q3, 0),
        (["verify", "gamma", "--json"], q3, 0),
        (["verify", "matching", "--json", "--witness"], c6, 0),
        (["verify", "regular", "--json"], q3, 0),
        (["verify", "diameter", "--json"], q3, 0),
        (["verify", "iso-qd", "--json", "--seed", "4"], q3, 0),
        (["verify", "iso-qd", "--json"], c6, 1),
        (["verify", "noninteger", "--json", "--s", "7/3"], "", 0),
        (["scan", "c1", "--json", "--source", "enum:5"], "", 0),
        (["scan", "c2", "--json", "--source", "enum:5"], "", 0),
        (["scan", "c5pow", "--json", "--k", "1"], "", 0),
    ]
    failures = 0
    for args, stdin, expected in cases:
        code, out = run(cli, args, stdin)
        label = " ".join(args)
        try:
            assert code == expected, f"exit {code}, expected {expected}"
            doc = json.loads(out)
            validator.validate(doc)
            no_floats(doc)
            print(f"ok    {label}")
        except (AssertionError, json.JSONDecodeError, jsonschema.ValidationError) as err:
            failures += 1
            print(f"FAIL  {label}: {err}")

    # Streamed scan records: every line is a JSON object with known keys and exact rationals.
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "records.jsonl")
        code, _ = run(cli, ["scan", "c1", "--source", "enum:5", "--out", path])
        with open(path, encoding="utf-8") as fh:
            lines = [json.loads(line) for line in fh]
        try:
            assert code == 0 and len(lines) == 30
            for rec in lines:
                assert set(rec) <= RECORD_KEYS, set(rec) - RECORD_KEYS
                no_floats(rec)
                if "min_curvature" in rec:
                    jsonschema.validate(rec["min_curvature"], {"$ref": "#/$defs/rational", "$defs": schema["$defs"]})
            print("ok    scan records")
        except AssertionError as err:
            failures += 1
            print(f"FAIL  scan records: {err}")

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
