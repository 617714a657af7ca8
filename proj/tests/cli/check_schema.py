#!/usr/bin/env python3
"""Run the qfcodes binary and validate every JSON line against the result schema."""
import json
import subprocess
import sys

import jsonschema

# (arguments, expected exit code, whether stdout carries records)
CASES = [
    (["classify", "--p", "3", "--m", "2", "--coeffs", "1,2:1"], 0, True),
    (["classify", "--p", "5", "--m", "3", "--canonical", "r=3,type=II,mu=gamma"], 0, True),
    (["classify", "--p", "3", "--e", "2", "--m", "2", "--trace", "1"], 0, True),
    (["verify", "--p", "3", "--m", "3", "--canonical", "r=3,type=II,mu=1", "--a", "1"], 0, True),
    (["verify", "--p", "3", "--m", "2", "--canonical", "r=2,type=I", "--a", "1"], 0, True),
    (["verify", "--p", "5", "--m", "2", "--canonical", "r=2,type=III", "--a", "all-nonzero"], 0, True),
    (["verify", "--p", "3", "--m", "2", "--canonical", "r=2,type=I", "--a", "1", "--convention", "paper"], 1, True),
    (["verify", "--p", "3", "--m", "2", "--canonical", "r=2,type=I", "--a", "0"], 2, True),
    (["verify", "--p", "4", "--m", "2", "--canonical", "r=2,type=I", "--a", "1"], 2, False),
    (["verify", "--p", "3", "--m", "20", "--canonical", "r=2,type=I", "--a", "1"], 3, False),
    (["minimal", "--p", "5", "--m", "4", "--canonical", "r=4,type=I", "--a", "1"], 0, True),
    (["minimal", "--p", "3", "--m", "4", "--canonical", "r=4,type=I", "--a", "1", "--pair-budget", "200", "--seed", "3"], 0, True),
    (["minimal", "--p", "3", "--m", "3", "--canonical", "r=0,type=I", "--a", "1"], 2, False),
    (["sweep", "--q-list", "3,5", "--m-max", "2"], 0, True),
    (["sweep", "--q-list", "", "--m-max", "2"], 0, True),
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    for args, want_code, has_records in CASES:
        proc = subprocess.run([binary, *args], capture_output=True, text=True, timeout=300)
        label = " ".join(args)
        if proc.returncode != want_code:
            print(f"FAIL exit {proc.returncode} != {want_code}: {label}\n{proc.stderr}")
            failures += 1
            continue
        lines = [line for line in proc.stdout.splitlines() if line.strip()]
        if has_records and not lines:
            print(f"FAIL no output: {label}")
            failures += 1
            continue
        for line in lines:
            errors = sorted(validator.iter_errors(json.loads(line)), key=lambda e: list(e.path))
            if errors:
                print(f"FAIL schema: {label}\n  {errors[0].message} at {list(errors[0].path)}")
                failures += 1
                break
        else:
            print(f"ok   {label} ({len(lines)} records)")
    print(f"{len(CASES) - failures} of {len(CASES)} cases passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
