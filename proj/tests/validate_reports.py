"""Run the CLI with --json on a spread of commands and validate every report
against docs/report.schema.json. Usage: validate_reports.py <discarr> <schema>"""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["detect", "gallery:octahedral", "--k", "2"],
    ["detect", "gallery:dodecahedral", "--k", "3"],
    ["detect", "gallery:polygon-7"],
    ["classify", "gallery:f4"],
    ["classify", "gallery:crapo"],
    ["lattice", "gallery:dodecahedral"],
    ["lattice", "gallery:octahedral", "--max-rank", "2"],
    ["table", "mformula"],
    ["table", "classification"],
    ["table", "dodecahedral"],
    ["gallery", "list"],
    ["gallery", "show", "f4"],
    ["reference", "--n", "7", "--k", "3", "--seed", "2"],
]


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([exe, *args, "--json"], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        report = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(report), key=str)
        for e in errors[:3]:
            print(f"FAIL {label}: {e.message} at {list(e.absolute_path)}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
