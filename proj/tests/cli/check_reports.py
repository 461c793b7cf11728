"""Validate CLI JSON reports against the shipped schema and check that
repeated runs give identical reports apart from timings."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def main() -> int:
    exe, fixtures, schema_path = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    validator = jsonschema.Draft202012Validator(schema)

    commands = [
        ["check", "3cc.sg"],
        ["check", "even_pair.sg"],
        ["cover", "--kind", "krieger", "3cc.sg"],
        ["cover", "--kind", "pastset", "gfc_justifying.sg"],
        ["cover", "--kind", "fischer", "even_shift.sg"],
        ["cover", "--kind", "gfc", "even_pair.sg"],
        ["cover", "--kind", "multiplicity", "one_synchronizing.sg"],
        ["layers", "3cc.sg"],
        ["pcg", "ex52_fischer.sg"],
        ["ideals", "even_shift.sg"],
        ["condstar", "condstar_failure.sg"],
        ["condk", "3cc.sg"],
        ["expand", "--symbol", "1", "even_shift.sg"],
        ["equiv", "even_shift.sg", "golden_mean.sg"],
        ["construct", "pcg", "--dag", "ex52.dag"],
        ["construct", "charge", "2"],
        ["fixture", "3cc"],
    ]
    failures = 0
    for cmd in commands:
        args = [str(fixtures / a) if a.endswith((".sg", ".dag")) else a for a in cmd]
        runs = []
        for _ in range(2):
            proc = subprocess.run([exe, *args, "--json"], capture_output=True, text=True)
            if proc.returncode not in (0, 1):
                print(f"FAIL {' '.join(cmd)}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                break
            runs.append(json.loads(proc.stdout))
        if len(runs) != 2:
            continue
        errors = sorted(validator.iter_errors(runs[0]), key=lambda e: list(e.path))
        for err in errors:
            print(f"FAIL {' '.join(cmd)}: {'/'.join(map(str, err.path))}: {err.message}")
        failures += len(errors)
        for r in runs:
            r.pop("timings")
        if runs[0] != runs[1]:
            print(f"FAIL {' '.join(cmd)}: reports differ between runs")
            failures += 1
        elif not errors:
            print(f"ok   {' '.join(cmd)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
