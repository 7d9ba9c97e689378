"""Validate census reports produced by the CLI against the published schema."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def main():
    tool, schema_path, fixtures = sys.argv[1], sys.argv[2], pathlib.Path(sys.argv[3])
    schema = json.loads(pathlib.Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    runs = [
        ["--structure", "v3", "--budget", "9"],
        ["--structure", "v2", "--budget", "6", "--params", "0,1"],
        ["--structure", "nat:5", "--budget", "5"],
        ["--structure", str(fixtures / "cycle3.json"), "--budget", "9"],
        ["--structure", "v1", "--budget", "2", "--params", "0"],
    ]
    failed = 0
    with tempfile.TemporaryDirectory() as tmp:
        for i, args in enumerate(runs):
            out = pathlib.Path(tmp) / f"census{i}.json"
            subprocess.run([tool, "census", *args, "--out", str(out)], check=True)
            report = json.loads(out.read_text())
            errors = list(validator.iter_errors(report))
            for e in errors:
                print(f"{' '.join(args)}: {e.message}")
            failed += bool(errors)
            # Every definable mask must also be invariant.
            masks = {d["mask"] for d in report["definable"]}
            if not masks <= set(report["invariant"]):
                print(f"{' '.join(args)}: definable mask outside the invariant set")
                failed += 1
    print(f"{len(runs) - failed}/{len(runs)} census reports valid")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
