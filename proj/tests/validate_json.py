"""Validates `evidentia eval --format json` output against the shipped schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main(exe, schema_path, fixtures):
    schema = json.loads(pathlib.Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    checked = 0
    extra = pathlib.Path(fixtures).parent / "tests" / "data" / "edge.evd"
    for path in sorted(pathlib.Path(fixtures).glob("*.evd")) + [extra]:
        for flags in ([], ["--scaled"], ["--scaled", "--digits", "0", "--log-base", "10"]):
            run = subprocess.run([exe, "eval", str(path), "--format", "json", *flags],
                                 capture_output=True, text=True)
            if run.returncode == 2 or not run.stdout:
                continue
            doc = json.loads(run.stdout)
            errors = sorted(validator.iter_errors(doc), key=str)
            for e in errors:
                print(f"{path.name} {flags}: {e.message} at {list(e.absolute_path)}")
            if errors:
                return 1
            checked += len(doc["records"])
    print(f"{checked} records valid")
    return 0 if checked else 1


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:]))
