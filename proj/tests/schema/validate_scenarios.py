"""Validate every shipped scenario against the scenario JSON schema."""
import json
import pathlib
import sys

import jsonschema


def main() -> int:
    schema_path, scenario_dir = map(pathlib.Path, sys.argv[1:3])
    schema = json.loads(schema_path.read_text())
    cls = jsonschema.validators.validator_for(schema)
    cls.check_schema(schema)
    validator = cls(schema)
    failures = 0
    files = sorted(scenario_dir.glob("*.json"))
    for path in files:
        errors = list(validator.iter_errors(json.loads(path.read_text())))
        for e in errors:
            print(f"{path.name}: {'/'.join(map(str, e.path))}: {e.message}")
        failures += bool(errors)
    bad = {"version": 1, "ring": "Z", "objects": {}, "pipeline": [{"args": {}}]}
    if validator.is_valid(bad):
        print("schema accepts a step without an op")
        failures += 1
    print(f"checked {len(files)} scenarios, {failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
