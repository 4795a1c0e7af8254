"""Runs `tiletopo analyze --json` on each input and validates it against the schema."""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path, *inputs = sys.argv[1:]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failed = 0
    for spec in inputs:
        args = [cli, "analyze", "--json"] + (["--twindragon", spec] if len(spec) == 1 else [spec])
        out = subprocess.run(args, check=True, capture_output=True, text=True).stdout
        errors = sorted(validator.iter_errors(json.loads(out)), key=lambda e: list(e.path))
        for e in errors:
            print(f"{spec}: {'/'.join(map(str, e.path))}: {e.message}")
        failed += bool(errors)
        print(f"{spec}: {'invalid' if errors else 'valid'}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
