#!/usr/bin/env python3
"""Validate `crprime run <suite> --format json` output against the report schema."""
import json
import subprocess
import sys

import jsonschema


def main():
    exe, schema_path, suite = sys.argv[1:4]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    for extra in ([], ["--timings"]):
        proc = subprocess.run([exe, "run", suite, "--format", "json", *extra], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            sys.exit(f"unexpected exit code {proc.returncode}: {proc.stderr}")
        report = json.loads(proc.stdout)
        jsonschema.validate(report, schema)
        ids = [c["id"] for c in report["checks"]]
        if ids != sorted(ids) or len(set(ids)) != len(ids):
            sys.exit("check ids are not sorted and unique")
        counts = {s: sum(c["status"] == s for c in report["checks"]) for s in ("pass", "fail", "recorded")}
        if counts != report["summary"]:
            sys.exit(f"summary {report['summary']} does not match {counts}")
        if (proc.returncode == 0) != (counts["fail"] == 0):
            sys.exit("exit code disagrees with the fail count")
    print(f"{suite}: schema ok")


if __name__ == "__main__":
    main()
