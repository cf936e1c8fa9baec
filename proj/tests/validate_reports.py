"""Validate CLI analysis reports against the shipped JSON schema."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

cli, source = sys.argv[1], Path(sys.argv[2])
schema = json.loads((source / "schema" / "report.schema.json").read_text())
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

inputs = [
    ("cycle", ["5"]),
    ("cycle", ["4"]),
    ("path", ["4"]),
    ("complete", ["1"]),
    ("complete", ["2"]),
    ("complete", ["4"]),
    ("empty", ["0"]),
    ("empty", ["3"]),
    ("cross_polytope", ["3"]),
    ("cross_polytope", ["4"]),
    ("complete_multipartite", ["1", "3"]),
    ("torus_grid", ["4", "4"]),
    ("icosahedron", []),
]

failures = 0
checked = 0


def check(name, text):
    global failures, checked
    report = json.loads(text)
    errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
    checked += 1
    for e in errors:
        failures += 1
        print(f"{name}: {'/'.join(map(str, e.path))}: {e.message}")


for family, params in inputs:
    g6 = subprocess.run([cli, "gen", family, *params], check=True, capture_output=True, text=True).stdout
    for extra in ([], ["--timing"]):
        run = subprocess.run([cli, "analyze", "--format", "g6", *extra], input=g6, capture_output=True, text=True)
        if run.returncode not in (0, 1):
            failures += 1
            print(f"{family} {params}: exit {run.returncode}: {run.stderr.strip()}")
            continue
        check(f"{family} {params} {extra}", run.stdout)

wheel = "0 1\n1 2\n2 3\n3 0\nhub 0\nhub 1\nhub 2\nhub 3\n"
run = subprocess.run([cli, "analyze", "--format", "edges"], input=wheel, capture_output=True, text=True)
check("wheel", run.stdout)

for golden in sorted((source / "tests" / "golden").glob("*.json")):
    check(golden.name, golden.read_text())

# the schema must reject broken reports
p4 = json.loads(subprocess.run([cli, "analyze", "--format", "edges"], input="a b\nb c\nc d\n",
                               capture_output=True, text=True).stdout)
broken = [dict(p4, schema_version=2), {k: v for k, v in p4.items() if k != "coxeter"}]
no_caveat = json.loads(json.dumps(p4))
del no_caveat["certificate"]["caveat"]
broken.append(no_caveat)
for i, report in enumerate(broken):
    if validator.is_valid(report):
        failures += 1
        print(f"broken report {i} accepted")

print(f"{checked} reports checked, {failures} schema violations")
sys.exit(1 if failures or checked == 0 else 0)
