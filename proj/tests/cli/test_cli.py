# Copyright 2026 The resgerm Authors
# SPDX-License-Identifier: Apache-2.0
"""End-to-end checks of the resgerm CLI: exit codes, report schemas,
round trips and determinism."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CLI, SPECS, SCHEMAS, SCRATCH = (pathlib.Path(a) for a in sys.argv[1:5])
SCRATCH.mkdir(parents=True, exist_ok=True)

registry = Registry()
for path in SCHEMAS.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))

failures = []


def check(cond, message):
    if not cond:
        failures.append(message)
        print("FAIL", message)


def validate(doc, schema_name, label):
    schema = registry.contents(schema_name + ".schema.json")
    validator = jsonschema.Draft202012Validator(schema, registry=registry)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
    for e in errors[:5]:
        check(False, f"{label}: {list(e.path)}: {e.message}")


def run(*args, expect=0):
    proc = subprocess.run([str(CLI), *map(str, args)], capture_output=True, text=True)
    check(proc.returncode == expect, f"{' '.join(map(str, args))}: exit {proc.returncode}, expected {expect}: "
                                     f"{proc.stderr.strip()}")
    return proc


def report(verb, spec, *extra):
    out = SCRATCH / f"{verb}_{pathlib.Path(spec).stem}.json"
    run(verb, spec, "--out", out, *extra)
    return json.loads(out.read_text()), out


for spec in sorted(SPECS.glob("*.json")):
    validate(json.loads(spec.read_text()), "germ_spec", spec.name)

family = SPECS / "attracting_family.json"
no_basin = SPECS / "no_basin.json"

for verb, schema in [("analyze", "analysis"), ("classify", "classify"), ("check", "check")]:
    for spec in (family, no_basin):
        doc, _ = report(verb, spec)
        validate(doc, schema, f"{verb} {spec.name}")

doc, _ = report("analyze", family)
check(doc["theorem_applicable"] is True, "family: theorem applicable")
doc, _ = report("analyze", no_basin)
check(doc["theorem_applicable"] is False, "no-basin germ: theorem not applicable")
check(doc["directions"][0]["obstruction"]["identity_holds"], "no-basin germ: obstruction identity")

doc, _ = report("analyze", SPECS / "linear.json")
validate(doc, "analysis", "analyze linear")
check(doc["weighted_order"] == ">= 8" and doc["shadow"] is None, "linear germ has infinite weighted order")

# Normalization: the emitted normal form is itself a valid spec and a fixed point.
doc, out = report("normalize", SPECS / "nonresonant_quadratic.json")
validate(doc, "normalize", "normalize")
check(doc["conjugation"]["max_residual"] < 1e-10, "normalize residual")
nf = SCRATCH / "normal_form.json"
nf.write_text(json.dumps(doc["normal_form"]))
again, _ = report("normalize", nf)
check(again["normal_form"] == doc["normal_form"], "normal form is idempotent")
check(again["conjugation"]["removed_terms"] == [], "second normalization removes nothing")

# Probe: schema, traces and byte-identical reruns across thread counts.
trace_dir = SCRATCH / "traces"
args = ["--samples", "6", "--max-iter", "3000", "--seed", "5", "--trace-samples", "2", "--trace-dir", trace_dir]
_, first = report("probe", family, *args, "--threads", "1")
text1 = first.read_text()
_, second = report("probe", family, *args, "--threads", "4")
check(text1 == second.read_text(), "probe output is byte-identical")
probe = json.loads(text1)
validate(probe, "probe", "probe")
check(probe["trace_files"] == 2, "two trace files")
csvs = sorted(trace_dir.glob("*.csv"))
check(len(csvs) == 2, "trace CSVs written")
if csvs:
    header = csvs[0].read_text().splitlines()[0]
    check(header.startswith("iter,re_z1,im_z1"), "trace CSV header")

# Probing a degenerate direction proceeds with warnings.
doc, _ = report("probe", no_basin, "--samples", "2", "--max-iter", "10")
check(any("degenerate" in w for w in doc["warnings"]), "degenerate probe warns")

# Exit codes.
run("analyze", SCRATCH / "missing.json", expect=1)
bad = SCRATCH / "bad.json"
bad.write_text("{\"dimension\": 2}")
run("analyze", bad, expect=2)
run("analyze", SPECS / "half_turns.json", expect=3)
run("normalize", SPECS / "near_resonant.json", expect=4)
run("probe", SPECS / "linear.json", "--samples", "2", expect=5)
run("probe", family, "--direction", "7", expect=2)
run("probe", family, "--smax", "-1", expect=2)

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
