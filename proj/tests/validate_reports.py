"""Runs the monideal tool over a spread of commands and inputs and validates
every JSON report against schema/report.schema.json."""

import copy
import json
import subprocess
import sys

import jsonschema

tool, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as fh:
    schema = json.load(fh)
validator = jsonschema.Draft202012Validator(schema)
jsonschema.Draft202012Validator.check_schema(schema)

INSTANCES = [
    "(x1, x2^2) & (x2, x3^2)",
    "x1*x2, x1*x3^2, x2^2",
    "(x1^2, x2) & (x2, x3)",
    "(x1, x2) & (x2, x3) & (x1, x3)",
    "(x1, x2, x3) & (x2, x3, x4) & (x1, x5) & (x2, x6, x7) & (x3, x8) & (x4, x9, x10)",
    "(x1^2, x2, x3) & (x3, x4^3)",
    "(x1) & (x2, x3^2)",
    "(x1, x2) & (x1^2, x2^2, x3)",  # embedded prime: several commands refuse it
    "x1*",                           # syntax error
]
COMMANDS = ["decompose", "assprimes", "sympow", "alpha", "polarize", "weighting", "hypergraph", "whisker",
            "waldschmidt", "c1", "simis", "c2", "resurgence", "membership"]


def run(args, stdin=""):
    proc = subprocess.run([tool, *args, "--json", "--counterexamples", "/dev/null"], input=stdin,
                          capture_output=True, text=True, check=False)
    report = json.loads(proc.stdout)
    expected = {"ok": 0, "refuted": 2, "error": 1}[report["status"]]
    if proc.returncode != expected:
        raise SystemExit(f"exit code {proc.returncode} does not match status in {args}")
    return report


def check(report, what):
    errors = sorted(validator.iter_errors(report), key=str)
    if errors:
        raise SystemExit(f"{what}: {errors[0].message} at {list(errors[0].absolute_path)}")


reports = []
for text in INSTANCES:
    for cmd in COMMANDS:
        extra = ["--monomial", "x1*x2", "-t", "2"] if cmd == "membership" else []
        extra += ["--max-s", "3", "--max-t", "3"]
        reports.append((f"{cmd} on {text!r}", run([cmd, *extra], text)))

reports.append(("generate", run(["generate", "--count", "5", "--seed", "4", "--filter", "conflict-only"])))
reports.append(("generate error", run(["generate", "--count", "1", "--n", "2", "2", "--r", "1", "1",
                                       "--filter", "conflict-only"])))
corpus = "".join(f"i{k}: {t}\n" for k, t in enumerate(INSTANCES))
reports.append(("batch", run(["batch", "--command", "c2", "--max-s", "2"], corpus)))
reports.append(("batch error", run(["batch", "--command", "generate"], corpus)))

statuses = set()
for what, report in reports:
    check(report, what)
    statuses.add(report["status"])
if statuses != {"ok", "error"} and statuses != {"ok", "error", "refuted"}:
    raise SystemExit(f"unexpected status spread {statuses}")

# The schema must reject malformed reports, not just accept everything.
good = reports[0][1]
bad = []
for mutate in (
    lambda r: r.update(schema_version="0.9.0"),
    lambda r: r.pop("status"),
    lambda r: r["outputs"].pop("decomposition"),
    lambda r: r["outputs"].update(extra=1),
    lambda r: r.update(error={"code": "x", "message": "y"}),
):
    r = copy.deepcopy(good)
    mutate(r)
    bad.append(r)
for r in bad:
    if validator.is_valid(r):
        raise SystemExit(f"schema accepted a malformed report: {json.dumps(r)[:200]}")

# Batch output does not depend on the number of worker threads.
one = run(["batch", "--command", "c1", "--threads", "1", "--no-timings"], corpus)
three = run(["batch", "--command", "c1", "--threads", "3", "--no-timings"], corpus)
if one != three:
    raise SystemExit("batch output depends on the thread count")

print(f"{len(reports)} reports valid; {len(bad)} malformed reports rejected")
