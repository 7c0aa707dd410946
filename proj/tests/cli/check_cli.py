"""Runs the command-line tool on the shipped networks and validates its output."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

cli, root = pathlib.Path(sys.argv[1]), pathlib.Path(sys.argv[2])
schema = json.loads((root / "docs" / "msregion.schema.json").read_text())
networks = sorted((root / "data" / "networks").glob("*.crn"))
failures = []


def run(*args, expect=0):
    proc = subprocess.run([str(cli), *map(str, args)], capture_output=True, text=True)
    if proc.returncode != expect:
        failures.append(f"{' '.join(map(str, args))}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
        return None
    return proc.stdout


def validate(doc, kind, label):
    ref = dict(schema, **{"$ref": f"#/$defs/{kind}"})
    ref.pop("anyOf")
    try:
        jsonschema.validate(doc, ref)
    except jsonschema.ValidationError as e:
        failures.append(f"{label}: {e.message}")


for net in networks:
    for cmd, kind, extra in [
        ("parse", "parse", []),
        ("analyze", "analyze", ["--samples", "20"]),
        ("region", "region_output", ["--kind", "allowing"]),
        ("region", "region_output", ["--kind", "enabling"]),
        ("witness", "witness", []),
        ("probe", "probe_output", ["--samples", "200"]),
    ]:
        out = run(cmd, net, *extra)
        if out is not None:
            validate(json.loads(out), kind, f"{cmd} {net.name}")
    if run("--format", "text", "analyze", net, "--no-verify") in ("", None):
        failures.append(f"text analyze {net.name}: empty output")

out = run("count-roots", "--poly", "x^2-3x+2")
if out is not None:
    doc = json.loads(out)
    validate(doc, "count_roots", "count-roots")
    if (doc["descartes"], doc["sturm"], doc["trichotomy"]["count"], doc["trichotomy"]["D"]) != (2, 2, 2, -1):
        failures.append(f"count-roots x^2-3x+2: {doc}")

out = run("witness", root / "data" / "networks" / "running.crn", "--at", "1,1,5/2")
if out is not None and [s["x"] for s in json.loads(out)["steady_states"]["states"]] != [["1/2", 2], [2, "1/2"]]:
    failures.append(f"running example witness: {out}")

with tempfile.TemporaryDirectory() as tmp:
    bad = pathlib.Path(tmp) / "bad.crn"
    bad.write_text("A -> -> B\n")
    unsupported = pathlib.Path(tmp) / "unsupported.crn"
    unsupported.write_text("A + B -> C\nC -> A\nB -> 0\n")
    run("analyze", bad, expect=2)
    run("analyze", unsupported, expect=3)
    run("no-such-command", expect=1)
    csv = pathlib.Path(tmp) / "samples.csv"
    run("probe", root / "data" / "networks" / "three_reactions.crn", "--samples", "100", "--csv", csv)
    if not csv.exists() or not csv.read_text().startswith("k1,k2,k3,conjunct,component\n"):
        failures.append("probe --csv did not write the expected header")

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failure(s) across {len(networks)} networks")
sys.exit(1 if failures else 0)
