#!/usr/bin/env python3
"""End-to-end checks of the zollech command-line surface."""

import json
import math
import subprocess
import sys
import tempfile
import os

BINARY = sys.argv[1]
failures = 0


def run(*args, expect_code=0):
    global failures
    result = subprocess.run([BINARY, *args], capture_output=True, text=True)
    if result.returncode != expect_code:
        failures += 1
        print(f"FAIL {' '.join(args)}: exit {result.returncode} != {expect_code}")
        print(result.stdout, result.stderr)
    return result


def check(cond, label):
    global failures
    if not cond:
        failures += 1
        print(f"FAIL {label}")


out = run("capacities", "--domain", "dstar-rp2", "--count", "7", "--exact")
check(out.stdout.strip() == "0, 4pi, 4pi, 4pi, 4pi, 4pi, 8pi", "rp2 capacity list")

out = run("capacities", "--domain", "dstar-s2", "--count", "9")
check(out.stdout.strip() == "0, 4pi, 4pi, 4pi, 8pi, 8pi, 8pi, 8pi, 8pi", "s2 capacity list")

out = run("capacities", "--domain", "ball:1", "--count", "6", "--format", "json")
doc = json.loads(out.stdout)
check(doc["schema"] == "zoll-ech/1", "schema field")
check(doc["values"][3] == {"num": 2, "den": 1, "pi": 0}, "json exact triple")

out = run("capacities", "--domain", "dstar-s2", "--count", "3", "--float")
check(out.stdout.strip().split(", ")[1] == "12.5663706143592", "float mode 15 digits")

# Byte-identical repeated invocation.
again = run("capacities", "--domain", "dstar-s2", "--count", "3", "--float")
check(again.stdout == out.stdout, "deterministic output")

out = run("capacities", "--domain", "ellipsoid:2pi,4pi", "--count", "4", "--format", "csv")
check(out.stdout.splitlines()[0] == "k,value", "csv header")
check(out.stdout.splitlines()[3] == "2,4pi", "csv row")

out = run("spectrum", "--model", "sstar-rp2", "--count", "12")
check("all terms agree" in out.stdout, "spectrum diff agrees")

out = run("spectrum", "--model", "s3", "--count", "30", "--format", "json")
doc = json.loads(out.stdout)
check(doc["mismatches"] == 0, "spectrum json mismatches")
check(doc["rows"][3]["spectrum"] == {"num": 2, "den": 1, "pi": 0}, "spectrum json row")

out = run("index", "--model", "sstar-rp2", "--alpha", "4,0", "--beta", "0,0")
check("c_tau = -2" in out.stdout, "index c_tau")
check("Q_tau = -12" in out.stdout, "index Q_tau")
check("I = 2" in out.stdout, "index value")

out = run("generators", "--model", "sstar-s2", "--max-grading", "6")
lines = out.stdout.strip().splitlines()
check(lines == ["0  (0,0)", "2  (2,0)", "4  (1,1)", "6  (0,2)"], "generator table")

out = run("umap", "--model", "s3", "--alpha", "0,2", "--steps", "10")
check(out.stdout.strip().splitlines() == ["(0,2)", "(1,1)", "(2,0)", "(0,1)", "(1,0)",
                                          "(0,0)"], "umap descent")

out = run("obstruct", "--inner", "ball:7", "--outer", "dstar-s2", "--upto", "10",
          expect_code=1)
check(out.stdout.strip() == "fails_at k=3: 14 > 4pi", "obstruction witness")

out = run("obstruct", "--inner", "ellipsoid:2pi,4pi", "--outer", "dstar-s2", "--upto", "500")
check("holds" in out.stdout, "ellipsoid obstruction holds")

out = run("width", "--domain", "dstar-s2")
lines = out.stdout.strip().splitlines()
check(lines[0] == "2pi", "width value")
check("k=3" in lines[1], "width upper certificate")
check("(i)" in lines[2] and "B(2pi)" in lines[2], "width lower certificate")

out = run("width", "--domain", "dstar-rp2")
check("volume" in out.stdout, "rp2 width volume certificate")

run("width", "--domain", "nonsense", expect_code=2)
run("capacities", "--domain", "ball:0", "--count", "3", expect_code=2)

with tempfile.TemporaryDirectory() as tmp:
    csv_path = os.path.join(tmp, "curve.csv")
    out = run("moment-boundary", "--variant", "hemisphere", "--epsilon", "1e-5",
              "--samples", "16", "--out", csv_path)
    with open(csv_path) as f:
        header = f.readline().strip()
    check(header == "j,x,y,err", "curve csv header")

    full_path = os.path.join(tmp, "full.csv")
    run("moment-boundary", "--variant", "full", "--epsilon", "1e-4",
        "--samples", "16", "--out", full_path)
    again_path = os.path.join(tmp, "full2.csv")
    run("moment-boundary", "--variant", "full", "--epsilon", "1e-4",
        "--samples", "16", "--out", again_path)
    with open(full_path, "rb") as f1, open(again_path, "rb") as f2:
        check(f1.read() == f2.read(), "moment-boundary byte-identical reruns")

    out = run("area", "--curve", csv_path)
    area = float(out.stdout.strip())
    check(abs(area - 2 * math.pi ** 2) < 0.05, f"hemisphere area {area}")

    json_path = os.path.join(tmp, "limit.json")
    out = run("moment-limit", "--variant", "hemisphere", "--ladder", "1e-3,1e-4",
              "--samples-per-side", "6", "--out", json_path)
    with open(json_path) as f:
        doc = json.load(f)
    check(doc["schema"] == "zoll-ech/1", "limit doc schema")
    check(len(doc["samples"]) == 15, "limit sample count")
    check("report" in doc, "limit report present")

    out = run("area", "--curve", json_path)
    area = float(out.stdout.strip())
    check(abs(area - 2 * math.pi ** 2) < 0.05, f"limit area {area}")

if failures:
    print(f"{failures} CLI checks failed")
    sys.exit(1)
print("all CLI checks passed")
