#!/usr/bin/env python3
"""Black-box checks of the command-line tool. Usage: cli_test.py <binary>."""

import json
import subprocess
import sys
import tempfile
import os

BIN = sys.argv[1]
failures = 0


def run(*args, expect_code=0):
    global failures
    p = subprocess.run([BIN, *args], capture_output=True, text=True)
    if p.returncode != expect_code:
        failures += 1
        print(f"FAIL {' '.join(args)}: exit {p.returncode}, wanted {expect_code}\n"
              f"  stderr: {p.stderr.strip()}")
        return None
    return p.stdout


def check(cond, label):
    global failures
    if cond:
        print(f"ok: {label}")
    else:
        failures += 1
        print(f"FAIL: {label}")


# counting, with the oracle cross-check
out = run("count", "--n", "2", "--m", "2", "--oracle")
if out is not None:
    j = json.loads(out)
    check(j["count"] == 2 and j["oracle"] == 2, "count 2,2 with oracle")

out = run("count", "--n", "4", "--m", "2")
if out is not None:
    check(json.loads(out)["count"] == 3, "count 4,2")

# enumeration lists canonical representatives
out = run("enumerate", "--n", "4", "--m", "2")
if out is not None:
    j = json.loads(out)
    check(len(j["representatives"]) == 3 and j["by_orbit_length"] == {"2": 1, "4": 2},
          "enumerate 4,2")

# byte stability: identical invocations give identical bytes
out2 = run("enumerate", "--n", "4", "--m", "2")
check(out is not None and out == out2, "enumerate output is byte-stable")

# isomorphism testing
out = run("iso", "--group", "C2", "--t1", "e,e", "--t2", "e,s")
if out is not None:
    check(json.loads(out)["isomorphic"] is False, "iso rejects (e,e) vs (e,s)")
out = run("iso", "--group", "C4", "--t1", "0,1", "--t2", "2,3")
if out is not None:
    j = json.loads(out)
    check(j["isomorphic"] is True and j["sigma"] == "2", "iso shifts by sigma=2")

# build-good | verify round trip through a file
out = run("build-good", "--group", "C2", "--degrees", "e,s", "--field", "GF(3)")
if out is not None:
    j = json.loads(out)
    check(j["m"] == 2 and j["field"] == "GF(3)", "build-good basic fields")
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        f.write(out)
        path = f.name
    try:
        vout = run("verify", "--grading", path)
        if vout is not None:
            v = json.loads(vout)
            check(v["ok"] is True and v["axiom"] == "none", "verify round trip")
        # corrupt one matrix and expect a named axiom
        comp = j["components"]
        key = sorted(comp)[0]
        comp[key][0] = comp[key][-1] if len(comp[key]) > 1 else [["1 mod 3", "1 mod 3"],
                                                                 ["1 mod 3", "1 mod 3"]]
        other = sorted(comp)[-1]
        comp[key][0] = comp[other][0]
        with open(path, "w") as f:
            f.write(json.dumps(j))
        vout = run("verify", "--grading", path)
        if vout is not None:
            v = json.loads(vout)
            check(v["ok"] is False and v["axiom"] != "none", "verify names the axiom")
    finally:
        os.unlink(path)

# descent
out = run("descend", "--field", "Q", "--quadratic-alpha", "2")
if out is not None:
    j = json.loads(out)
    check(j["is_galois"] and j["splitting_witness"]["validated"] and
          j["splitting_witness"]["size"] == 2, "descend Q alpha=2")
    g = j["grading"]
    check(sorted(g["components"]) == ["0", "1"] and
          all(len(v) == 2 for v in g["components"].values()),
          "descended components are 2+2 dimensional")

out = run("descend", "--frobenius", "2", "3", "--field", "GF(2)")
if out is not None:
    check(json.loads(out)["splitting_witness"]["validated"], "descend GF(8)/GF(2)")

# classification of forms
out = run("classify-forms", "--field", "GF(3)")
if out is not None:
    j = json.loads(out)
    forms = j["forms"]
    check(len(forms) == 2 and forms[0]["split"] != forms[1]["split"],
          "classify-forms GF(3) has a split and a non-split form")
    split = forms[0] if forms[0]["split"] else forms[1]
    check("good_degrees" in split and len(split["good_degrees"]) == 2,
          "split form reports good degrees")

# split-check
out = run("split-check", "--field", "GF(3)", "--split", "C2")
if out is not None:
    check(json.loads(out)["splitting_witness"]["validated"], "split-check GF(3), C2")

# exit codes
run("count", "--n", "2", expect_code=1)          # missing required option
run("nonsense", expect_code=1)                   # unknown subcommand
run("count", "--n", "0", "--m", "2", expect_code=2)   # invalid input
run("classify-forms", "--field", "Q", expect_code=2)  # not a finite field
run("descend", "--field", "Q", expect_code=2)    # no extension selected
run("enumerate", "--n", "12", "--m", "7", "--budget", "10", expect_code=2)  # budget

print(f"{failures} failure(s)")
sys.exit(1 if failures else 0)
