#!/usr/bin/env python3
# Copyright 2026 The neuralcode Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""End-to-end checks of the ncode executable: exit codes, JSON schema."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

NCODE = sys.argv[1]
SCHEMA = json.load(open(sys.argv[2]))
failures = []


def run(*args, stdin=None):
    p = subprocess.run([NCODE, *args], capture_output=True, text=True, input=stdin, timeout=120)
    return p.returncode, p.stdout, p.stderr


def expect(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


with tempfile.TemporaryDirectory() as tmp:
    def write(name, text):
        path = os.path.join(tmp, name)
        with open(path, "w") as f:
            f.write(text)
        return path

    counter = write("counter.txt", run("generate", "counterexample")[1])
    connected = write("connected.txt", run("generate", "connected-not-goodcover")[1])
    disconnected = write("disc.txt", "13\n23\n1\n")
    binary = write("binary.txt", "1110\n0111\n1100\n")
    mixed = write("mixed.txt", "110\n12\n")
    empty = write("empty.txt", "# nothing\n")
    dunce = write("dunce.txt", run("generate", "dunce-hat")[1])
    rp2 = write("rp2.txt", run("generate", "rp2")[1])
    cone = os.path.join(tmp, "cone.txt")
    expect(run("generate", "cone-minus-apex", "dunce-hat", "-o", cone)[0] == 0, "generate cone-minus-apex")

    validator = jsonschema.Draft202012Validator(SCHEMA)
    for path in (counter, connected, disconnected, binary, cone):
        for extra in ([], ["--deterministic"]):
            rc, out, err = run("--json", *extra, "classify", path)
            expect(rc == 0, f"classify {path} {extra} exit {rc}: {err}")
            try:
                doc = json.loads(out)
                errors = list(validator.iter_errors(doc))
                expect(not errors, f"schema violations for {path}: {[e.message for e in errors[:3]]}")
            except json.JSONDecodeError as e:
                expect(False, f"invalid JSON for {path}: {e}")

    doc = json.loads(run("--json", "--deterministic", "classify", counter)[1])
    expect(doc["locally_good"]["value"] == "yes", "counterexample locally good")
    expect(doc["locally_great"]["value"] == "yes", "counterexample locally great")
    expect(doc["max_intersection_complete"] is False, "counterexample max-intersection complete")
    expect(doc["timings"] == {"deterministic": True}, "deterministic timings")
    doc = json.loads(run("--json", "classify", connected)[1])
    expect(doc["locally_good"]["witness"] == [4], "connected code witness")
    doc = json.loads(run("--json", "--deterministic", "classify", cone)[1])
    expect(doc["locally_great"]["value"] == "no" and doc["locally_great"]["witness"] == [9], "cone locally great")
    expect(doc["locally_good"]["value"] == "unknown", "cone locally good")

    # --strict exit codes.
    expect(run("--strict", "classify", counter)[0] == 0, "strict yes exits 0")
    expect(run("--strict", "classify", disconnected)[0] == 1, "strict no exits 1")
    expect(run("--strict", "collapse", rp2)[0] == 1, "strict non-collapsible exits 1")
    expect(run("--strict", "--budget", "1", "collapse", "--no-greedy", write("two.txt", "1234\n5678\n45\n"))[0] == 2,
           "strict budget exhaustion exits 2")

    # Failure exit codes.
    expect(run("classify", mixed)[0] == 65, "mixed notation exits 65")
    expect(run("classify", empty)[0] == 65, "empty code exits 65")
    expect(run("classify", os.path.join(tmp, "missing.txt"))[0] == 66, "missing file exits 66")
    expect(run("frobnicate")[0] == 64, "unknown subcommand exits 64")
    expect(run("--primes", "4", "classify", counter)[0] == 64, "non-prime field exits 64")
    expect(run("links", counter, "--face", "5")[0] == 0, "link of a face")
    expect(run("links", counter, "--face", "6")[0] == 65, "face outside the complex exits 65")

    # Other subcommands.
    rc, out, _ = run("--json", "homology", rp2)
    doc = json.loads(out)
    expect(rc == 0 and doc["betti"][0]["reduced"] == [0, 1, 1], "RP2 homology over F2")
    rc, out, _ = run("--json", "collapse", dunce)
    expect(rc == 0 and json.loads(out)["status"] == "no", "dunce hat not collapsible")
    rc, out, _ = run("--json", "collapse", "--engine", "collapse", write("tri.txt", "123\n345\n"))
    expect(rc == 0 and json.loads(out)["status"] == "yes", "two triangles collapse")
    rc, out, _ = run("--json", "--strict", "realize-verify", "--exhaustive", "3")
    expect(rc == 0 and json.loads(out)["mismatches"] == 0 and json.loads(out)["checked"] == 127, "realize-verify")
    rc, out, _ = run("--json", "realize-verify", "--closed", write("closed.txt", "1\n12\n13\n"))
    expect(rc == 0 and [1, 2, 3] in json.loads(out)["results"][0]["realized"]["words"], "closed variant")
    rc, out, _ = run("--json", "goodcover", connected)
    doc = json.loads(out)
    expect(rc == 0 and doc["value"] == "no" and doc["witness"] == [4], "goodcover witness")
    rc, out, _ = run("--json", "mandatory", disconnected)
    expect(rc == 0 and json.loads(out)["missing_from_code"] == [[3]], "mandatory missing word")
    sd = os.path.join(tmp, "sd.txt")
    expect(run("subdivide", write("solid.txt", "123\n"), "-o", sd)[0] == 0, "subdivide")
    rc, out, _ = run("--json", "homology", sd)
    expect(rc == 0 and json.loads(out)["f_vector"] == [7, 12, 6], "subdivided triangle f-vector")
    rc, out, _ = run("--json", "realize-verify", "--closed", write("cv.txt", run("generate", "closed-variant")[1]))
    expect(rc == 0 and json.loads(out)["mismatches"] == 1, "closed-variant generator")
    for name in ("intro-code", "realizable-code", "disconnected-code"):
        rc, out, _ = run("generate", name)
        expect(rc == 0 and out.startswith("n = "), "generate " + name)
    expect(run("--strict", "classify", write("real.txt", run("generate", "realizable-code")[1]))[0] == 0,
           "realizable code passes --strict")
    expect(run("generate", "no-such-thing")[0] == 64, "unknown instance exits 64")
    rc, out, _ = run("classify", counter)
    expect(rc == 0 and "locally_good: yes" in out, "human-readable classify")

print("cli: %d failure(s)" % len(failures))
sys.exit(1 if failures else 0)
