#!/usr/bin/env python3
"""End-to-end checks of the evencl command line: examples, exit codes, canonical JSON."""
import json
import subprocess
import sys
import tempfile

EXE = sys.argv[1]
failures = []


def run(*args):
    p = subprocess.run([EXE, *args], capture_output=True, text=True)
    return p.returncode, p.stdout.strip()


def check(name, cond, extra=""):
    if not cond:
        failures.append(f"{name} {extra}")
    print(("ok   " if cond else "FAIL ") + name)


def canonical(text):
    return json.dumps(json.loads(text), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


code, out = run("c0", "--ring", "q", "--form", "1,1,1,0,0,0")
c = json.loads(out)["constants"]
check("c0 quaternion squares", code == 0 and all(c[i][i] == ["-1", "0", "0", "0"] for i in (1, 2, 3)), out)
check("c0 quaternion noncommutative", c[1][2] != c[2][1])
check("c0 canonical", canonical(out) == out)

code, out = run("d0", "--ring", "fp:2", "--form", "0,0,1,0,0,1")
check("d0 example", code == 0 and json.loads(out) == {"d0": "1", "semiregular": True}, out)

code, out = run("upsilon", "--ring", "fp:5", "--bilinear", "1,2,3;4,0,1;2,2,2")
check("upsilon runs", code == 0, out)
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    f.write(out)
code2, rec = run("recover", "--algebra", "@" + f.name)
r = json.loads(rec)
check("recover round trip", code2 == 0 and r["roundtrip"] is True, rec)
check("recover matrix", r["bilinear"]["matrix"] == [["1", "2", "3"], ["4", "0", "1"], ["2", "2", "2"]], rec)
code3, rec2 = run("recover", "--algebra", out)
check("recover inline json", code3 == 0 and rec2 == rec)

code, out = run("opposite", "--ring", "q", "--bilinear", "1,1/2,0;0,3,-1;2,0,1")
check("opposite matches -B^T", code == 0 and json.loads(out)["matches_minus_transpose"] is True, out)

for variant in ("splus:1", "s:3", "splus:-1"):
    code, out = run("lift", "--ring", "fp:5", "--form", "1,2,3,0,1,0", "--g", "1,1,0;0,1,0;0,0,2", "--l", "3",
                    "--variant", variant)
    check(f"lift {variant}", code == 0 and json.loads(out)["induces_phi"] is True, out)

code, out = run("classify", "--field", "fp:2")
j = json.loads(out)
check("classify fp:2", code == 0 and j["witt_classes"] == 5 and j["orbit_classes"] == 5 and j["pass"], out)
check("classify sizes", sum(x["size"] for x in j["classes"]) == 64)
check("classify canonical", canonical(out) == out)

code, out = run("autgroup", "--ring", "fp:3", "--form", "1,1,1,0,0,0")
j = json.loads(out)
check("autgroup order", code == 0 and j["order"] == 24 and j["determinants"] == ["1"], out[:200])

code, out = run("verify", "--suite", "f2-bijection")
j = json.loads(out)
check("verify f2-bijection", code == 0 and j["pass"] is True, out)

code, out = run("semiregular", "--ring", "fp:3", "--form", "1,1,1,0,0,0")
check("semiregular azumaya", code == 0 and json.loads(out)["azumaya"] is True, out)

# domain errors: exit 1 with the module error name
code, out = run("recover", "--algebra", json.dumps({"ring": "fp:2", "constants": [[[0] * 4] * 4] * 4}))
check("not specialized", code == 1 and json.loads(out)["error"] == "NotSpecialized", out)
code, out = run("lift", "--ring", "fp:5", "--form", "1,1,1,0,0,0", "--map", "1,0,0,0,0,2,0,0,0,0,1,0,0,0,0,1",
                "--target", "1,1,1,0,0,0")
check("not an algebra iso", code == 1 and json.loads(out)["error"] == "NotAnAlgebraIso", out)
code, out = run("classify", "--field", "fp:5")
check("field too large", code == 1 and json.loads(out)["error"] == "FieldTooLarge", out)

# usage errors: exit 2
code, out = run("d0", "--ring", "fp:4", "--form", "1,1,1,0,0,0")
check("invalid descriptor", code == 2 and json.loads(out)["error"] == "InvalidDescriptor", out)
code, out = run("d0", "--ring", "fp:5", "--form", "1,1,1")
check("parse error", code == 2 and json.loads(out)["error"] == "ParseError", out)
code, out = run("d0", "--bogus")
check("unknown flag", code == 2 and "--bogus" in out, out)
code, out = run("verify", "--suite", "nope")
check("unknown suite", code == 2 and "--suite" in out, out)
code, out = run()
check("no subcommand", code == 2, out)

if failures:
    print(f"{len(failures)} failures")
    sys.exit(1)
print("all CLI checks passed")
