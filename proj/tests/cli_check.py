"""End-to-end checks of the malnorm CLI: exit codes, report contents, schema."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

CLI = sys.argv[1]
SCHEMA = json.load(open(sys.argv[2]))
validator = jsonschema.Draft202012Validator(SCHEMA)

failures = []


def run(args, env=None):
    full_env = dict(os.environ)
    full_env.pop("MALNORM_SEED", None)
    full_env.pop("MALNORM_CAP", None)
    full_env.update(env or {})
    p = subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)
    return p.returncode, p.stdout, p.stderr


def reports(out):
    lines = [json.loads(line) for line in out.splitlines() if line.strip()]
    for r in lines:
        for err in validator.iter_errors(r):
            failures.append(f"schema: {r.get('kind')}: {err.message}")
    return lines


def expect(cond, message):
    if not cond:
        failures.append(message)


def case(args, code, check=None, env=None):
    rc, out, err = run(args, env)
    expect(rc == code, f"{args}: exit {rc}, expected {code}; stderr={err.strip()}")
    if rc in (0, 1):
        rs = reports(out)
        expect(len(rs) > 0, f"{args}: no reports")
        if check and rs:
            try:
                check(rs)
            except (AssertionError, KeyError, IndexError) as e:
                failures.append(f"{args}: check failed: {e!r}")
    return rc, out, err


def data(rs, i=0):
    return rs[i]["data"]


# fprod
def uv_23(rs):
    assert data(rs)["malnormal"] is True
    assert data(rs)["torus_knot"]["coprime"] is True


case(["fprod", "cyclic", "--p", "2", "--q", "3", "--word", "u v"], 0, uv_23)


def uv_22(rs):
    v = data(rs)["verdict"]
    assert v["malnormal"] is False and v["witness"]["conjugator"]


case(["fprod", "cyclic", "--p", "2", "--q", "2", "--word", "u v", "--verify-witness"], 0, uv_22)
case(["fprod", "factor", "--p", "2", "--q", "3", "--side", "A", "--radius", "5"], 0)
case(["fprod", "kernel", "--p", "2", "--q", "3", "--side", "B"], 0)
case(["fprod", "kernel", "--p", "2", "--q", "3", "--side", "A"], 2)
case(["fprod", "kernel", "--word", "u v", "--side", "A"], 0, lambda rs: data(rs)["in_kernel"] is True or 1 / 0)
case(["fprod", "cyclic", "--p", "2", "--q", "3", "--word", "u"], 2)


# free
def a2(rs):
    d = data(rs)
    assert d["malnormal"] is False
    assert d["verdict"]["witness"] == {"conjugator": "a", "element": "a^2"}


case(["free", "check", "--rank", "2", "--gens", "a^2", "--verify-witness"], 0, a2)
case(["free", "check", "--gens", "a^-1 b^-1 a b"], 0, lambda rs: data(rs)["malnormal"] is True or 1 / 0)
case(["free", "closure", "--rank", "2", "--gens", "a^2"], 0,
     lambda rs: (data(rs)["hull_basis"] == ["a"] and data(rs)["certificate"] == ["a"]) or 1 / 0)
case(["free", "hall", "--gens", "a^2,b"], 0, lambda rs: data(rs)["index"] == 2 or 1 / 0)
case(["free", "intersect", "--gens", "a^2,b", "--with", "a^3,b"], 0)
with tempfile.TemporaryDirectory() as tmp:
    dot = os.path.join(tmp, "h.dot")
    case(["free", "graph", "--gens", "a b a^-1", "--dot", dot], 0)
    expect(os.path.exists(dot) and "digraph" in open(dot).read(), "graph: DOT file not written")
case(["free", "check", "--gens", "a^"], 2)
case(["free", "check", "--rank", "1", "--gens", "b"], 2)


# finite
def agl15(rs):
    assert all(a["pass"] for a in rs[0]["assertions"])
    assert data(rs)["kernel_order"] == 5


case(["finite", "frobenius", "--builtin", "agl1-5"], 0, agl15)
case(["finite", "check", "--builtin", "s3", "--verify-witness"], 0, lambda rs: data(rs)["malnormal"] is True or 1 / 0)
case(["finite", "check", "--builtin", "s4", "--gens", "(1 2 3 4)", "--method", "free_action"], 0,
     lambda rs: data(rs)["malnormal"] is False or 1 / 0)
case(["finite", "check", "--degree", "3", "--group", "(1 2 3);(1 2)", "--gens", "(1 2)"], 0)
case(["finite", "hull", "--builtin", "s4", "--gens", "(1 2)"], 0)
case(["finite", "census", "--builtin", "a4"], 0)
case(["finite", "check", "--builtin", "nosuchgroup"], 2)
case(["finite", "check", "--builtin", "s3", "--gens", "(1 2)(2 3)"], 2)
case(["finite", "check", "--builtin", "s4"], 3, env={"MALNORM_CAP": "10"})
case(["finite", "check", "--builtin", "a5", "--cap", "30"], 3)

# gallery
for args in (["psl2z"], ["picard"], ["affine", "--p", "7"], ["pgl2", "--q", "5"],
             ["lamplighter", "--s", "a5"], ["prop2xi", "--n", "3"], ["prop2xi", "--n", "2", "--whole"]):
    case(["gallery", *args], 0, lambda rs: all(r["pass"] for r in rs) or 1 / 0)
case(["gallery", "pgl2", "--q", "4"], 2)
case(["gallery", "affine", "--p", "9"], 2)

# props: determinism, env seed, report file
rc1, out1, _ = case(["props", "run", "--seed", "5", "--trials", "20"], 0)
rc2, out2, _ = case(["props", "run", "--trials", "20", "--jobs", "2"], 0, env={"MALNORM_SEED": "5"})


def strip_time(out):
    rs = [json.loads(line) for line in out.splitlines()]
    for r in rs:
        r["data"].pop("wall_time_ms", None)
    return rs


expect(strip_time(out1) == strip_time(out2), "props: reports differ for the same seed")
with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "report.json")
    case(["props", "run", "--seed", "1", "--trials", "5", "--suite", "prop1", "--json", path], 0)
    expect(os.path.exists(path) and json.load(open(path))[0]["kind"] == "props.prop1", "props: --json not written")
case(["props", "run", "--suite", "nope", "--trials", "1"], 2)

# usage errors
case(["bogus"], 2)
case([], 2)
rc, _, _ = run(["--help"])
expect(rc == 0, "--help should exit 0")

# human output
rc, out, _ = run(["gallery", "picard", "--human"])
expect(rc == 0 and out.startswith("gallery.picard: PASS"), "human output")

if failures:
    for f in failures:
        print("FAIL", f)
    sys.exit(1)
print("all CLI checks passed")
