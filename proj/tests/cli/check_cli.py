"""Runs every eulerwalk command, validates the JSON summaries against the
shipped schema and checks byte-for-byte reproducibility."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

TOOL, SCHEMA = sys.argv[1], sys.argv[2]

RUNS = {
    "sample": ["sample", "--torus", "6x5", "--seed", "3", "--chip", "7"],
    "tour": ["tour", "--torus", "5x5", "--order", "cross", "--seed", "4"],
    "tour_grid": ["tour", "--grid", "4x3", "--seed", "4"],
    "corr": ["correlations", "--torus", "64x64", "--samples", "100", "--seed", "5"],
    "corr_cross": ["correlations", "--torus", "64x64", "--samples", "100", "--seed", "5", "--order", "cross"],
    "delta": ["delta-dist", "--torus", "8x8", "--samples", "60", "--order", "cross"],
    "msd": ["msd", "--torus", "10x10", "--samples", "30", "--window", "0:10"],
    "planar": ["planar-check", "--grid", "6x6", "--samples", "30"],
    "conj": ["conjecture", "--torus", "8x8", "--samples", "10"],
    "green": ["green", "2", "3"],
    "predict": ["predict", "--order", "cross", "--torus", "8x8"],
}

# Small-sample runs whose checks are statistical, not invariants.
STATISTICAL = {"delta", "msd"}

failures = []


def check(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


def run(args, env=None, expect=0):
    p = subprocess.run([TOOL] + args, capture_output=True, text=True, env=env)
    check(p.returncode == expect, f"{args}: exit {p.returncode} (expected {expect}) {p.stderr.strip()}")
    return p


schema = json.load(open(SCHEMA))
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

with tempfile.TemporaryDirectory() as tmp:
    def artifacts(prefix):
        with open(prefix + ".json", "rb") as j, open(prefix + ".csv", "rb") as c:
            return j.read(), c.read()

    for name, args in RUNS.items():
        a, b = os.path.join(tmp, name + "_a"), os.path.join(tmp, name + "_b")
        run(args + ["--out", a])
        extra = ["--threads", "3"] if "--samples" in args else []
        run(args + extra + ["--out", b])
        ja, ca = artifacts(a)
        jb, cb = artifacts(b)
        check(ca == cb, f"{name}: csv differs between runs")
        # The output prefix is part of the embedded config; compare the rest.
        sa, sb = json.loads(ja), json.loads(jb)
        sa["config"]["output"] = sb["config"]["output"] = ""
        check(sa == sb, f"{name}: json differs between runs")
        errors = sorted(validator.iter_errors(sa), key=str)
        check(not errors, f"{name}: schema errors {[e.message for e in errors[:3]]}")
        csv = ca.decode()
        check(csv.endswith("\n") and "\r" not in csv and csv.count("\n") >= 1, f"{name}: csv layout")
        if name not in STATISTICAL:
            check(all(sa["checks"].values()), f"{name}: failing checks {sa['checks']}")

    # Stdout formats carry the same bytes as the files.
    p = run(RUNS["delta"] + ["--format", "csv"])
    check(p.stdout.encode() == artifacts(os.path.join(tmp, "delta_a"))[1], "delta: stdout csv matches file")
    check(open(os.path.join(tmp, "delta_a.csv")).readline() == "delta,count\n", "delta: header")
    check(open(os.path.join(tmp, "msd_a.csv")).readline() == "t,mean_r2\n", "msd: header")

    # A sampled state is reusable as tour input.
    run(["tour", "--state", os.path.join(tmp, "sample_a.json"), "--out", os.path.join(tmp, "replay")])
    replay = json.load(open(os.path.join(tmp, "replay.json")))
    sample = json.load(open(os.path.join(tmp, "sample_a.json")))
    check(replay["results"]["start"] == sample["results"]["state"], "tour --state replays the sampled state")
    check(replay["results"]["steps"] == 4 * 30, "tour on 6x5 has 120 steps")

    # Environment seed override.
    env = dict(os.environ, EULERWALK_SEED="99")
    p = run(["sample", "--torus", "4x4"], env=env)
    check(json.loads(p.stdout)["seed"] == 99, "EULERWALK_SEED sets the default seed")
    p = run(["sample", "--torus", "4x4", "--seed", "5"], env=env)
    check(json.loads(p.stdout)["seed"] == 5, "--seed overrides EULERWALK_SEED")

    # Known values.
    p = run(["green", "1", "1", "--format", "csv"])
    check(p.stdout.splitlines()[1].startswith("1,1,-0.3183098"), "green 1 1")
    p = run(["predict", "--order", "cross"])
    check(abs(json.loads(p.stdout)["pdd"] - 0.224160) < 5e-6, "predict cross pdd")

    # compare: matched passes, mismatched order is flagged with exit 1.
    corr = os.path.join(tmp, "corr_cross_a.json")
    for order, expect in (("cross", 0), ("clockwise", 1)):
        pred = os.path.join(tmp, "pred_" + order)
        run(["predict", "--order", order, "--out", pred])
        p = run(["compare", "--empirical", corr, "--predicted", pred + ".json"], expect=expect)
        check(not list(validator.iter_errors(json.loads(p.stdout))), f"compare {order}: schema")
    run(["compare", "--empirical", os.path.join(tmp, "green_a.json"), "--predicted", corr], expect=2)

    # Usage errors.
    run(["delta-dist", "--torus", "2x8"], expect=2)
    run(["delta-dist", "--torus", "8x8", "--samples", "0"], expect=2)
    run(["delta-dist", "--torus", "8by8"], expect=2)
    run(["msd", "--torus", "8x8", "--order", "diagonal"], expect=2)
    run(["planar-check", "--torus", "8x8"], expect=2)
    run([], expect=2)

    # Invariant violation: a state that is not a unicycle.
    bad = os.path.join(tmp, "bad.json")
    json.dump({"topology": "torus", "M": 3, "N": 3, "arrows": "EEEEEEEEE", "chip": 0}, open(bad, "w"))
    p = run(["tour", "--state", bad], expect=2)
    check("EEEEEEEEE" in p.stderr, "diagnostic carries the offending state")

print("failures:", len(failures))
sys.exit(1 if failures else 0)
