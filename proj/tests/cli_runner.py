#!/usr/bin/env python3
"""Integration drive of the command-line tool: contracts, formats, exit codes."""

import json
import os
import subprocess
import sys
import tempfile

BIN = None
FAILURES = []


def run(*args, env_extra=None, expect=0):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run([BIN, *args], capture_output=True, env=env)
    if proc.returncode != expect:
        FAILURES.append(
            f"{' '.join(args)}: exit {proc.returncode}, wanted {expect}\n"
            f"  stdout: {proc.stdout[:400]!r}\n  stderr: {proc.stderr[:400]!r}"
        )
    return proc


def check(cond, label):
    if not cond:
        FAILURES.append(label)


def main():
    global BIN
    BIN = sys.argv[1]

    # -- value: the anchor report, with exact key order and bytes --
    p = run("value", "--alpha", "1,1", "--N", "0,0")
    report = json.loads(p.stdout)
    check(report == {
        "n": 2, "alpha": ["1", "1"], "N": [0, 0], "variant": "corrected",
        "polar": False, "value": "-1/6", "term_count": 7,
    }, f"anchor report content: {report}")
    check(list(report) == ["n", "alpha", "N", "variant", "polar", "value",
                           "term_count"], f"anchor report key order: {list(report)}")
    p2 = run("value", "--alpha", "1,1", "--N", "0,0")
    check(p.stdout == p2.stdout, "value output is byte deterministic")

    p = run("value", "--alpha", "1", "--N", "0")
    check(json.loads(p.stdout)["value"] == "-1/2", "one-variable anchor")

    p = run("value", "--alpha", "1/2", "--N", "2")
    check(json.loads(p.stdout)["value"] == "0", "vanishing point at shift 1/2")

    # -- value: usage failures exit 1 --
    run("value", "--alpha", "0", "--N", "0", expect=1)       # shift not positive
    run("value", "--alpha", "1", "--N", "0,0", expect=1)     # dimension mismatch
    run("value", "--alpha", "x", "--N", "0", expect=1)       # bad rational
    run("value", "--alpha", "1", "--N", "-1", expect=1)      # negative point
    run("value", "--alpha", "1", "--N", "0", "--variant", "bogus", expect=1)
    run("value", "--alpha", "1", expect=1)                   # missing --N
    run(expect=1)                                            # missing subcommand
    run("--help", expect=0)

    # -- value: --out writes the same bytes to a file --
    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "report.json")
        p = run("value", "--alpha", "1,1", "--N", "0,0", "--out", out)
        check(p.stdout == b"", "--out silences stdout")
        with open(out, "rb") as f:
            check(f.read() == p2.stdout, "--out bytes equal stdout bytes")

    # -- table: lexicographic cells, broadcast, determinism --
    p = run("table", "--alpha", "1,1", "--Nmax", "1")
    table = json.loads(p.stdout)
    check(table["n"] == 2 and table["Nmax"] == 1, "table header fields")
    check([c["N"] for c in table["cells"]] ==
          [[0, 0], [0, 1], [1, 0], [1, 1]], "lexicographic cell order")
    check(table["cells"][0]["value"] == "-1/6", "table anchor cell")
    for cell in table["cells"]:
        single = run("value", "--alpha", "1,1", "--N",
                     ",".join(map(str, cell["N"])))
        check(json.loads(single.stdout)["value"] == cell["value"],
              f"cell {cell['N']} matches single evaluation")

    pb = run("table", "--alpha", "1", "--n", "2", "--Nmax", "1")
    check(pb.stdout == p.stdout, "scalar shift broadcasts across --n")
    check(run("table", "--alpha", "1,1", "--Nmax", "1").stdout == p.stdout,
          "table output is byte deterministic")
    run("table", "--alpha", "1,1", "--n", "3", "--Nmax", "1", expect=1)

    p = run("table", "--alpha", "1,1", "--Nmax", "0", "--variant", "paper")
    table = json.loads(p.stdout)
    check(table["variant"] == "paper" and table["cells"][0]["value"] == "1/3",
          "published-base variant value at the origin")

    # -- table: csv and latex renderings --
    p = run("table", "--alpha", "1,3/2", "--Nmax", "1", "--format", "csv")
    lines = p.stdout.decode().split("\r\n")
    check(lines[0] == "N1,N2,value", f"csv header: {lines[0]}")
    check(len(lines) == 6 and lines[5] == "", "csv has 4 rows, CRLF endings")
    check(lines[1].startswith("0,0,"), "csv first row point")

    p = run("table", "--alpha", "1", "--Nmax", "2", "--format", "latex")
    text = p.stdout.decode()
    for needle in ("\\begin{tabular}{rl}", "\\toprule", "\\midrule",
                   "\\bottomrule", "$N_1$", "$-\\frac{1}{2}$"):
        check(needle in text, f"latex fragment {needle!r}")

    run("table", "--alpha", "1", "--Nmax", "1", "--format", "html", expect=1)

    # -- poles: the guarded scan of natural points finds nothing --
    p = run("poles", "--n", "2", "--Nmax", "3")
    check(p.stdout.decode() == "none found\n", "polar scan output")
    run("poles", "--n", "0", "--Nmax", "1", expect=1)

    # -- verify: fast suite passes, writes a JSON report --
    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "verify.json")
        p = run("verify", "special", "--out", out)
        check(b"verify special: PASS" in p.stdout, "verify summary line")
        with open(out) as f:
            report = json.load(f)
        check(report["pass"] is True and report["suite"] == "special",
              "verify report fields")
        check({s["suite"] for s in report["suites"]} ==
              {"specialization", "regression-constants"},
              f"verify report suites: {[s['suite'] for s in report['suites']]}")
    run("verify", "nonsense", expect=1)

    # -- bernoulli cache: created via flag, reused via environment --
    with tempfile.TemporaryDirectory() as tmp:
        cache = os.path.join(tmp, "cache.tsv")
        run("value", "--alpha", "1", "--N", "6", "--cache", cache)
        check(os.path.exists(cache), "cache file written")
        with open(cache) as f:
            first = f.readline()
        check(first == "0\t1\n", f"cache first record: {first!r}")
        p = run("value", "--alpha", "1", "--N", "6",
                env_extra={"MHZ_CACHE": cache})
        check(json.loads(p.stdout)["value"] ==
              json.loads(run("value", "--alpha", "1", "--N", "6").stdout)["value"],
              "cached and uncached values agree")

    if FAILURES:
        print(f"FAIL ({len(FAILURES)})")
        for f in FAILURES:
            print(" -", f)
        return 1
    print("cli integration: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
