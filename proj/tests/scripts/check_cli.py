"""End-to-end checks of the tiletopo command line."""
import json
import re
import subprocess
import sys


def run(cli, *args, code=0):
    p = subprocess.run([cli, *args], capture_output=True, text=True)
    if p.returncode != code:
        raise AssertionError(f"{args}: exit {p.returncode}, expected {code}\n{p.stderr}")
    return p.stdout


def field(text, key):
    m = re.search(rf"^{re.escape(key)}: (.*)$", text, re.M)
    if not m:
        raise AssertionError(f"missing '{key}'")
    return m.group(1).strip()


def main() -> int:
    cli, data = sys.argv[1:3]
    checks = []

    def check(name, cond):
        checks.append((name, bool(cond)))
        print(f"{'ok  ' if cond else 'FAIL'} {name}")

    text = run(cli, "analyze", "--twindragon", "C")
    check("C neighbors", field(text, "neighbors") == "20")
    check("C faces", field(text, "faces") == "12")
    check("C euler", field(text, "euler") == "4")
    check("C center", field(text, "center") == "1(212)w")
    check("C verdict", field(text, "verdict") == "connected")

    s = json.loads(run(cli, "analyze", "--json", f"{data}/sierpinski.json"))
    check("sierpinski neighbors", s["neighbor_graph"]["neighbors"] == 12)
    check("sierpinski euler null", s["polyhedral_structure"]["euler"] is None)

    run(cli, "analyze", f"{data}/bad.json", code=2)
    run(cli, "analyze", "--twindragon", "C", "--max-vertices", "5", code=3)

    dot = run(cli, "graph", "--twindragon", "E", "--reduced")
    check("E reduced nodes", len(re.findall(r'^\s*"[^"]*"( \[[^\]]*\])?;$', dot, re.M)) == 18)

    pairs = run(cli, "intersections", "--twindragon", "C", "--faces-only")
    check("C pairs mention (2)w", "(2)w" in pairs)

    a = run(cli, "render", "--twindragon", "B", "--points", "200", "--seed", "5")
    b = run(cli, "render", "--twindragon", "B", "--points", "200", "--seed", "5")
    check("render deterministic", a == b and a.startswith("# seed=5\n"))
    check("render rows", len(a.strip().splitlines()) == 202)

    cat = json.loads(run(cli, "catalog", "--json"))
    check("catalog size", len(cat) == 7)

    return 0 if all(ok for _, ok in checks) else 1


if __name__ == "__main__":
    sys.exit(main())
