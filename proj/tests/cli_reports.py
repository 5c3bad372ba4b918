#!/usr/bin/env python3
"""Runs galois-kit on the corpus: JSON reports must validate against the
schema, be byte-identical across runs and carry the documented exit codes."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

CORPUS = ["x^2-2", "x^2+x+1", "x^3-2", "x^3-3x-1", "x^4-1", "x^4+1", "x^4+x+1", "x^5-2"]


def cases(chains):
    for p in CORPUS:
        yield ["factor", p], 0
        yield ["split", p], 0
        yield ["group", p], 0
        yield ["minpoly", p, "r1 + 2 r2" if p != "x^2+x+1" else "r1 - r2"], 0
        yield ["fixed", p, "--gens", "1"], 0
        yield ["solvable", p], 0
    yield ["factor", "(x^2-2)*(x^2-3)"], 0
    yield ["factor", "x^5 - x - 1"], 0
    yield ["solvable", "x^5-x-1"], 0
    yield ["--primes", "2,3,5,7", "solvable", "x^5-x-1"], 0
    yield ["fixed", "x^3-2"], 0
    yield ["minpoly", "x^4+x+1", "r1 r2"], 0
    for c in chains:
        for cmd in ("normalize", "verify-tower", "chain-groups"):
            yield [cmd, "--chain", str(c)], 0
    yield ["split", "x^2 - y"], 2
    yield ["group", "x^2 +"], 2
    yield ["minpoly", "x^3-2", "r4"], 2
    yield ["normalize", "--chain", "missing-chain.json"], 2
    yield ["--degree-cap", "4", "group", "x^3-2"], 3
    yield ["--degree-cap", "3", "normalize", "--chain", str(chains[0].parent / "mixed.json")], 3
    yield ["group", "0"], 1
    yield ["fixed", "x^3-2", "--gens", "17"], 1
    yield ["--primes", "2,4", "solvable", "x^5-x-1"], 1


def run(binary, args):
    proc = subprocess.run([binary, "--json", *args], capture_output=True, timeout=600)
    return proc.returncode, proc.stdout


def main():
    binary, schema_path, chain_dir = sys.argv[1:4]
    schema = json.loads(Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    chains = sorted(Path(chain_dir).glob("*.json"))
    failures = 0
    count = 0
    for args, expected in cases(chains):
        count += 1
        code, out = run(binary, args)
        label = " ".join(args)
        problems = []
        if code != expected:
            problems.append(f"exit {code}, expected {expected}")
        try:
            report = json.loads(out)
        except json.JSONDecodeError as e:
            problems.append(f"output is not JSON: {e}")
            report = None
        if report is not None:
            errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
            problems += [f"schema: {'/'.join(map(str, e.path))}: {e.message[:200]}" for e in errors[:5]]
            if report.get("exit_code") != code:
                problems.append("exit_code field disagrees with the process exit code")
            if any(not a["passed"] for a in report.get("assertions", [])):
                problems.append("a runtime check failed")
        if code == 0:
            code2, out2 = run(binary, args)
            if code2 != code or out2 != out:
                problems.append("second run is not byte-identical")
        if problems:
            failures += 1
            print(f"FAIL {label}")
            for p in problems:
                print(f"     {p}")
        else:
            print(f"ok   {label}")
    print(f"{count - failures}/{count} reports valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
