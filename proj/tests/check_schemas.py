#!/usr/bin/env python3
"""Runs the CLI in JSON mode and validates each document against its schema."""
import json
import pathlib
import subprocess
import sys

import jsonschema

EXAMPLE = ["--ell", "3", "--g", "1/(1-t^3)", "--f", "t/(1-t^3)", "--f", "t*(1+t^3)", "--f", "t/(1+t^3)"]
DOUBLE = ["--g", "1/(1-t^2)", "--f", "t", "--f", "t/(1-t^2)"]

CASES = [
    ("series", ["eval", "catalan()", "--order", "8"], None),
    ("series", ["eval", "1/(2-t)", "--order", "5"], None),
    ("matrix", ["build", "--rows", "9", "--cols", "9"] + EXAMPLE, None),
    ("matrix", ["prodmat", "--size", "9"] + EXAMPLE, None),
    ("matrix", ["compress", "--rows", "8", "--cols", "8"] + EXAMPLE, "matrix"),
    ("series", ["compress", "--rows", "8", "--cols", "8"] + EXAMPLE, "ghat"),
    ("seqchar", ["seq", "--terms", "10"] + EXAMPLE, None),
    ("seqchar", ["seq", "--type", "--g", "1/(1-t)", "--f", "1/(1-t)"], None),
    ("tpreport", ["tp", "--compressed", "--rows", "6", "--max-order", "3"] + DOUBLE, None),
    ("tpreport", ["pf", "--seq", "1,1,1", "--depth", "3", "--terms", "6"], None),
    ("identityreport", ["identity", "fuss", "--ell", "2", "--p", "1", "--m", "2", "--n", "3", "--s", "3"], None),
    ("identityreport", ["identity", "umbral", "--m", "3", "--n", "4", "--x", "1/2"], None),
    ("spec", ["inv", "--g", "1/(1-t)", "--f", "t/(1-t)", "--order", "6"], None),
    ("spec", ["mul"] + DOUBLE + ["--ell", "2", "--g2", "1/(1-t^2)", "--f2", "t", "--f2", "t/(1-t^2)", "--order", "8"], None),
]


def main() -> int:
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for name, args, field in CASES:
        schema = json.loads((schema_dir / f"{name}.json").read_text())
        proc = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True)
        label = " ".join(args[:2])
        try:
            if proc.returncode != 0:
                raise RuntimeError(f"exit {proc.returncode}: {proc.stderr.strip()}")
            doc = json.loads(proc.stdout)
            jsonschema.validate(doc if field is None else doc[field], schema)
            print(f"ok   {name:15} {label}")
        except Exception as e:  # noqa: BLE001
            failures += 1
            print(f"FAIL {name:15} {label}: {e}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
