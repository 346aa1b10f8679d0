#!/usr/bin/env python3
"""Run every bundled example through the CLI and check the expected verdicts.

Each row is (expected exit code, CLI arguments). Exit code 0 means an
affirmative verdict, 1 a negative one. The script fails loudly if any
command returns something other than its expected status.
"""

from __future__ import annotations

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
GRAPHS = ROOT / "graphs"

DEMOS = [
    (0, ["verify", "fig2.json", "--spline", "3,15,5"]),
    (0, ["verify", "fig2-text.json", "--spline", "3,15,5"]),
    (1, ["verify", "fig2.json", "--spline", "0,1,0"]),
    (0, ["flowup", "fig2.json"]),
    (0, ["flowup", "fig2-text.json"]),
    (0, ["flowup", "xy.json"]),
    (0, ["q", "fig2.json"]),
    (0, ["q", "xy.json"]),
    (0, ["q", "squares.json"]),
    (0, ["check-basis", "fig2.json", "--spline", "1,1,1", "--spline", "0,4,4", "--spline", "0,0,10"]),
    (1, ["check-basis", "fig2.json", "--spline", "1,1,1", "--spline", "0,4,4", "--spline", "0,0,20"]),
    (0, ["check-basis", "xy.json", "--spline", "1,1,1", "--spline", "0,x,x+y", "--spline", "0,0,y*(x+y)"]),
    (0, ["search", "xy.json", "--factors", "x;y;x+y", "--degree", "2"]),
    (1, ["search", "squares.json", "--factors", "x;x;y;y;x+y;x+y", "--degree", "6"]),
    (0, ["obstruct", "zx-obstruction.json"]),
    (0, ["probe", "fig2.json", "--trials", "200"]),
    (1, ["probe", "fig2.json", "--q", "80", "--trials", "200"]),
]


def main() -> int:
    failures = 0
    for expected, args in DEMOS:
        argv = [sys.executable, "-m", "graphsplines", args[0], str(GRAPHS / args[1])]
        argv += args[2:]
        print(f"$ graphsplines {args[0]} graphs/{args[1]} {' '.join(args[2:])}")
        result = subprocess.run(argv, capture_output=True, text=True)
        sys.stdout.write(result.stdout)
        if result.stderr:
            sys.stderr.write(result.stderr)
        status = "ok" if result.returncode == expected else "UNEXPECTED"
        if status == "UNEXPECTED":
            failures += 1
        print(f"-> exit {result.returncode} (expected {expected}) {status}")
        print()
    if failures:
        print(f"{failures} demo(s) returned an unexpected status")
        return 1
    print(f"all {len(DEMOS)} demos behaved as expected")
    return 0


if __name__ == "__main__":
    sys.exit(main())
