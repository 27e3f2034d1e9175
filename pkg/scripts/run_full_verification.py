#!/usr/bin/env python3
"""Run every verification suite on its full default grid.

Writes report.json next to the current directory and prints a summary.
Expect several minutes of exact arithmetic; the type-family suite is the
heavy part.
"""

import json
import sys
import time

from macdunkl.cli import main


def run():
    t0 = time.time()
    code = main(["verify", "--suite", "all", "--json", "--out", "report.json"])
    dt = time.time() - t0
    with open("report.json") as fh:
        verdicts = json.load(fh)
    failed = [v for v in verdicts if v["status"] != "pass"]
    print(f"{len(verdicts)} checks in {dt:.1f}s, {len(failed)} failing")
    for v in failed:
        print(f"  FAIL {v['identity']} {v['params']}")
    return code


if __name__ == "__main__":
    sys.exit(run())
