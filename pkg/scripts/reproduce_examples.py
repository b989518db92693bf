"""Replay both worked examples and print every stage next to its golden."""

import json
import sys

from germring.cli import EXAMPLES, run_example
from germring.errors import GoldenMismatch


def main():
    failed = False
    for name in EXAMPLES:
        try:
            result = run_example(name)
            stages = result["stages"]
        except GoldenMismatch as exc:
            stages, failed = exc.stages, True
        print(f"== example {name}")
        for s in stages:
            mark = "ok  " if s["matched"] else "DIFF"
            got = s["got"]
            if isinstance(got, dict) and "generators" in got:
                got = got["generators"]
            print(f"  {mark} {s['stage']:<22} {json.dumps(got)}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
