"""Exhaustive checks from Python, then the same from the command line."""

import subprocess
import sys

from cfckit.harness import report_text, run_suite

# Every tree of order 6..8 against the tree threshold.
print(report_text(run_suite("thm-3.1", order=8)))

# The characterisation suite reports its two known exceptions at order 6.
report = run_suite("characterizations", order=6)
for v in report.violations:
    print("violation:", v.tag, v.graph6, v.detail)

# The CLI emits the same report as line-delimited JSON.
out = subprocess.run(
    [sys.executable, "-m", "cfckit", "suite", "cor-2.5", "--order", "6", "--output", "structured"],
    capture_output=True,
    text=True,
).stdout
print(out)
