"""Run the whole verification battery and print the reports.

Equivalent to ``orlicz-lab verify --suite all``; exit status is nonzero if
any check fails.
"""

import sys
import time

from orlicz_lab import run_all_suites

t0 = time.time()
reports = run_all_suites()
elapsed = time.time() - t0

for rep in reports:
    print(rep.to_text())
    print()

n_checks = sum(len(r.checks) for r in reports)
n_fail = sum(1 for r in reports for c in r.checks if not c.passed)
print(f"battery: {len(reports)} suites, {n_checks} checks, {n_fail} failures, "
      f"{elapsed:.1f}s")
sys.exit(0 if n_fail == 0 else 1)
