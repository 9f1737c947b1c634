"""
Running the law suites
======================

Every suite enumerates all instances up to a bound and reports failures
with their inputs. The same reports back the command line tool.
"""

import json

from finord import SUITES, run_suite

for name in ["thm-2.9", "lemma-2.26", "monoid-sigma"]:
    report = run_suite(name, bound=3)
    print(report.summary())

print(len(SUITES), "suites registered")
print(json.dumps(run_suite("op", bound=2).to_dict(), sort_keys=True))
