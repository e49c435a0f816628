"""Scan the structure constants for the two open positivity claims.

Every structure constant observed so far is a nonnegative integer, and is
nonzero only when the component sizes of the index match the componentwise
sum of the factors. Neither claim is proved; the engine only reports
counterexamples, and so far there are none to report.
"""

import json

from weylchar import scan_structure_constants
from weylchar.serialize import scan_report_to_obj

report = scan_structure_constants(n_max=4, r=2)

print(f"scanned {report['scanned']} factor pairs up to total size {report['n_max']}")
print(f"negative coefficients found: {len(report['c1_violations'])}")
print(f"support violations found:    {len(report['c2_violations'])}")

print("\nJSON report:")
print(json.dumps(scan_report_to_obj(report), indent=2))
