#!/usr/bin/env python3
# Sweep of the generator power against the closed forms quoted for the
# census manifolds, next to the bundled hand-written reduced formulas.
# See README.md for why several of them cannot be reproduced.

# %%
from gendw.report import format_report, reproduction_report

print(format_report(reproduction_report()))
