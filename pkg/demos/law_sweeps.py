"""
Exhaustive law sweeps
=====================

Every algebraic law the library relies on, checked on all small instances.
Raises on the first counterexample; prints a case count per suite otherwise.
"""
from polyentropy.laws import run_all

results = run_all(max_positions=3, max_exponent=3)
width = max(len(r.name) for r in results)
for r in results:
    print(f"{r.name:<{width}}  {r.cases:>7} cases")
print(f"all {len(results)} suites passed, {sum(r.cases for r in results)} cases total")
