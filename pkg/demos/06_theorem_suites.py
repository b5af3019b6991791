#!/usr/bin/env python3
"""Running the verification suites, and watching them catch a planted bug.

The three suites turn the whole theory into executable checks over a
catalog of algebras and semigroups: exhaustive cyclic-ideal enumeration
over F_2/F_3, seeded random sampling over Q.  A failure record carries the
full instance description and both canonical subspaces, enough to replay
the counterexample by hand.
"""

import json

from tracelab.verifier import (
    AlgebraSpec,
    InstanceSpec,
    corrupted_trace,
    default_catalog,
    run_suites,
    suite_section1,
)

# A quick spec: two finite-field algebras, one rational one, two semigroups.
spec = InstanceSpec(
    algebras=(
        AlgebraSpec("f2_dual", "F2", ("x",), ("x^2",)),
        AlgebraSpec("f2_fat", "F2", ("x", "y"), ("x^2", "x*y", "y^2")),
        AlgebraSpec("q_mixed", "Q", ("x", "y"), ("x^2", "x*y", "y^3")),
    ),
    semigroups=((2, 3), (3, 4)),
    duality_samples=25,
    colon_route_samples=5,
)

for result in run_suites(spec):
    print("%s: %d checks, %s" % (result.suite, result.checks,
                                 "all passed" if result.passed else "FAILURES"))

# Now sabotage the trace computation: drop one basis element of the Hom
# space.  The suite must notice and report a reconstructible witness.
broken = suite_section1(spec, trace_fn=corrupted_trace)
print("\nwith a corrupted trace: %d checks, %d failures"
      % (broken.checks, len(broken.failures)))
witness = next(f for f in broken.failures if f.left is not None)
print("first witnessed failure:", witness.check)
print(json.dumps(witness.to_json(), sort_keys=True, indent=2)[:800], "...")

# The full checked-in catalog is what `tracelab verify` runs.
catalog = default_catalog()
print("\ndefault catalog: %d algebras, %d semigroups"
      % (len(catalog.algebras), len(catalog.semigroups)))
