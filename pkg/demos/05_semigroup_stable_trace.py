#!/usr/bin/env python3
"""One-dimensional monomial rings: traces stabilize at a single ideal.

A numerical semigroup S models the ring k[[t^S]]; a monomial fractional
ideal is just a set of exponents, and the trace of I in R is I * I^{-1}.
As n grows, the traces of the powers of the maximal ideal stop moving: from
n = nu on they all equal the inverse of the first neighborhood ring.  When
the maximal ideal needs exactly two generators, nu = e - 1 and the stable
value is m^(e-1).
"""

from tracelab.semigroup import (
    first_neighborhood,
    first_neighborhood_inverse,
    ideal,
    inverse,
    is_dvr,
    is_good,
    make,
    matlis_report,
    maximal_ideal,
    power_m,
    trace_value,
    v_count,
)

for gens in ((3, 4), (3, 5, 7), (5, 6, 9)):
    s = make(gens)
    print("== semigroup generated by", gens)
    print("   gaps:", s.gaps, "| conductor:", s.conductor, "| multiplicity:", s.multiplicity)
    report = matlis_report(s)
    print("   n, v(m^n), trace(m^n):")
    for n, v, tr in report.rows:
        print("     %d  %d  %r" % (n, v, tr))
    print("   nu =", report.nu)
    print("   first neighborhood ring:", first_neighborhood(s))
    print("   its inverse:            ", first_neighborhood_inverse(s))
    print("   stable-trace law holds: ", report.stable_trace_ok)
    if report.two_generated_clause is not None:
        print("   two-generator clause (nu = e-1, inverse = m^(e-1)):",
              report.two_generated_clause)

# Goodness: m is good exactly when the ring is not a discrete valuation
# ring, and principal (shifted) ideals always have trace R.
print("== goodness")
for gens in ((1,), (2, 3), (3, 4)):
    s = make(gens)
    print("   S =", gens, "| DVR:", is_dvr(s), "| m good:", is_good(maximal_ideal(s), s))
s = make((3, 4))
shifted = ideal([5], s)
print("   a principal shift 5+S has trace", trace_value(shifted, s),
      "and is good:", is_good(shifted, s))
print("   v(m) over <3,4>:", v_count(maximal_ideal(s), s),
      "| inverse of m:", inverse(maximal_ideal(s), s))
print("   trace(m^2) == m^2:", trace_value(power_m(s, 2), s) == power_m(s, 2))
