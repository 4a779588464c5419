#!/usr/bin/env python3
"""Walk through every bundled certificate and its reference table.

Exercises the whole verification surface: the three numeric certificates,
the parametric one on its declared ray and just below it, and the golden
comparisons.  Everything here is exact rational arithmetic; runtime is a
few seconds.
"""

from fractions import Fraction

from flagcert import (
    compare_with_golden,
    load_certificate,
    load_golden,
    verify_certificate,
)

SEPARATOR = "-" * 72


def show(name, golden_name=None, k0=None):
    cert = load_certificate(name)
    report = verify_certificate(cert, k0=k0)
    print(SEPARATOR)
    for line in report.lines():
        print(line)
    if golden_name is not None:
        golden = load_golden(golden_name)
        mismatches = compare_with_golden(report, golden)
        print(f"reference table {golden_name}: {len(mismatches)} mismatches")
        for m in mismatches:
            print(f"  {m}")
    return report


def main():
    print("bundled certificates, verified from scratch")

    # 27-scaled and 128-scaled fixed certificates
    show("k3.cert")
    show("k4.cert")

    # the strict numeric certificate, checked against its coefficient table
    report = show("lemma074.cert", golden_name="appendixB.golden")
    frac = report.max_coefficient
    print(f"maximum scaled coefficient, exactly: {frac} (~{float(frac):.9f})")
    print(f"strictly below 44.95: {frac < Fraction(4495, 100)}")

    # the parametric certificate on its declared ray [5, oo) ...
    show("appendixA.cert", golden_name="appendixC.golden")

    # ... and below the PSD threshold, where it must fail
    report = show("appendixA.cert", k0=4)
    print("expected failure at k0=4 (the PSD condition polynomial has its")
    print(f"largest root above 4): verdict {report.verdict}")


if __name__ == "__main__":
    main()
