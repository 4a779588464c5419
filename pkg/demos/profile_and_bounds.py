#!/usr/bin/env python3
"""The lower-bound profile curve and the two-local-maxima arithmetic.

Builds the conjectured minimum-density curve from its extremal blowup
models, prints the values at the landmark densities, and shows why the
certified ceiling 44.95/128 separates the two local maxima 10/27 and
45/128.
"""

from fractions import Fraction

from flagcert import (
    BlowupModel,
    blowup_density,
    complete,
    conjecture_value,
    parse_paircode,
    piece_model,
    profile_csv,
    profile_table,
    turan_bound,
)

TARGET = parse_paircode("2 2 2 1 1 2 2 2 2 2")


def main():
    print("values forced at the complete-multipartite densities:")
    for k in range(3, 8):
        e = Fraction(k - 1, k)
        uniform = BlowupModel(complete(k), (Fraction(1, k),) * k)
        value = turan_bound(k)
        assert blowup_density(uniform, TARGET) == value
        print(
            f"  k={k}: edge density {e} -> {value} (~{float(value):.6f}),"
            " reproduced by the uniform blowup"
        )

    print()
    print("between those densities the curve follows one algebraic piece")
    print("per k; each value comes from an explicit weighted blowup:")
    for e in (Fraction(7, 10), Fraction(37, 50), Fraction(78, 100)):
        k = 3 if e <= Fraction(3, 4) else 4
        model = piece_model(k, e)
        value = conjecture_value(e)
        assert blowup_density(model, TARGET) == value
        print(f"  e={float(e):.2f}: {float(value):.6f} (k={k} piece)")

    print()
    threshold = Fraction(4495, 100) / 128
    left = conjecture_value(Fraction(2, 3)).as_fraction()
    right = conjecture_value(Fraction(3, 4)).as_fraction()
    dip = conjecture_value(Fraction(37, 50))
    print("two-local-maxima arithmetic:")
    print(f"  certified ceiling at e=0.74:  44.95/128 = {float(threshold):.6f}")
    print(f"  curve value at e=2/3:         10/27     = {float(left):.6f}")
    print(f"  curve value at e=3/4:         45/128    = {float(right):.6f}")
    print(f"  curve value at e=0.74:                    {float(dip):.6f}")
    print(f"  both maxima exceed the ceiling: {left > threshold and right > threshold}")
    print(f"  the dip at 0.74 sits below it:  {float(dip) < float(threshold)}")

    points = profile_table(Fraction(3, 5), Fraction(4, 5), Fraction(1, 100))
    print()
    print("curve samples around the dip (e,value):")
    print(profile_csv(points), end="")


if __name__ == "__main__":
    main()
