"""Regenerate the local b-file fixtures.

The OEIS is not reachable from the build environment, so the fixtures are
produced here by summing fixed-point counts over permutation cycle types
(orbit counting), a route that shares no code with the Rust crate. The
leading terms were checked by hand against the published sequences.
"""
from fractions import Fraction
from math import factorial
import sys

SEQUENCES = {2: "A000081", 3: "A005750", 4: "A052751", 5: "A052773", 6: "A052781"}
TERMS = 25


def partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield []
        return
    for part in range(min(n, max_part), 0, -1):
        for rest in partitions(n - part, part):
            yield [part] + rest


def fixed_points(k, mult):
    total = 1
    for i, ni in mult.items():
        sigma = sum(d * nd for d, nd in mult.items() if i % d == 0)
        sigma_star = sigma - i * ni
        total *= (1 + (k - 1) * sigma) ** (ni - 1) * (1 + (k - 1) * sigma_star)
    return total


def orbit_count(k, n):
    acc = Fraction(0)
    for lam in partitions(n):
        mult = {}
        for part in lam:
            mult[part] = mult.get(part, 0) + 1
        z = 1
        for i, ni in mult.items():
            z *= i ** ni * factorial(ni)
        # ni - 1 may be negative only if ni == 0, which never occurs here
        acc += Fraction(fixed_points(k, mult), z)
    assert acc.denominator == 1
    return acc.numerator


def main(out_dir):
    for k, name in SEQUENCES.items():
        values = [orbit_count(k, n) for n in range(TERMS)]
        offset = 0
        if k == 2:
            # rooted trees by node count: a(0) = 0, a(n + 1) = b_n
            values = [0] + values
        with open(f"{out_dir}/b{name[1:]}.txt", "w") as fh:
            fh.write(f"# {name}\n")
            for i, v in enumerate(values):
                fh.write(f"{i + offset} {v}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else ".")
