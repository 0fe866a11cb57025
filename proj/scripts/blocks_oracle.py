#!/usr/bin/env python3
"""Reference evaluation of the Donoho-Johnstone Blocks test signal.

Writes tests/fixtures/blocks_2048.csv with t,f(t) pairs on a 2048-point
equispaced grid over [0,1].  The C++ implementation is required to match
these values bit for bit, so the summation order below (ascending jump
index) is part of the contract.
"""

import os

JUMP_LOCATIONS = (0.10, 0.13, 0.15, 0.23, 0.25, 0.40, 0.44, 0.65, 0.76, 0.78, 0.81)
JUMP_HEIGHTS = (4.0, -5.0, 3.0, -4.0, 5.0, -4.2, 2.1, 4.3, -3.1, 2.1, -4.2)


def sign(x: float) -> float:
    if x > 0.0:
        return 1.0
    if x < 0.0:
        return -1.0
    return 0.0


def blocks(t: float) -> float:
    acc = 0.0
    for tk, hk in zip(JUMP_LOCATIONS, JUMP_HEIGHTS):
        acc += hk * (1.0 + sign(t - tk)) / 2.0
    return acc


def main() -> None:
    n = 2048
    out_dir = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures")
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, "blocks_2048.csv")
    with open(path, "w", newline="\n") as fh:
        for i in range(n):
            t = i / (n - 1.0)
            fh.write("%.17g,%.17g\n" % (t, blocks(t)))
    print("wrote", path)


if __name__ == "__main__":
    main()
