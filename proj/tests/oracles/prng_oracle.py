#!/usr/bin/env python3
"""Naive Parisi-Rapuano reference: keeps the whole history in a Python list.

Writes `seed=<s> k=<k> out=<hex32>` lines for the first 1000 outputs of
eight fixed seeds.
"""

import sys

MASK64 = (1 << 64) - 1
MASK32 = (1 << 32) - 1

SEEDS = [0, 1, 2, 7, 42, 12345, 0xDEADBEEF, 0xFFFFFFFFFFFFFFFF]
COUNT = 1000


def mix64(z):
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def initial_history(seed):
    state = seed
    hist = []
    for _ in range(62):
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        hist.append(mix64(state) >> 32)
    if not any(v & 1 for v in hist[7:]):
        hist[61] |= 1
    return hist


def outputs(seed, count):
    # hist[j] is I(j - 62); new values are appended.
    hist = initial_history(seed)
    out = []
    for _ in range(count):
        k = len(hist)
        fresh = (hist[k - 24] + hist[k - 55]) & MASK32
        out.append(fresh ^ hist[k - 61])
        hist.append(fresh)
    return out


def main(path):
    with open(path, "w") as f:
        for s in SEEDS:
            for k, v in enumerate(outputs(s, COUNT)):
                f.write(f"seed={s} k={k} out={v:08x}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "prng_vectors.txt")
