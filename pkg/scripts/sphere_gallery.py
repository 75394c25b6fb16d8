#!/usr/bin/env python3
"""Certify the sphere ideals of every squarefree ideal on up to n variables.

Usage: python3 scripts/sphere_gallery.py [--n 3] [--verbose]

Enumerates all proper nonzero squarefree monomial ideals on 1..n
variables, builds each sphere ideal with respect to the all-ones vector,
and prints the certificate summary.
"""

import argparse
import itertools
import sys

from slidepol import bm_complex, make_ring, minimalize, render_ideal, sphere_certificate
from slidepol.core import ones_vec

NAMES = ("x", "y", "z", "w", "u", "v")


def squarefree_ideals(n):
    ring = make_ring(NAMES[:n])
    subsets = [
        frozenset(s)
        for k in range(1, n + 1)
        for s in itertools.combinations(range(n), k)
    ]

    def build(idx, chosen):
        if idx == len(subsets):
            if chosen:
                gens = [tuple(1 if v in s else 0 for v in range(n)) for s in chosen]
                yield minimalize(ring, gens)
            return
        yield from build(idx + 1, chosen)
        s = subsets[idx]
        if all(not (s <= t or t <= s) for t in chosen):
            chosen.append(s)
            yield from build(idx + 1, chosen)
            chosen.pop()

    yield from build(0, [])


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--verbose", action="store_true")
    args = parser.parse_args()

    failures = 0
    for n in range(1, args.n + 1):
        count = 0
        for ideal in squarefree_ideals(n):
            cert = sphere_certificate(bm_complex(ideal, ones_vec(n)), n - 2)
            count += 1
            if not cert.verdict:
                failures += 1
                print(f"FAIL n={n}: ({render_ideal(ideal)})  {cert}")
            elif args.verbose:
                print(
                    f"pass n={n}: ({render_ideal(ideal)})  dim={cert.dimension}"
                    f"  f={cert.f_vector}"
                )
        print(f"n={n}: {count} ideals certified, {failures} failures so far")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
