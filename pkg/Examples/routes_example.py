"""
Exceptional Polynomial Routes Example

This example computes W_lambda for a few partitions along all four routes,
checks that they agree, and classifies the corresponding Darboux chains.
"""

import os
import sys

src_path = os.path.abspath(os.path.join(os.path.dirname(__file__), "../src"))
sys.path.insert(0, src_path)

from pyeop import (
    Family, Partition, partition_to_indices, is_adler, classify_regularity,
    eop_wronskian, eop_noumi_jt, eop_schur_confluent, eop_gjt_confluent,
    EopError
)

ROUTES = (eop_wronskian, eop_noumi_jt, eop_schur_confluent, eop_gjt_confluent)


def demonstrate_routes(family, lam):
    """Print every route's W-normalized polynomial and whether they agree."""
    print(f"=== {family}, lambda = ({lam}) ===")
    results = [route(family, lam) for route in ROUTES]
    for result in results:
        print(f"  {result.route.value:16s} {result.normalized}")
    agree = all(r.normalized == results[0].normalized for r in results[1:])
    print(f"  routes agree: {agree}")


def demonstrate_regularity(family, lam):
    indices = partition_to_indices(lam)
    report = classify_regularity(family, indices)
    print(f"  N = ({indices}): adler={is_adler(lam)}, interior roots={report.interior_roots}")


def main():
    cases = [
        (Family.hermite(), Partition((1, 1))),
        (Family.hermite(), Partition((2, 1))),
        (Family.laguerre("3/2"), Partition((2, 2))),
        (Family.jacobi("3/4", "5/2"), Partition((3, 1, 1))),
    ]
    for family, lam in cases:
        try:
            demonstrate_routes(family, lam)
            demonstrate_regularity(family, lam)
        except EopError as e:
            print(f"  failed: {e}")
            print(f"  context: {e.to_dict()['context']}")
        print()


if __name__ == "__main__":
    main()
