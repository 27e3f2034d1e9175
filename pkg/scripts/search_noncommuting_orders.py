#!/usr/bin/env python3
"""Witness search for noncommuting expansion orders on a chosen grid.

Usage: search_noncommuting_orders.py [nmax] [order_max] [degree]

Scans commutators of the order-i coefficients (i >= 4) against the
order-2 and order-3 coefficients and prints the first exact witness.
"""

import sys

from macdunkl.cli import main


def run():
    nmax = sys.argv[1] if len(sys.argv) > 1 else "4"
    order_max = sys.argv[2] if len(sys.argv) > 2 else "4"
    degree = sys.argv[3] if len(sys.argv) > 3 else "4"
    return main(
        [
            "witness",
            "--nmax", nmax,
            "--order-max", order_max,
            "--degree", degree,
            "--K", order_max,
            "--json",
        ]
    )


if __name__ == "__main__":
    sys.exit(run())
