"""Print the Fibonacci torus-knot inequality chain for a range of n.

    python scripts/fib_chain.py --max-n 40
"""

from __future__ import annotations

import argparse

from linkcomplexity.bounds import strict_log5_lower
from linkcomplexity.report import fib_report


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=30)
    args = ap.parse_args()

    print(f"{'n':>3} {'crn':>22} {'lower':>5} {'upper':>5} {'log5 f_(n-1)':>12}  chain")
    for n in range(4, args.max_n + 1):
        rep = fib_report(n)
        if rep.skipped:
            continue
        x = rep.extra
        print(f"{n:>3} {rep.crn.value:>22} {rep.interval.lower:>5} {rep.interval.upper:>5} "
              f"{strict_log5_lower(x['q']):>12}  {'ok' if x['chain_ok'] and x['half_log_chain'] else 'BROKEN'}")


if __name__ == "__main__":
    main()
