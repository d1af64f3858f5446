"""Replay the worked reference examples and print the pass/fail table.

Equivalent to ``gaussian-partners paper-examples``; ``--json`` writes the rows
to a file as well.
"""

import argparse
import json
import sys
from dataclasses import asdict

from gaussian_partners.catalog import format_table, run_examples


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", metavar="PATH", help="also write the rows as JSON")
    args = parser.parse_args()
    rows = run_examples()
    print(format_table(rows))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([asdict(r) for r in rows], fh, indent=2)
    return 0 if all(r.passed for r in rows) else 3


if __name__ == "__main__":
    sys.exit(main())
