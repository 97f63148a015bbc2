"""Run the full battery of exhaustive checks at one size.

Every check sweeps the complete family, so a pass here is a proof for
that size, not a sample.  The same battery is available from the command
line as ``ascentdyck verify <n>``.
"""

import sys

from ascentdyck import (
    check_bijectivity,
    check_characterization,
    check_counts,
    check_invariants,
    check_roundtrip,
    check_statistics,
)


def run(n: int = 9) -> None:
    for report in (
        check_counts(n),
        check_roundtrip(n),
        check_bijectivity(n),
        check_invariants(n),
        check_statistics(n),
        check_characterization(min(n, 10), None),
    ):
        print(report.summary())


if __name__ == "__main__":
    run(int(sys.argv[1]) if len(sys.argv) > 1 else 9)
