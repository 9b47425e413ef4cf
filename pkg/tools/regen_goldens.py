"""Regenerate the golden emit outputs under tests/golden/v1/.

One file per (n, index, kind) for n <= 3: every partition gets the five
polynomial kinds P-, P+, Q-, Q+, Q, and every mixed-degree index i gets
R-, R+.  Run from the repository root:

    python3 tools/regen_goldens.py
"""

from __future__ import annotations

import pathlib
import sys

from chernbound.cli import main as cli_main
from chernbound.partitions import all_partitions_up_to, format_partition

GOLDEN_DIR = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden" / "v1"

KIND_SLUGS = {
    "P-": "pminus",
    "P+": "pplus",
    "Q-": "qminus",
    "Q+": "qplus",
    "Q": "q",
    "R-": "rminus",
    "R+": "rplus",
}


def golden_cases() -> list[tuple[str, list[str]]]:
    cases = []
    for n in (1, 2, 3):
        for lam in all_partitions_up_to(n):
            slug = "l" + "-".join(str(p) for p in lam)
            for kind in ("P-", "P+", "Q-", "Q+", "Q"):
                name = f"n{n}_{KIND_SLUGS[kind]}_{slug}.txt"
                argv = [
                    "emit",
                    "--n",
                    str(n),
                    "--kind",
                    kind,
                    "--lambda",
                    format_partition(lam),
                ]
                cases.append((name, argv))
        for i in range(1, n + 1):
            for kind in ("R-", "R+"):
                name = f"n{n}_{KIND_SLUGS[kind]}_i{i}.txt"
                argv = ["emit", "--n", str(n), "--kind", kind, "--i", str(i)]
                cases.append((name, argv))
    return cases


def main() -> int:
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    for name, argv in golden_cases():
        target = GOLDEN_DIR / name
        status = cli_main(argv + ["--output", str(target)])
        if status != 0:
            print(f"failed: {name}", file=sys.stderr)
            return status
    print(f"wrote {len(golden_cases())} files to {GOLDEN_DIR}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
