#!/usr/bin/env python3
"""Build the Q8 / D8 / C4 counterexample and dump the full audit transcript."""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from bisetkit.dress import counterexample_check


def main() -> int:
    transcript = counterexample_check()
    json.dump(transcript, sys.stdout, sort_keys=True, indent=2)
    print()
    print(transcript["verdict"], file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
