"""
Toric Classes - Command Line Entry Point

Exact characteristic classes of simplicial toric varieties, computed from
fan and polytope data with rational and cyclotomic arithmetic only.

Architecture:
- scalars: y-polynomials, rational functions and cyclotomic fields
- lattice: Smith and Hermite normal forms, saturation, quotients
- fan: simplicial fans, the groups G_sigma, star fans and cone subsets
- intersect: cycle classes, the cohomology-cap kernel and degrees
- classes: Todd, Chern and Hirzebruch classes by the Lefschetz,
  orbit and mock paths, with the identity suite
- polytope / counting: normal fans, lattice points, Ehrhart and Pick

Usage:
    python main.py fan info p2.json
    python main.py fan class wps121.json --kind hirzebruch --normalized --y -1
    python main.py fan verify p2.json
    python main.py polytope ehrhart square.json --max-dilate 4 --format text

Exit codes: 0 success, 1 invalid input, 2 identity violation, 3 unsupported input.
"""

import sys
from typing import List, Optional

from cli import handle_error, run
from utils.logger import logger


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command and return its exit code.

    Args:
        argv: Arguments without the program name, default sys.argv[1:]

    Returns:
        Process exit code
    """
    try:
        return run(argv)
    except SystemExit as exc:
        # --help and --version
        return exc.code if isinstance(exc.code, int) else 0
    except KeyboardInterrupt:
        logger.warning("Interrupted")
        return 130
    except Exception as exc:
        return handle_error(exc)


if __name__ == "__main__":
    sys.exit(main())
