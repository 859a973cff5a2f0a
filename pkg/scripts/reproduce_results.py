#!/usr/bin/env python3
"""
Re-run the published closed forms for frames, crosses and monomer-dimer tilings.

Each block prints a label and then the output of the matching
'skinny-tilings' command. Pass --quick to skip the slow computations
(the monomer-dimer generating function).
"""

import sys

try:
    from skinny_tilings.__main__ import run
    from skinny_tilings.frames import frame_seq
except ImportError as e:
    print(f"Error importing skinny_tilings: {e}")
    print("Please install the package first: pip install -e .")
    sys.exit(1)


def main() -> int:
    quick = "--quick" in sys.argv[1:]
    knuth_terms = [str(x) for x in frame_seq(2, 2, 2, 2, 15)]

    blocks = [
        ("Square frames of thickness 2", ["frame-seq", "2", "2", "2", "2", "--terms", "16"], False),
        ("... agree with 4 (2 F(n+2)^2 + (-1)^n)^2", ["verify-bound", "knuth", *knuth_terms, "--bound", "5"], False),
        ("Frame(1, 3, 3, 1) generating function", ["frame-gf", "1", "3", "3", "1", "--terms", "30"], False),
        ("Square frames of thickness 3", ["frame-seq", "3", "3", "3", "3", "--terms", "21"], False),
        ("Square frames of thickness 4", ["frame-seq", "4", "4", "4", "4", "--terms", "13"], False),
        ("Thickness-2 frames with an m x n hole", ["frame-gf-bivariate", "2", "2", "2", "2", "--terms", "15"], False),
        ("Crosses with a 2 x 2 centre", ["cross-seq", "2", "2", "--terms", "21"], False),
        ("... and their generating function", ["cross-gf", "2", "2", "--terms", "21"], False),
        ("Crosses with a 4 x 4 centre", ["cross-seq", "4", "4", "--terms", "21"], False),
        ("Monomer-dimer tilings of thickness-2 frames",
         ["frame-gf", "2", "2", "2", "2", "--mode", "md", "--terms", "80"], True),
        ("Horizontal-domino moments of 2 x n rectangles", ["moments", "rect", "2", "--terms", "8"], False),
        ("Growth ratio of thickness-2 frames", ["growth", "knuth"], False),
    ]

    status = 0
    for label, argv, slow in blocks:
        if slow and quick:
            continue
        print(f"== {label}")
        sys.stdout.flush()
        status = max(status, run(argv))
        print()
    return status


if __name__ == "__main__":
    sys.exit(main())
