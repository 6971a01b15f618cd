"""Print solved, corollary, and point-count data for a range of n.

    python scripts/sweep_modes.py --max-n 6
"""

import argparse

from detvar import compare_modes, corollary_poincare, projective_det_count, solved_poincare


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=5)
    args = parser.parse_args()
    for n in range(2, args.max_n + 1):
        report = compare_modes(n)
        print(f"n = {n}")
        print(f"  solved     {solved_poincare(n)}")
        print(f"  corollary  {corollary_poincare(n)}")
        print(f"  count      {projective_det_count(n).format('q')}")
        print(f"  chi        solved {report.euler_solved}, count {report.euler_count}")
        print(f"  discrepant degrees {report.discrepant_degrees()}")


if __name__ == "__main__":
    main()
