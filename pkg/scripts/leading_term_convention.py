"""Which Lehmer code gives the leading exponent of S_w, for n = 1..N."""

import argparse

from schubert_nabla.schubert import build_schubert_table, leading_term_convention


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5)
    args = parser.parse_args()
    print(f"{'n':>2} {'total':>6} {'code(w)':>8} {'code(w^-1)':>11}")
    for n in range(1, args.max_n + 1):
        c = leading_term_convention(build_schubert_table(n))
        print(f"{n:>2} {c['total']:>6} {c['code_w']:>8} {c['code_w_inverse']:>11}")


if __name__ == "__main__":
    main()
