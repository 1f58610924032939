"""Tabulate |det M~(l)|, the product formula, the observed sign and timing."""

import argparse
import math
import time

from schubert_nabla.stanley import verify_stanley


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6)
    args = parser.parse_args()
    for n in range(1, args.max_n + 1):
        for ell in range(math.comb(n, 2) // 2 + 1):
            start = time.perf_counter()
            rep = verify_stanley(n, ell)
            ms = (time.perf_counter() - start) * 1000
            digits = len(str(rep.det_abs))
            print(f"n={n} l={ell:>2} equal={rep.equal} sign={rep.sign:+d} "
                  f"digits={digits:>4} {ms:9.1f} ms")


if __name__ == "__main__":
    main()
