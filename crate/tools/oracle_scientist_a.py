"""Exact-rational recomputation of the metrics for a records CSV under the
default demonstration schedule. Output values are frozen into the Rust tests."""
import csv
import sys
from fractions import Fraction
from math import comb


def schedule_x(m):
    if m == 1:
        return Fraction(0)
    return min(Fraction(15, 100) + Fraction(5, 100) * (m - 1), Fraction(1, 2))


def pseq(m):
    x = schedule_x(m)
    j = m - 1
    return sorted((comb(j, a) * x**a * (1 - x) ** (j - a) for a in range(j + 1)), reverse=True)


def main(path):
    rows = list(csv.DictReader(open(path)))
    n = len(rows)
    c = Fraction(0)
    c_single = 0
    n_s = 0
    cites = []
    hist = [0] * 10
    first = 0
    for r in rows:
        m, p, ci = int(r["author_count"]), int(r["author_position"]), int(r["citations"])
        cites.append(ci)
        frac = pseq(m)[p - 1]
        if m == 1:
            n_s += 1
            c_single += ci
        elif p == 1:
            first += 1
        c += frac * ci
        hist[min(int(frac * 10), 9)] += 1
    c_false = sum(cites)
    srt = sorted(cites, reverse=True)
    h = max(k for k in range(n + 1) if all(v >= k for v in srt[:k]))
    q = c / n
    p_val = min(Fraction(n), q)
    print(f"N={n} N_s={n_s} first_author_multi={first} C_single={c_single}")
    print(f"C={float(c):.12f}")
    print(f"Q={float(q):.12f}")
    print(f"P={float(p_val):.12f}")
    print(f"C_false={c_false} H={h} ratio={float(c / c_false):.12f}")
    print(f"histogram={hist}")


if __name__ == "__main__":
    main(sys.argv[1])
