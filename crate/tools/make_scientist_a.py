"""Generate the synthetic scientist_a fixture.

Profile: 66 articles, 6 single-author, 25 first-author multi-author articles,
4 uncited, author counts (7 x1, 6 x6, 5 x5, remainder 2..4), H = 28,
total citations 2394. Citations are tuned so the partitioned total sits near
half of the conventional total.
"""
import random
from fractions import Fraction
from math import comb

SCHEDULE = {1: "0.00", 2: "0.20", 3: "0.25", 4: "0.30", 5: "0.35", 6: "0.40", 7: "0.45"}


def pseq(m):
    x = Fraction(SCHEDULE[m])
    j = m - 1
    vals = [comb(j, a) * x**a * (1 - x) ** (j - a) for a in range(j + 1)]
    return sorted(vals, reverse=True)


def h_index(cs):
    cs = sorted(cs, reverse=True)
    return max([h for h in range(len(cs) + 1) if all(c >= h for c in cs[:h])])


def total(arts):
    return sum(pseq(m)[p - 1] * c for (m, p, c) in arts)


def main():
    rng = random.Random(20220610)
    shapes = [(1, 1)] * 6
    counts = [7] + [6] * 6 + [5] * 5
    counts += [rng.choice([2, 3, 3, 4, 4]) for _ in range(66 - 6 - len(counts))]
    rng.shuffle(counts)
    # 25 first-author slots among multi-author articles
    first = set(rng.sample(range(len(counts)), 25))
    for i, m in enumerate(counts):
        p = 1 if i in first else rng.randint(2, m)
        shapes.append((m, p))
    # 28 articles with >= 28 citations, 34 with 1..28, 4 uncited
    order = list(range(66))
    rng.shuffle(order)
    cites = [0] * 66
    for k, i in enumerate(order):
        if k < 28:
            cites[i] = rng.randint(29, 90)
        elif k < 62:
            cites[i] = rng.randint(1, 27)
        else:
            cites[i] = 0
    target_c = Fraction(1172)

    def score(cs):
        arts = [(m, p, c) for (m, p), c in zip(shapes, cs)]
        return abs(float(total(arts) - target_c)), sum(cs)

    # Fix total to 2394 while keeping H = 28, then tune C by moving citations.
    def valid(cs):
        return sum(cs) == 2394 and h_index(cs) == 28 and sum(1 for c in cs if c == 0) == 4

    while sum(cites) != 2394:
        i = rng.choice([i for i in range(66) if cites[i] >= 29])
        cites[i] += 1 if sum(cites) < 2394 else -1
        if cites[i] < 29:
            cites[i] = 29
    assert valid(cites), (sum(cites), h_index(cites))
    best = score(cites)[0]
    for _ in range(200000):
        a, b = rng.sample(range(66), 2)
        d = rng.randint(1, 5)
        trial = cites[:]
        trial[a] += d
        trial[b] -= d
        if trial[b] < 0 or not valid(trial):
            continue
        s = score(trial)[0]
        if s < best:
            best, cites = s, trial
        if best < 0.05:
            break
    with open("fixtures/scientist_a.csv", "w") as f:
        f.write("article_id,citations,author_count,author_position,x_override,s_override,explicit_partition,rank_override\n")
        for i, ((m, p), c) in enumerate(zip(shapes, cites)):
            f.write(f"A{i + 1:03d},{c},{m},{p},,,,\n")


if __name__ == "__main__":
    main()
