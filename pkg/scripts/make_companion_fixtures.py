"""
Write tests/fixtures/companions.json: hand-evaluated companion parameters
for 20 obstruction tuples (10 with r = p +- 1, 10 with r = kq +- 1).

Deliberately does not import twisted_torus; the formulas are typed out
again here so the fixtures stay an independent check of the library.
"""
import json
import random
from math import gcd
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "companions.json"


def adjacent_cases():
    for p in range(4, 31, 2):
        for q in range(2, p + 1, 2):
            if gcd(p, q) != 2:
                continue
            for r in (p - 1, p + 1):
                for s in (-6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6):
                    yield {"p": p, "q": q, "r": r, "s": s, "kind": "adjacent-count",
                           "side": "p-1" if r == p - 1 else "p+1",
                           "companion": [p // 2, q // 2 + s * p // 2]}


def kq_cases():
    for p in range(4, 31, 2):
        for q in range(4, p + 1, 2):
            if gcd(p, q) != 2:
                continue
            for k in range(1, (p + q + 1) // q + 1):
                for r in (k * q - 1, k * q + 1):
                    if r in (p - 1, p, p + 1) or not 2 <= r <= p + q:
                        continue
                    for s in (-6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6):
                        yield {"p": p, "q": q, "r": r, "s": s, "kind": "kq-form", "k": k,
                               "torus_core": [k, k * s + 1],
                               "cabled_component": [q // 2, p // 2 + k * k * (q // 2) * s]}


def main():
    rng = random.Random(1729)
    cases = rng.sample(list(adjacent_cases()), 10) + rng.sample(list(kq_cases()), 10)
    cases.sort(key=lambda c: (c["p"], c["q"], c["r"], c["s"]))
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(cases, indent=1) + "\n")
    print(f"wrote {len(cases)} cases to {OUT}")


if __name__ == "__main__":
    main()
