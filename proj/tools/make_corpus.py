#!/usr/bin/env python3
"""Regenerate the bundled regression corpus under corpus/.

Labels ("c expect: sat|unsat") are computed here by brute-force enumeration,
independently of the C++ library. Formulas are kept small enough that most
of them also fit the statevector simulator (n + mu <= 24).
"""

import pathlib
import random
import sys


def count(n, clauses):
    """Satisfying assignments by enumeration; bit v-1 of e is the value of x_v."""
    masks = [(sum(1 << (l - 1) for l in set(c) if l > 0), sum(1 << (-l - 1) for l in set(c) if l < 0))
             for c in clauses]
    full = (1 << n) - 1
    return sum(1 for e in range(1 << n) if all((e & p) | ((full ^ e) & q) for p, q in masks))


def mu(clauses):
    cl = [c for c in clauses if not any(-l in c for l in c)]
    if any(len(c) == 0 for c in cl):
        return 1
    if not cl:
        return 1
    return sum(len(set(c)) - 1 for c in cl) + len(cl) - 1 + 1


def write(out, name, n, clauses, note):
    r = count(n, clauses)
    lines = [f"c {note}", f"c r = {r} of {2 ** n}", f"c expect: {'sat' if r else 'unsat'}",
             f"p cnf {n} {len(clauses)}"]
    lines += [" ".join(str(l) for l in c) + (" 0" if c else "0") for c in clauses]
    (out / f"{name}.cnf").write_text("\n".join(lines) + "\n")
    return r


def random_formula(rng, n, m, width):
    clauses = []
    for _ in range(m):
        k = rng.randint(1, min(width, n))
        vs = rng.sample(range(1, n + 1), k)
        clauses.append([v if rng.random() < 0.5 else -v for v in vs])
    return clauses


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "corpus")
    out.mkdir(parents=True, exist_ok=True)
    for old in out.glob("*.cnf"):
        old.unlink()
    rng = random.Random(20240611)

    write(out, "edge_empty_formula", 3, [], "empty formula: every assignment satisfies it")
    write(out, "edge_empty_clause", 2, [[1, 2], []], "contains the empty clause")
    write(out, "edge_contradiction", 1, [[1], [-1]], "x1 and not x1")
    write(out, "edge_tautology_only", 2, [[1, -1], [2, -2]], "only tautological clauses")
    write(out, "edge_tautology_mixed", 3, [[1, -1, 2], [2], [-3]], "tautology next to ordinary clauses")
    write(out, "edge_single_or", 2, [[1, 2]], "x1 or x2, r = 3")
    write(out, "edge_xor2", 2, [[1, 2], [-1, -2]], "exclusive or")
    write(out, "edge_all_four", 2, [[1, 2], [1, -2], [-1, 2], [-1, -2]], "all four 2-clauses, UNSAT")

    # r = 1 needles: n unit clauses with a fixed sign pattern.
    for n in (4, 6, 8, 10, 12):
        signs = [1 if (i * 7 + n) % 3 else -1 for i in range(1, n + 1)]
        write(out, f"needle_units_n{n:02d}", n, [[s * v] for v, s in zip(range(1, n + 1), signs)],
              f"unique solution, q^2 = 1/2^{n}")
    # Needle through an implication chain x1, x1 -> x2, ..., unique all-ones.
    for n in (6, 8):
        write(out, f"needle_chain_n{n:02d}", n, [[1]] + [[-v, v + 1] for v in range(1, n)],
              "implication chain, unique all-ones solution")
    # Needle made unsatisfiable by one extra clause.
    write(out, "needle_broken_n08", 8, [[v] for v in range(1, 9)] + [[-3, -5]], "units plus a conflicting clause")

    # Pigeonhole: 3 pigeons, 2 holes (UNSAT).
    p = lambda i, j: 2 * i + j + 1
    php = [[p(i, 0), p(i, 1)] for i in range(3)]
    php += [[-p(a, j), -p(b, j)] for j in range(2) for a in range(3) for b in range(a + 1, 3)]
    write(out, "php_3_2", 6, php, "pigeonhole 3 -> 2")

    # Random mixed-width formulas; keep n + mu <= 24 so they run in statevector mode.
    made = {"sat": 0, "unsat": 0}
    idx = 0
    while made["sat"] < 14 or made["unsat"] < 12:
        n = rng.randint(2, 7)
        m = rng.randint(2, 10)
        clauses = random_formula(rng, n, m, 3)
        if n + mu(clauses) > 24:
            continue
        label = "sat" if count(n, clauses) else "unsat"
        if made[label] >= (14 if label == "sat" else 12):
            continue
        made[label] += 1
        write(out, f"random_{idx:02d}_n{n}_m{m}", n, clauses, f"random mixed-width, seed index {idx}")
        idx += 1

    # Planted 3-SAT with few solutions, beyond statevector reach (oracle mode only).
    for n in (10, 12):
        planted = [rng.randint(0, 1) for _ in range(n)]
        while True:
            clauses = []
            while len(clauses) < 6 * n:
                c = [v if rng.random() < 0.5 else -v for v in rng.sample(range(1, n + 1), 3)]
                if any((planted[abs(l) - 1] == 1) == (l > 0) for l in c):
                    clauses.append(c)
            if count(n, clauses) <= 4:
                write(out, f"planted3sat_n{n}", n, clauses, "planted 3-SAT with few solutions")
                break

    print(f"wrote {len(list(out.glob('*.cnf')))} formulas to {out}")


if __name__ == "__main__":
    main()
