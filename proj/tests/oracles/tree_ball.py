"""Brute-force count of normalized lattices for P = t^2 - D e^(2m), D a non-square.

Here t = u e^m with u^2 = D, so B = O + e^m O_E and the points are the
O-submodules M with e^m O_E <= M <= O_E containing a unit. We enumerate
F_q-subspaces of O_E / e^m O_E (basis e^i, e^i u) in reduced row echelon form
and keep those stable under multiplication by e.
"""
import itertools
import sys


def rref_subspaces(n, q):
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            free = [(r, c) for r in range(k) for c in range(pivots[r] + 1, n) if c not in pivots]
            for vals in itertools.product(range(q), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for r, c in enumerate(pivots):
                    rows[r][c] = 1
                for (r, c), v in zip(free, vals):
                    rows[r][c] = v
                yield rows


def in_span(rows, v, q):
    v = list(v)
    for row in rows:
        c = next(i for i, x in enumerate(row) if x)
        if v[c]:
            f = v[c]
            v = [(a - f * b) % q for a, b in zip(v, row)]
    return not any(v)


def count(q, m):
    n = 2 * m  # coordinates (a_0, b_0, a_1, b_1, ...) for sum e^i (a_i + b_i u)

    def times_e(v):
        return [0, 0] + v[:-2]

    total = 0
    for rows in rref_subspaces(n, q):
        if not all(in_span(rows, times_e(r), q) for r in rows):
            continue
        # contains a unit iff the residue map to F_{q^2} is nonzero
        if any(r[0] or r[1] for r in rows):
            total += 1
    return total


if __name__ == "__main__":
    cases = [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2)]
    for q, m in cases:
        print(q, m, count(q, m))
    sys.stdout.flush()
