"""Pure-Python versions of the hot kernels.

Same signatures and results as the compiled ``_ckernels`` module.
"""
from itertools import permutations


def eval_int_terms(terms, u):
    """Sum of ``c * prod(u[i]**e[i])`` over ``(c, e)`` in ``terms``; all integers."""
    pw = [[1, x] for x in u]
    total = 0
    for c, e in terms:
        t = c
        i = 0
        for k in e:
            if k:
                row = pw[i]
                while len(row) <= k:
                    row.append(row[-1] * row[1])
                t *= row[k]
            i += 1
        total += t
    return total


def fixed_point_free_involutions(d):
    """All fixed-point-free involutions of ``range(d)`` as tuples (d even)."""
    if d % 2:
        return []
    out = []

    def rec(perm, free):
        if not free:
            out.append(tuple(perm))
            return
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            perm[a], perm[b] = b, a
            rec(perm, free[1:idx] + free[idx + 1:])

    rec([0] * d, list(range(d)))
    return out


def derangements(d):
    """Permutations of ``range(d)`` without fixed points (all cycles of length >= 2)."""
    return [p for p in permutations(range(d)) if all(p[i] != i for i in range(d))]


def _cycles(p):
    d = len(p)
    seen = [False] * d
    lengths = []
    label = [0] * d
    for s in range(d):
        if not seen[s]:
            length = 0
            x = s
            while not seen[x]:
                seen[x] = True
                label[x] = len(lengths)
                x = p[x]
                length += 1
            lengths.append(length)
    return lengths, label


def count_triples(d):
    """Tabulate transitive pairs ``(s0, s1)`` in S_d, ``s1`` a fixed-point-free
    involution and ``s0`` without fixed points.

    Returns ``{(cycle type of s0*s1, descending), cycles of s0): count}``.
    """
    counts = {}
    if d == 0 or d % 2:
        return counts
    invs = fixed_point_free_involutions(d)
    s0_data = []
    for s0 in derangements(d):
        lengths, label = _cycles(s0)
        s0_data.append((s0, len(lengths), label))
    rng = range(d)
    for s1 in invs:
        pairs = [(a, s1[a]) for a in rng if a < s1[a]]
        for s0, c0, label in s0_data:
            # connectivity of the s0-cycles glued along s1
            parent = list(range(c0))
            comps = c0
            for a, b in pairs:
                x, y = label[a], label[b]
                while parent[x] != x:
                    x = parent[x]
                while parent[y] != y:
                    y = parent[y]
                if x != y:
                    parent[x] = y
                    comps -= 1
            if comps != 1:
                continue
            tau = [s0[s1[i]] for i in rng]
            lengths = sorted(_cycles(tau)[0], reverse=True)
            key = (tuple(lengths), c0)
            counts[key] = counts.get(key, 0) + 1
    return counts
