# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot kernels; see ``_fallback`` for the reference."""
from ._fallback import fixed_point_free_involutions, derangements

cdef enum:
    MAXD = 16


def eval_int_terms(terms, u):
    cdef Py_ssize_t n = len(u)
    cdef Py_ssize_t i, k
    cdef list pw = [[1, x] for x in u]
    cdef list row
    cdef tuple e
    total = 0
    for c, e in terms:
        t = c
        for i in range(n):
            k = e[i]
            if k:
                row = <list>pw[i]
                while len(row) <= k:
                    row.append(row[len(row) - 1] * row[1])
                t *= row[k]
        total += t
    return total


cdef int _find(int* parent, int x) nogil:
    while parent[x] != x:
        x = parent[x]
    return x


def count_triples(int d):
    cdef dict counts = {}
    if d == 0 or d % 2:
        return counts
    if d > MAXD:
        raise ValueError(f"degree {d} exceeds compiled bound {MAXD}")
    cdef list invs = fixed_point_free_involutions(d)
    cdef list ders = derangements(d)
    cdef Py_ssize_t nd = len(ders), ni = len(invs)
    cdef Py_ssize_t a, b, i, j, t, x, y, comps, c0, length
    cdef int s0[MAXD]
    cdef int s1[MAXD]
    cdef int tau[MAXD]
    cdef int label[MAXD]
    cdef int parent[MAXD]
    cdef int seen[MAXD]
    cdef int hist[MAXD + 1]
    cdef long long code
    cdef object key
    # flatten derangements and their cycle labels into C-side storage
    cdef list flat_s0 = []
    cdef list flat_label = []
    cdef list ncyc = []
    for p in ders:
        flat_s0.extend(p)
        for i in range(d):
            seen[i] = 0
        c0 = 0
        for i in range(d):
            if not seen[i]:
                x = i
                while not seen[x]:
                    seen[x] = 1
                    label[x] = c0
                    x = p[x]
                c0 += 1
        for i in range(d):
            flat_label.append(label[i])
        ncyc.append(c0)
    cdef int[:] S0 = memoryview(bytearray(4 * nd * d)).cast('i')
    cdef int[:] LAB = memoryview(bytearray(4 * nd * d)).cast('i')
    cdef int[:] NC = memoryview(bytearray(4 * max(nd, 1))).cast('i')
    for i in range(nd * d):
        S0[i] = flat_s0[i]
        LAB[i] = flat_label[i]
    for i in range(nd):
        NC[i] = ncyc[i]
    cdef dict raw = {}
    for j in range(ni):
        inv = invs[j]
        for i in range(d):
            s1[i] = inv[i]
        for t in range(nd):
            c0 = NC[t]
            for i in range(c0):
                parent[i] = i
            comps = c0
            for a in range(d):
                b = s1[a]
                if a < b:
                    x = _find(parent, LAB[t * d + a])
                    y = _find(parent, LAB[t * d + b])
                    if x != y:
                        parent[x] = y
                        comps -= 1
            if comps != 1:
                continue
            for i in range(d):
                tau[i] = S0[t * d + s1[i]]
                seen[i] = 0
            for i in range(d + 1):
                hist[i] = 0
            for i in range(d):
                if not seen[i]:
                    length = 0
                    x = i
                    while not seen[x]:
                        seen[x] = 1
                        x = tau[x]
                        length += 1
                    hist[length] += 1
            code = c0
            for i in range(1, d + 1):
                code = code * (d + 1) + hist[i]
            raw[code] = raw.get(code, 0) + 1
    for code, cnt in raw.items():
        hist_py = []
        rem = code
        for i in range(d, 0, -1):
            hist_py.append((i, rem % (d + 1)))
            rem //= d + 1
        c0 = rem
        lengths = []
        for length, m in sorted(hist_py, reverse=True):
            lengths.extend([length] * m)
        key = (tuple(lengths), c0)
        counts[key] = counts.get(key, 0) + cnt
    return counts
