# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``; same signatures and results.

Coefficients stay arbitrary-precision Python ints, so the gain comes from
typed loop indices and avoided attribute lookups rather than machine
arithmetic.
"""

from math import gcd


cpdef list primitive(list p):
    cdef object g = 0
    cdef object c
    for c in p:
        g = gcd(g, c)
        if g == 1:
            return list(p)
    if g == 0:
        return []
    return [c // g for c in p]


cpdef list prem_pos(list a, list b):
    cdef list r = list(a)
    cdef Py_ssize_t db = len(b) - 1
    cdef Py_ssize_t shift, i, n
    cdef object lb = b[db]
    cdef object c = lb if lb > 0 else -lb
    cdef int s = 1 if lb > 0 else -1
    cdef object lr
    while r and len(r) - 1 >= db:
        n = len(r)
        shift = n - 1 - db
        lr = r[n - 1] * s
        for i in range(n):
            r[i] = r[i] * c
        for i in range(db + 1):
            r[i + shift] = r[i + shift] - lr * b[i]
        while r and r[len(r) - 1] == 0:
            r.pop()
        if r:
            r = primitive(r)
    return r


cpdef int sign_at(list p, object num, object den):
    cdef Py_ssize_t n = len(p)
    cdef Py_ssize_t i
    cdef object acc = 0
    cdef object dpow = 1
    if n == 0:
        return 0
    for i in range(n - 1, -1, -1):
        acc = acc * num + p[i] * dpow
        dpow = dpow * den
    if acc > 0:
        return 1
    if acc < 0:
        return -1
    return 0


cpdef int variations(list chain, object num, object den):
    cdef int count = 0
    cdef int last = 0
    cdef int s
    cdef list p
    for p in chain:
        s = sign_at(p, num, den)
        if s != 0:
            if last != 0 and s != last:
                count += 1
            last = s
    return count


cpdef int variations_inf(list chain, int direction):
    cdef int count = 0
    cdef int last = 0
    cdef int s
    cdef list p
    for p in chain:
        if not p:
            continue
        s = 1 if p[len(p) - 1] > 0 else -1
        if direction < 0 and (len(p) - 1) % 2:
            s = -s
        if last != 0 and s != last:
            count += 1
        last = s
    return count
