"""Pure-Python integer kernels for Sturm chains.

Polynomials are lists of Python ints, ascending degree, no trailing zeros.
``_kernels.pyx`` implements the same four functions; keep them in sync.
"""

from math import gcd


def primitive(p):
    """Divide by the positive gcd of the coefficients (sign kept)."""
    g = 0
    for c in p:
        g = gcd(g, c)
        if g == 1:
            return list(p)
    if g == 0:
        return []
    return [c // g for c in p]


def prem_pos(a, b):
    """Positive multiple of ``a mod b``, made primitive.

    Each elimination step scales by ``|lc(b)|`` so the sign of the true
    remainder is preserved, which Sturm chains need.
    """
    r = list(a)
    db = len(b) - 1
    lb = b[db]
    c = lb if lb > 0 else -lb
    s = 1 if lb > 0 else -1
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lr = r[-1] * s
        r = [x * c for x in r]
        for i in range(db + 1):
            r[i + shift] -= lr * b[i]
        while r and r[-1] == 0:
            r.pop()
        if r:
            r = primitive(r)
    return r


def sign_at(p, num, den):
    """Sign of p(num/den) for den > 0, via homogenized Horner."""
    if not p:
        return 0
    acc = 0
    dpow = 1
    n = len(p)
    # acc = sum p[i] num^i den^(n-1-i), built from the top coefficient down
    for i in range(n - 1, -1, -1):
        acc = acc * num + p[i] * dpow
        dpow *= den
    if acc > 0:
        return 1
    return -1 if acc < 0 else 0


def variations(chain, num, den):
    """Sign variations of the chain at num/den, zeros skipped."""
    count = 0
    last = 0
    for p in chain:
        s = sign_at(p, num, den)
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def variations_inf(chain, direction):
    """Sign variations at +infinity (direction=1) or -infinity (direction=-1)."""
    count = 0
    last = 0
    for p in chain:
        if not p:
            continue
        s = 1 if p[-1] > 0 else -1
        if direction < 0 and (len(p) - 1) % 2:
            s = -s
        if last and s != last:
            count += 1
        last = s
    return count
