"""Pure-Python hot kernels; the compiled ``_ckernels`` module mirrors this API."""

from __future__ import annotations


def mulmod(a, b, fold):
    """Multiply integer polynomials ``a`` and ``b`` (length ``phi``) modulo a monic polynomial.

    ``fold[j]`` holds the coefficients of ``x**(phi + j)`` reduced modulo that
    polynomial, so the high half of the product can be folded back linearly.
    """
    phi = len(a)
    prod = [0] * (2 * phi - 1)
    for i in range(phi):
        ai = a[i]
        if ai:
            for j in range(phi):
                bj = b[j]
                if bj:
                    prod[i + j] += ai * bj
    out = prod[:phi]
    for j in range(phi - 1):
        c = prod[phi + j]
        if c:
            row = fold[j]
            for t in range(phi):
                if row[t]:
                    out[t] += c * row[t]
    return out


def rewrite_normal(codes, n):
    """Rewrite an arrow-code word until no starred arrow precedes an unstarred one.

    Arrow codes are ``2*i`` for ``a_i`` and ``2*i + 1`` for ``a_i^*``.  Each
    step replaces the leftmost ``a_i^* a_i`` by ``a_{i+1} a_{i+1}^*``.
    """
    w = list(codes)
    size = len(w)
    pos = 0
    while pos < size - 1:
        if w[pos] & 1 and not w[pos + 1] & 1:
            j = ((w[pos] >> 1) + 1) % n
            w[pos] = 2 * j
            w[pos + 1] = 2 * j + 1
            pos = pos - 1 if pos > 0 else 0
        else:
            pos += 1
    return w
