# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same API as ``_pykernels``."""

from libc.stdlib cimport malloc, free

cdef long long _LIMB = 1 << 20


def mulmod(a, b, fold):
    cdef Py_ssize_t phi = len(a)
    cdef Py_ssize_t i, j, t
    cdef long long *ca
    cdef long long *cb
    cdef long long *prod
    cdef long long c, fmax = 1
    cdef bint small = True
    for i in range(phi):
        if not (-_LIMB < a[i] < _LIMB and -_LIMB < b[i] < _LIMB):
            small = False
            break
    if small:
        for row in fold:
            for x in row:
                if not -_LIMB < x < _LIMB:
                    small = False
                    break
                if x > fmax:
                    fmax = x
                elif -x > fmax:
                    fmax = -x
    # |conv| <= phi * 2**40 and the fold adds at most phi**2 * fmax * 2**40
    if not small or phi > 1024 or phi * phi * fmax > (1 << 21):
        return _mulmod_obj(a, b, fold)
    ca = <long long *> malloc(phi * sizeof(long long))
    cb = <long long *> malloc(phi * sizeof(long long))
    prod = <long long *> malloc((2 * phi) * sizeof(long long))
    try:
        for i in range(phi):
            ca[i] = a[i]
            cb[i] = b[i]
        for i in range(2 * phi):
            prod[i] = 0
        for i in range(phi):
            if ca[i] != 0:
                for j in range(phi):
                    prod[i + j] += ca[i] * cb[j]
        for j in range(phi - 1):
            c = prod[phi + j]
            if c != 0:
                row = fold[j]
                for t in range(phi):
                    prod[t] += c * <long long> row[t]
        return [prod[t] for t in range(phi)]
    finally:
        free(ca)
        free(cb)
        free(prod)


cdef list _mulmod_obj(a, b, fold):
    cdef Py_ssize_t phi = len(a)
    cdef Py_ssize_t i, j, t
    cdef list prod = [0] * (2 * phi - 1)
    for i in range(phi):
        ai = a[i]
        if ai:
            for j in range(phi):
                bj = b[j]
                if bj:
                    prod[i + j] += ai * bj
    cdef list out = prod[:phi]
    for j in range(phi - 1):
        c = prod[phi + j]
        if c:
            row = fold[j]
            for t in range(phi):
                if row[t]:
                    out[t] += c * row[t]
    return out


def rewrite_normal(codes, int n):
    cdef Py_ssize_t size = len(codes)
    cdef Py_ssize_t pos = 0
    cdef int j
    cdef int *w = <int *> malloc((size + 1) * sizeof(int))
    try:
        for pos in range(size):
            w[pos] = codes[pos]
        pos = 0
        while pos < size - 1:
            if (w[pos] & 1) and not (w[pos + 1] & 1):
                j = ((w[pos] >> 1) + 1) % n
                w[pos] = 2 * j
                w[pos + 1] = 2 * j + 1
                if pos > 0:
                    pos -= 1
            else:
                pos += 1
        return [w[pos] for pos in range(size)]
    finally:
        free(w)
