# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for the coloring-enumeration weight histogram.

Semantics match toruslink._shadow._weight_histogram_py exactly; see that
module for the convention.  The enumeration is an odometer over F_p
coefficients of the kernel basis, with each digit change realised as one
basis-row addition mod p.
"""

from libc.stdlib cimport free, malloc


def weight_histogram(int p, int strands, letters, basis, theta, int base):
    cdef int n = strands
    cdef int dim = len(basis)
    cdef Py_ssize_t nletters = len(letters)
    cdef long long total = 1
    cdef int i, j, k, sign, y, z, north, acc, w
    cdef long long step
    for i in range(dim):
        total *= p

    cdef int* lets_pos = <int*> malloc(max(1, nletters) * sizeof(int))
    cdef int* lets_sign = <int*> malloc(max(1, nletters) * sizeof(int))
    cdef int* rows = <int*> malloc(max(1, dim * n) * sizeof(int))
    cdef int* colors = <int*> malloc(n * sizeof(int))
    cdef int* scratch = <int*> malloc(n * sizeof(int))
    cdef int* region = <int*> malloc((n + 1) * sizeof(int))
    cdef int* digits = <int*> malloc(max(1, dim) * sizeof(int))
    cdef int* th = <int*> malloc(p * p * p * sizeof(int))
    cdef long long* counts = <long long*> malloc(p * sizeof(long long))
    if (lets_pos == NULL or lets_sign == NULL or rows == NULL or colors == NULL
            or scratch == NULL or region == NULL or digits == NULL or th == NULL
            or counts == NULL):
        raise MemoryError()

    try:
        for i in range(<int> nletters):
            lets_pos[i] = <int> letters[i][0] - 1
            lets_sign[i] = <int> letters[i][1]
        for i in range(dim):
            for j in range(n):
                rows[i * n + j] = <int> (basis[i][j] % p)
        for i in range(p * p * p):
            th[i] = <int> theta[i]
        for j in range(n):
            colors[j] = 0
        for i in range(dim):
            digits[i] = 0
        for i in range(p):
            counts[i] = 0
        base = base % p
        if base < 0:
            base += p

        for step in range(total):
            for j in range(n):
                scratch[j] = colors[j]
            region[0] = base
            for j in range(n):
                region[j + 1] = (2 * scratch[j] - region[j]) % p
                if region[j + 1] < 0:
                    region[j + 1] += p
            acc = 0
            for i in range(<int> nletters):
                k = lets_pos[i]
                sign = lets_sign[i]
                north = region[k + 1]
                if sign > 0:
                    y = scratch[k]
                    z = scratch[k + 1]
                    scratch[k] = z
                    scratch[k + 1] = (2 * z - y) % p
                    if scratch[k + 1] < 0:
                        scratch[k + 1] += p
                    acc += p - th[(north * p + y) * p + z]
                else:
                    z = scratch[k]
                    y = scratch[k + 1]
                    scratch[k] = (2 * z - y) % p
                    if scratch[k] < 0:
                        scratch[k] += p
                    scratch[k + 1] = z
                    acc += th[(north * p + y) * p + z]
                region[k + 1] = (2 * scratch[k] - region[k]) % p
                if region[k + 1] < 0:
                    region[k + 1] += p
            counts[acc % p] += 1
            i = 0
            while i < dim:
                digits[i] += 1
                for j in range(n):
                    colors[j] += rows[i * n + j]
                    if colors[j] >= p:
                        colors[j] -= p
                if digits[i] < p:
                    break
                digits[i] = 0
                i += 1

        return [counts[i] for i in range(p)]
    finally:
        free(lets_pos)
        free(lets_sign)
        free(rows)
        free(colors)
        free(scratch)
        free(region)
        free(digits)
        free(th)
        free(counts)
