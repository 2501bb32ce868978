# cython: boundscheck=False, wraparound=False, cdivision=True
# Compiled amplitude-update kernels. Same contracts as _pykernels, but
# restricted to 1-D C-contiguous complex128 buffers (the state-vector path).

from libc.math cimport cos, sin, sqrt, M_PI

ctypedef double complex cplx

cdef double _INV_SQRT2 = sqrt(0.5)


def hadamard(cplx[::1] amps, int q):
    cdef Py_ssize_t size = amps.shape[0]
    cdef Py_ssize_t half = size >> 1
    cdef Py_ssize_t low = ((<Py_ssize_t>1) << q) - 1
    cdef Py_ssize_t g, i0, i1
    cdef cplx x0, x1
    for g in range(half):
        i0 = ((g >> q) << (q + 1)) | (g & low)
        i1 = i0 | ((<Py_ssize_t>1) << q)
        x0 = amps[i0]
        x1 = amps[i1]
        amps[i0] = (x0 + x1) * _INV_SQRT2
        amps[i1] = (x0 - x1) * _INV_SQRT2


def controlled_phase(cplx[::1] amps, int qa, int qb, int u):
    cdef Py_ssize_t size = amps.shape[0]
    cdef int qlo = qa if qa < qb else qb
    cdef int qhi = qb if qa < qb else qa
    cdef Py_ssize_t mlo = ((<Py_ssize_t>1) << qlo) - 1
    cdef Py_ssize_t mhi = ((<Py_ssize_t>1) << qhi) - 1
    cdef double ang = 2.0 * M_PI / (<double>((<Py_ssize_t>1) << u))
    cdef cplx w = cos(ang) + 1j * sin(ang)
    cdef Py_ssize_t g, i
    for g in range(size >> 2):
        # insert a 1-bit at qlo, then at qhi (qlo < qhi keeps positions stable)
        i = ((g >> qlo) << (qlo + 1)) | (g & mlo) | ((<Py_ssize_t>1) << qlo)
        i = ((i >> qhi) << (qhi + 1)) | (i & mhi) | ((<Py_ssize_t>1) << qhi)
        amps[i] = amps[i] * w


def swap(cplx[::1] amps, int qa, int qb):
    cdef Py_ssize_t size = amps.shape[0]
    cdef int qlo = qa if qa < qb else qb
    cdef int qhi = qb if qa < qb else qa
    cdef Py_ssize_t mlo = ((<Py_ssize_t>1) << qlo) - 1
    cdef Py_ssize_t mhi = ((<Py_ssize_t>1) << qhi) - 1
    cdef Py_ssize_t flip = ((<Py_ssize_t>1) << qa) | ((<Py_ssize_t>1) << qb)
    cdef Py_ssize_t g, i, j
    cdef cplx tmp
    for g in range(size >> 2):
        # enumerate indices with bit qlo = 1 and bit qhi = 0
        i = ((g >> qlo) << (qlo + 1)) | (g & mlo) | ((<Py_ssize_t>1) << qlo)
        i = ((i >> qhi) << (qhi + 1)) | (i & mhi)
        j = i ^ flip
        tmp = amps[i]
        amps[i] = amps[j]
        amps[j] = tmp


def butterfly_stage(cplx[::1] dst, cplx[::1] src, int s, int lim):
    cdef Py_ssize_t size = src.shape[0]
    cdef int n = 0
    while ((<Py_ssize_t>1) << n) < size:
        n += 1
    cdef Py_ssize_t low = ((<Py_ssize_t>1) << s) - 1
    cdef double step = 2.0 * M_PI / (<double>size)
    cdef Py_ssize_t g, j0, j1
    cdef long long e
    cdef int t
    cdef double ang
    cdef cplx w, x0, x1
    for g in range(size >> 1):
        j0 = ((g >> s) << (s + 1)) | (g & low)
        j1 = j0 | ((<Py_ssize_t>1) << s)
        e = 0
        for t in range(s + 1, lim + 1):
            if (j0 >> t) & 1:
                e += (<long long>1) << (n + s - t - 1)
        ang = step * (<double>e)
        w = cos(ang) + 1j * sin(ang)
        x0 = src[j0]
        x1 = src[j1] * w
        dst[j0] = (x0 + x1) * _INV_SQRT2
        dst[j1] = (x0 - x1) * _INV_SQRT2
