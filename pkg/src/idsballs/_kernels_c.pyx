# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled enumeration kernels; twin of ``_kernels_py``.

Same API, same output, different algorithms where it pays off: insertion
and substitution neighborhoods are generated duplicate-free from their
canonical (greedy-embedding / difference-set) forms, and the combined
enumeration dedups through a bitset over the packed output space instead
of a set of tuples.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from libc.string cimport memset

BACKEND = "c"

cdef enum:
    MAXLEN = 64


cdef int _POPCOUNT[256]


cdef void _init_popcount() noexcept:
    cdef int i, c, v
    for i in range(256):
        v = i
        c = 0
        while v:
            c += v & 1
            v >>= 1
        _POPCOUNT[i] = c


_init_popcount()


cdef inline tuple _word_tuple(const int* w, Py_ssize_t m):
    cdef tuple out = PyTuple_New(m)
    cdef Py_ssize_t i
    cdef object v
    for i in range(m):
        v = w[i]
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


cdef Py_ssize_t _load(tuple x, int* buf, Py_ssize_t extra) except -1:
    # extra = output growth; the whole working length must fit the stack arrays
    cdef Py_ssize_t i, n = len(x)
    if n + extra > MAXLEN:
        raise ValueError("word length exceeds kernel limit (64)")
    for i in range(n):
        buf[i] = x[i]
    return n


cdef inline void _first_comb(Py_ssize_t* c, Py_ssize_t k) noexcept:
    cdef Py_ssize_t i
    for i in range(k):
        c[i] = i


cdef inline bint _next_comb(Py_ssize_t* c, Py_ssize_t k, Py_ssize_t n) noexcept:
    cdef Py_ssize_t i = k - 1, j
    while i >= 0 and c[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    c[i] += 1
    for j in range(i + 1, k):
        c[j] = c[j - 1] + 1
    return True


cdef inline int _choice_sym(int forbidden, Py_ssize_t idx) noexcept:
    # ascending enumeration of the alphabet minus one forbidden symbol
    if forbidden >= 0 and idx >= <Py_ssize_t>forbidden:
        return <int>(idx + 1)
    return <int>idx


cdef int _emit_insertions(const int* v, Py_ssize_t nv, Py_ssize_t t, int q,
                          list out, unsigned char* bits) except -1:
    # Every length-(nv+t) supersequence of v exactly once: choose greedy
    # embedding positions for v, fill each gap slot with any symbol other
    # than the next matched one, fill tail slots freely.
    cdef Py_ssize_t emb[MAXLEN + 1]
    cdef Py_ssize_t freepos[MAXLEN + 1]
    cdef Py_ssize_t digit[MAXLEN + 1]
    cdef int forb[MAXLEN + 1]
    cdef int nch[MAXLEN + 1]
    cdef int w[MAXLEN + 1]
    cdef Py_ssize_t m = nv + t
    cdef Py_ssize_t l, e, j, i, fcount, prev
    cdef bint feasible
    cdef unsigned long long idx

    _first_comb(emb, nv)
    while True:
        feasible = True
        fcount = 0
        prev = -1
        for l in range(nv):
            if q == 1 and emb[l] != prev + 1:
                feasible = False  # a gap slot has no symbol to differ with
                break
            for e in range(prev + 1, emb[l]):
                freepos[fcount] = e
                forb[fcount] = v[l]
                nch[fcount] = q - 1
                fcount += 1
            w[emb[l]] = v[l]
            prev = emb[l]
        if feasible:
            for e in range(prev + 1, m):
                freepos[fcount] = e
                forb[fcount] = -1
                nch[fcount] = q
                fcount += 1
            for j in range(fcount):
                digit[j] = 0
                w[freepos[j]] = _choice_sym(forb[j], 0)
            while True:
                if bits != NULL:
                    idx = 0
                    for i in range(m):
                        idx = idx * <unsigned long long>q + <unsigned long long>w[i]
                    bits[idx >> 3] |= <unsigned char>(1 << (idx & 7))
                else:
                    out.append(_word_tuple(w, m))
                j = fcount - 1
                while j >= 0:
                    digit[j] += 1
                    if digit[j] < nch[j]:
                        w[freepos[j]] = _choice_sym(forb[j], digit[j])
                        break
                    digit[j] = 0
                    w[freepos[j]] = _choice_sym(forb[j], 0)
                    j -= 1
                if j < 0:
                    break
        if not _next_comb(emb, nv, m):
            break
    return 0


cdef int _for_each_substitution(const int* u, Py_ssize_t nu, Py_ssize_t p, int q,
                                Py_ssize_t t, list out, unsigned char* bits,
                                bint expand) except -1:
    # Every word within Hamming distance p of u exactly once (difference
    # positions + nonzero offsets); each is either emitted directly or
    # expanded by t insertions.
    cdef int v[MAXLEN + 1]
    cdef Py_ssize_t subpos[MAXLEN + 1]
    cdef Py_ssize_t off[MAXLEN + 1]
    cdef Py_ssize_t d, j
    cdef Py_ssize_t pmax = p if p < nu else nu

    for j in range(nu):
        v[j] = u[j]
    if expand:
        _emit_insertions(v, nu, t, q, out, bits)
    else:
        out.append(_word_tuple(v, nu))
    if q < 2:
        return 0
    for d in range(1, pmax + 1):
        _first_comb(subpos, d)
        while True:
            for j in range(d):
                off[j] = 1
                v[subpos[j]] = <int>((u[subpos[j]] + 1) % q)
            while True:
                if expand:
                    _emit_insertions(v, nu, t, q, out, bits)
                else:
                    out.append(_word_tuple(v, nu))
                j = d - 1
                while j >= 0:
                    off[j] += 1
                    if off[j] <= <Py_ssize_t>(q - 1):
                        v[subpos[j]] = <int>((u[subpos[j]] + off[j]) % q)
                        break
                    off[j] = 1
                    v[subpos[j]] = <int>((u[subpos[j]] + 1) % q)
                    j -= 1
                if j < 0:
                    break
            for j in range(d):
                v[subpos[j]] = u[subpos[j]]
            if not _next_comb(subpos, d, nu):
                break
    return 0


cdef int _fill_combined(const int* x, Py_ssize_t n, Py_ssize_t t, Py_ssize_t s,
                        Py_ssize_t p, int q, unsigned char* bits) except -1:
    cdef Py_ssize_t keep[MAXLEN + 1]
    cdef int u[MAXLEN + 1]
    cdef Py_ssize_t k = n - s
    cdef Py_ssize_t j
    _first_comb(keep, k)
    while True:
        for j in range(k):
            u[j] = x[keep[j]]
        _for_each_substitution(u, k, p, q, t, None, bits, True)
        if not _next_comb(keep, k, n):
            break
    return 0


def insertion_ball(tuple x, Py_ssize_t t, int q):
    cdef int buf[MAXLEN + 1]
    cdef Py_ssize_t n = _load(x, buf, t)
    cdef list out = []
    _emit_insertions(buf, n, t, q, out, NULL)
    out.sort()
    return out


def deletion_ball(tuple x, Py_ssize_t s):
    cdef int buf[MAXLEN + 1]
    cdef int u[MAXLEN + 1]
    cdef Py_ssize_t keep[MAXLEN + 1]
    cdef Py_ssize_t n = _load(x, buf, 0)
    cdef Py_ssize_t k = n - s
    cdef Py_ssize_t j
    cdef set seen = set()
    _first_comb(keep, k)
    while True:
        for j in range(k):
            u[j] = buf[keep[j]]
        seen.add(_word_tuple(u, k))
        if not _next_comb(keep, k, n):
            break
    return sorted(seen)


def substitution_ball(tuple x, Py_ssize_t p, int q):
    cdef int buf[MAXLEN + 1]
    cdef Py_ssize_t n = _load(x, buf, 0)
    cdef list out = []
    _for_each_substitution(buf, n, p, q, 0, out, NULL, False)
    out.sort()
    return out


def ball(tuple x, Py_ssize_t t, Py_ssize_t s, Py_ssize_t p, int q, object space_obj):
    cdef int buf[MAXLEN + 1]
    cdef int w[MAXLEN + 1]
    cdef Py_ssize_t n = _load(x, buf, t)
    cdef Py_ssize_t m = n + t - s
    cdef unsigned long long space = space_obj
    cdef Py_ssize_t nbytes = <Py_ssize_t>((space + 7) >> 3)
    cdef unsigned char* bits = <unsigned char*>PyMem_Malloc(nbytes if nbytes > 0 else 1)
    cdef list out = []
    cdef unsigned long long idx, rem
    cdef Py_ssize_t i
    if bits == NULL:
        raise MemoryError()
    try:
        memset(bits, 0, nbytes if nbytes > 0 else 1)
        _fill_combined(buf, n, t, s, p, q, bits)
        for idx in range(space):
            if bits[idx >> 3] & (1 << (idx & 7)):
                rem = idx
                for i in range(m - 1, -1, -1):
                    w[i] = <int>(rem % <unsigned long long>q)
                    rem //= <unsigned long long>q
                out.append(_word_tuple(w, m))
    finally:
        PyMem_Free(bits)
    return out


def ball_size(tuple x, Py_ssize_t t, Py_ssize_t s, Py_ssize_t p, int q, object space_obj):
    cdef int buf[MAXLEN + 1]
    cdef Py_ssize_t n = _load(x, buf, t)
    cdef unsigned long long space = space_obj
    cdef Py_ssize_t nbytes = <Py_ssize_t>((space + 7) >> 3)
    cdef unsigned char* bits = <unsigned char*>PyMem_Malloc(nbytes if nbytes > 0 else 1)
    cdef Py_ssize_t count = 0
    cdef Py_ssize_t b
    if bits == NULL:
        raise MemoryError()
    try:
        memset(bits, 0, nbytes if nbytes > 0 else 1)
        _fill_combined(buf, n, t, s, p, q, bits)
        for b in range(nbytes):
            count += _POPCOUNT[bits[b]]
    finally:
        PyMem_Free(bits)
    return count


def is_member(tuple z, tuple x, Py_ssize_t s, Py_ssize_t p):
    cdef int zb[MAXLEN + 1]
    cdef int xb[MAXLEN + 1]
    cdef int xs[MAXLEN + 1]
    cdef Py_ssize_t s1[MAXLEN + 1]
    cdef Py_ssize_t s2[MAXLEN + 1]
    cdef Py_ssize_t m = _load(z, zb, 0)
    cdef Py_ssize_t n = _load(x, xb, 0)
    cdef Py_ssize_t k = n - s
    cdef Py_ssize_t j, d
    if k == 0:
        return True
    _first_comb(s1, k)
    while True:
        for j in range(k):
            xs[j] = xb[s1[j]]
        _first_comb(s2, k)
        while True:
            d = 0
            for j in range(k):
                if xs[j] != zb[s2[j]]:
                    d += 1
                    if d > p:
                        break
            if d <= p:
                return True
            if not _next_comb(s2, k, m):
                break
        if not _next_comb(s1, k, n):
            break
    return False


cdef unsigned long long _c_binom(Py_ssize_t n_, Py_ssize_t k_) noexcept:
    cdef unsigned long long num = 1
    cdef Py_ssize_t i
    if k_ < 0 or k_ > n_:
        return 0
    if k_ > n_ - k_:
        k_ = n_ - k_
    for i in range(k_):
        num = num * <unsigned long long>(n_ - i) // <unsigned long long>(i + 1)
    return num


def definitional_ball(tuple x, Py_ssize_t t, Py_ssize_t s, Py_ssize_t p, int q):
    # Filter the whole output space through the subset-pair membership
    # test, with the subset tables hoisted out of the word loop.
    cdef int xb[MAXLEN + 1]
    cdef int z[MAXLEN + 1]
    cdef Py_ssize_t comb[MAXLEN + 1]
    cdef Py_ssize_t n = _load(x, xb, t)
    cdef Py_ssize_t m = n + t - s
    cdef Py_ssize_t k = n - s
    cdef Py_ssize_t cnk = <Py_ssize_t>_c_binom(n, k)
    cdef Py_ssize_t cmk = <Py_ssize_t>_c_binom(m, k)
    cdef int* xrows = <int*>PyMem_Malloc(<size_t>(cnk * k + 1) * sizeof(int))
    cdef Py_ssize_t* zrows = <Py_ssize_t*>PyMem_Malloc(<size_t>(cmk * k + 1) * sizeof(Py_ssize_t))
    cdef list out = []
    cdef Py_ssize_t i, j, r1, r2, d
    cdef bint member
    if xrows == NULL or zrows == NULL:
        PyMem_Free(xrows)
        PyMem_Free(zrows)
        raise MemoryError()
    try:
        _first_comb(comb, k)
        r1 = 0
        while True:
            for j in range(k):
                xrows[r1 * k + j] = xb[comb[j]]
            r1 += 1
            if not _next_comb(comb, k, n):
                break
        _first_comb(comb, k)
        r2 = 0
        while True:
            for j in range(k):
                zrows[r2 * k + j] = comb[j]
            r2 += 1
            if not _next_comb(comb, k, m):
                break
        for i in range(m):
            z[i] = 0
        while True:
            member = False
            for r1 in range(cnk):
                for r2 in range(cmk):
                    d = 0
                    for j in range(k):
                        if xrows[r1 * k + j] != z[zrows[r2 * k + j]]:
                            d += 1
                            if d > p:
                                break
                    if d <= p:
                        member = True
                        break
                if member:
                    break
            if member:
                out.append(_word_tuple(z, m))
            i = m - 1
            while i >= 0:
                z[i] += 1
                if z[i] < q:
                    break
                z[i] = 0
                i -= 1
            if i < 0:
                break
    finally:
        PyMem_Free(xrows)
        PyMem_Free(zrows)
    return out
