# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel for the hot word operations.

Semantics match cbgraph._kernel_py exactly; both are exercised against
each other in the benchmark and the test suite.  Words are cyclic
sequences of small int letters with a mate involution.
"""


def cyclic_reduce(word, mate):
    """Remove backtracks (x followed by mate[x]) cyclically."""
    cdef list w = list(word)
    cdef list m = list(mate)
    cdef list out
    cdef Py_ssize_t i, n
    cdef bint changed = True
    while changed and w:
        changed = False
        out = []
        i = 0
        n = len(w)
        while i < n:
            if i + 1 < n and <int> w[i + 1] == <int> m[<int> w[i]]:
                i += 2
                changed = True
            else:
                out.append(w[i])
                i += 1
        while len(out) >= 2 and <int> out[0] == <int> m[<int> out[len(out) - 1]]:
            out.pop()
            out.pop(0)
            changed = True
        w = out
    return tuple(w)


def min_rotation(word):
    """Lexicographically minimal rotation (Booth's algorithm)."""
    cdef tuple w = tuple(word)
    cdef Py_ssize_t n = len(w)
    if n <= 1:
        return w
    cdef tuple s = w + w
    cdef list f = [-1] * (2 * n)
    cdef Py_ssize_t k = 0, j, i
    cdef int sj
    for j in range(1, 2 * n):
        sj = <int> s[j]
        i = <Py_ssize_t> f[j - k - 1]
        while i != -1 and sj != <int> s[k + i + 1]:
            if sj < <int> s[k + i + 1]:
                k = j - i - 1
            i = <Py_ssize_t> f[i]
        if sj != <int> s[k + i + 1]:
            if sj < <int> s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return s[k : k + n]


def reverse_word(word, mate):
    """The same cyclic path traversed backwards."""
    return tuple(mate[x] for x in reversed(word))


def canonical_cyclic(word, mate):
    """Minimal rotation over both traversal directions, after reduction."""
    w = cyclic_reduce(word, mate)
    if not w:
        return w
    a = min_rotation(w)
    b = min_rotation(reverse_word(w, mate))
    return a if a <= b else b
