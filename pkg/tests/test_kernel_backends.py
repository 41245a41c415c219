import random

import pytest

from cbgraph import _kernel_py, kernel
from cbgraph.surface import standard_triangulation

compiled = pytest.importorskip("cbgraph._kernel")


def _random_word(rng, tri, length):
    # Random valid dual path: walk the dual graph without backtracking.
    word = []
    t, s = 0, 0
    for _ in range(length):
        t2, s2 = tri.opposite(t, s)
        word.append(3 * t2 + s2)
        t = t2
        s = (s2 + rng.choice((1, 2))) % 3
    return tuple(word)


def test_backends_agree_on_random_words():
    rng = random.Random(23)
    for genus in (2, 3):
        tri = standard_triangulation(genus)
        mate = tri.mate
        for _ in range(200):
            w = _random_word(rng, tri, rng.randint(0, 60))
            assert compiled.cyclic_reduce(w, mate) == _kernel_py.cyclic_reduce(w, mate)
            assert compiled.min_rotation(w) == _kernel_py.min_rotation(w)
            assert compiled.reverse_word(w, mate) == _kernel_py.reverse_word(w, mate)
            assert compiled.canonical_cyclic(w, mate) == _kernel_py.canonical_cyclic(
                w, mate
            )


def test_backends_agree_on_backtracking_words():
    # Words with injected backtracks exercise the reduction loop.
    rng = random.Random(29)
    tri = standard_triangulation(2)
    mate = tri.mate
    for _ in range(200):
        w = list(_random_word(rng, tri, rng.randint(2, 30)))
        for _ in range(rng.randint(1, 4)):
            i = rng.randrange(len(w) + 1)
            x = rng.choice(w)
            w[i:i] = [x, mate[x]]
        w = tuple(w)
        assert compiled.cyclic_reduce(w, mate) == _kernel_py.cyclic_reduce(w, mate)
        assert compiled.canonical_cyclic(w, mate) == _kernel_py.canonical_cyclic(
            w, mate
        )


def test_selected_backend_exports_kernel_ops():
    assert kernel.BACKEND in ("cython", "python")
    w = (3, 4, 5)
    tri = standard_triangulation(2)
    assert kernel.min_rotation(w) == _kernel_py.min_rotation(w)
    assert kernel.cyclic_reduce(w, tri.mate) == _kernel_py.cyclic_reduce(w, tri.mate)
