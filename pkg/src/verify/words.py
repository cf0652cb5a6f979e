# src/verify/words.py

import itertools
from typing import Iterator, List, Tuple

import numpy as np

from src.surface.word import Letter, SurfaceWord, insert_handle_letter


def _alphabet(n: int) -> List[Letter]:
    return [Letter(f"a{k}", e) for k in range(1, n + 1) for e in (1, -1)]


def enumerate_words(n: int, fix_first: bool = True) -> Iterator[SurfaceWord]:
    """
    Every orientable word on the symbols a1..an.

    With fix_first the word starts with a1, which keeps one representative
    per rotation class ((2n-1)! words instead of (2n)!).
    """
    if n == 0:
        yield SurfaceWord(())
        return
    letters = _alphabet(n)
    if fix_first:
        head, rest = letters[0], letters[1:]
        for perm in itertools.permutations(rest):
            yield SurfaceWord((head,) + perm)
    else:
        for perm in itertools.permutations(letters):
            yield SurfaceWord(perm)


def random_word(rng: np.random.Generator, k: int) -> SurfaceWord:
    """Uniformly shuffled orientable word on k symbols."""
    letters = _alphabet(k)
    order = rng.permutation(len(letters))
    return SurfaceWord(tuple(letters[i] for i in order))


def diagonal_word(n: int) -> SurfaceWord:
    """a1 ... an a1^-1 ... an^-1, the word reaching floor(n/2) handles."""
    return SurfaceWord(tuple(Letter(f"a{k}", 1) for k in range(1, n + 1))
                       + tuple(Letter(f"a{k}", -1) for k in range(1, n + 1)))


def handle_insertion(rng: np.random.Generator, k: int) -> Tuple[SurfaceWord, SurfaceWord]:
    """Random word AB and the word A x B x^-1 obtained by splitting it at two random cuts."""
    base = random_word(rng, k)
    length = len(base)
    i, j = sorted(int(c) for c in rng.integers(0, length + 1, size=2))
    return base, insert_handle_letter(base.letters, i, j, symbol="x")
