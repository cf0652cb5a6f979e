# src/surface/transforms.py
"""
Genus-preserving rewrites of surface words.

Every single-step helper returns a TransformStep (or None when it does not
apply) so that reductions can be replayed; the transformN functions run the
corresponding step to a fixpoint.
"""

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

from src.errors import TransformError, WordError
from src.surface.word import Letter, SurfaceWord, fresh_symbol, parse_letters


@dataclass(frozen=True)
class TransformStep:
    kind: int                       # 1..4
    positions: Tuple[int, ...]      # positions in the word the step was applied to
    result: SurfaceWord


class InterlacedPair(NamedTuple):
    first: str
    second: str
    i: int      # first occurrence of `first`
    k: int      # first occurrence of `second`, i < k < j
    j: int      # second occurrence of `first`
    l: int      # second occurrence of `second`, l > j


def cancel_step(word: SurfaceWord) -> Optional[TransformStep]:
    """Delete the leftmost cyclically adjacent pair x x^-1. Never shrinks below two letters."""
    n = len(word)
    if n <= 2:
        return None
    for i in range(n):
        j = (i + 1) % n
        if word[j] == word[i].inverse():
            kept = tuple(letter for k, letter in enumerate(word) if k not in (i, j))
            return TransformStep(1, (i, j), SurfaceWord(kept))
    return None


def fold_step(word: SurfaceWord) -> Optional[TransformStep]:
    """Replace the leftmost blocks p q ... q^-1 p^-1 by c ... c^-1 with a fresh c."""
    n = len(word)
    if n < 4:
        return None
    partners = word.partners()
    for i in range(n):
        i2 = (i + 1) % n
        if word[i].symbol == word[i2].symbol:
            continue
        jq = partners[i2]
        jp = partners[i]
        if jp != (jq + 1) % n:
            continue
        if len({i, i2, jq, jp}) < 4:
            continue
        symbol = fresh_symbol(word)
        letters: List[Letter] = []
        for k, letter in enumerate(word):
            if k == i:
                letters.append(Letter(symbol, 1))
            elif k == jq:
                letters.append(Letter(symbol, -1))
            elif k in (i2, jp):
                continue
            else:
                letters.append(letter)
        return TransformStep(2, (i, i2, jq, jp), SurfaceWord(tuple(letters)))
    return None


def transform1(word: SurfaceWord) -> SurfaceWord:
    step = cancel_step(word)
    while step is not None:
        word = step.result
        step = cancel_step(word)
    return word


def transform2(word: SurfaceWord) -> SurfaceWord:
    step = fold_step(word)
    while step is not None:
        word = step.result
        step = fold_step(word)
    return word


def simplify_steps(word: SurfaceWord) -> List[TransformStep]:
    """Cancellations and folds, cancellations first, until neither applies."""
    steps: List[TransformStep] = []
    while True:
        step = cancel_step(word) or fold_step(word)
        if step is None:
            return steps
        steps.append(step)
        word = step.result


def _as_letters(part) -> Tuple[Letter, ...]:
    if isinstance(part, str):
        return parse_letters(part, allow_reserved=True)
    if isinstance(part, SurfaceWord):
        return part.letters
    return tuple(part)


def _glue_positions(
    left_letters: Tuple[Letter, ...], right_letters: Tuple[Letter, ...], symbol: str
) -> Optional[Tuple[int, int]]:
    left_hits = [i for i, l in enumerate(left_letters) if l.symbol == symbol]
    right_hits = [i for i, r in enumerate(right_letters) if r.symbol == symbol]
    if len(left_hits) != 1 or len(right_hits) != 1:
        return None
    li, ri = left_hits[0], right_hits[0]
    if left_letters[li].exponent == right_letters[ri].exponent:
        return None
    return li, ri


def transform3(left, right, symbol: Optional[str] = None) -> SurfaceWord:
    """
    Merge two bounded words along a glue symbol.

    The glue symbol occurs once in each word with opposite exponents; the
    result is A B where left = A a and right = a^-1 B up to rotation. Other
    symbols the two words share are carried into the merged word. Without an
    explicit symbol the first eligible one in left is used. A merge that
    leaves nothing is normalized to the sphere word.
    """
    left_letters = _as_letters(left)
    right_letters = _as_letters(right)
    if symbol is not None:
        glue = _glue_positions(left_letters, right_letters, symbol)
        if glue is None:
            raise TransformError(
                f"{symbol!r} must occur once in each word with opposite exponents"
            )
    else:
        glue = None
        for letter in left_letters:
            glue = _glue_positions(left_letters, right_letters, letter.symbol)
            if glue is not None:
                break
        if glue is None:
            raise TransformError("bounded words have no symbol to glue along")
    li, ri = glue

    a_part = left_letters[li + 1:] + left_letters[:li]
    b_part = right_letters[ri + 1:] + right_letters[:ri]
    merged = a_part + b_part
    if not merged:
        name = fresh_symbol(left_letters + right_letters)
        return SurfaceWord((Letter(name, 1), Letter(name, -1)))
    try:
        return SurfaceWord(merged)
    except WordError as e:
        raise TransformError(f"merged word is not a valid surface word: {e}") from e


def first_interlaced(
    word: SurfaceWord, scan_limit: Optional[int] = None
) -> Optional[InterlacedPair]:
    """Leftmost pair a..b..a..b, all four occurrences inside word[:scan_limit]."""
    limit = len(word) if scan_limit is None else min(scan_limit, len(word))
    partners = word.partners()
    for i in range(limit):
        j = partners[i]
        if j < i or j >= limit:
            continue
        for k in range(i + 1, j):
            l = partners[k]
            if j < l < limit:
                return InterlacedPair(word[i].symbol, word[k].symbol, i, k, j, l)
    return None


def _split(word: Sequence[Letter], pair: InterlacedPair):
    i, k, j, l = pair.i, pair.k, pair.j, pair.l
    return word[:i], word[i + 1:k], word[k + 1:j], word[j + 1:l], word[l + 1:]


def transform4(word: SurfaceWord, pair: Optional[InterlacedPair] = None) -> SurfaceWord:
    """A a B b C a^-1 D b^-1 E  ->  A D C B E a b a^-1 b^-1."""
    return transform4_step(word, pair).result


def transform4_step(word: SurfaceWord, pair: Optional[InterlacedPair] = None) -> TransformStep:
    if pair is None:
        pair = first_interlaced(word)
    if pair is None:
        raise TransformError("word has no interlaced pair")
    letters = word.letters
    a, b, c, d, e = _split(letters, pair)
    handle = (letters[pair.i], letters[pair.k], letters[pair.j], letters[pair.l])
    result = SurfaceWord(a + d + c + b + e + handle)
    return TransformStep(4, (pair.i, pair.k, pair.j, pair.l), result)
