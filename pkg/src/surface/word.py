# src/surface/word.py

import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from src.config import FRESH_SYMBOL_PREFIX
from src.errors import NonOrientableWordError, WordParseError

_USER_TOKEN = re.compile(r"^([A-Za-z0-9]+)(?:\^(-?1|\+1))?$")
_ANY_TOKEN = re.compile(r"^([A-Za-z0-9_]+)(?:\^(-?1|\+1))?$")


@dataclass(frozen=True, order=True)
class Letter:
    """One side of the polygon: a symbol with exponent +1 or -1."""
    symbol: str
    exponent: int = 1

    def __post_init__(self):
        if self.exponent not in (1, -1):
            raise WordParseError(f"exponent must be +1 or -1, got {self.exponent}")

    def inverse(self) -> "Letter":
        return Letter(self.symbol, -self.exponent)

    def __str__(self) -> str:
        if self.exponent == 1:
            return self.symbol
        return f"{self.symbol}^-1"


def parse_letters(text: str, allow_reserved: bool = False) -> Tuple[Letter, ...]:
    """Tokenize a whitespace-separated letter sequence without checking pairing."""
    pattern = _ANY_TOKEN if allow_reserved else _USER_TOKEN
    letters = []
    for token in text.split():
        match = pattern.match(token)
        if not match:
            raise WordParseError(f"malformed token: {token!r}")
        exponent = -1 if match.group(2) == "-1" else 1
        letters.append(Letter(match.group(1), exponent))
    return tuple(letters)


def _check_pairing(letters: Sequence[Letter]):
    counts = Counter(letter.symbol for letter in letters)
    bad = sorted(symbol for symbol, count in counts.items() if count != 2)
    if bad:
        raise WordParseError(
            f"every symbol must occur exactly twice; offending: {', '.join(bad)}"
        )
    exponents: Dict[str, int] = {}
    for letter in letters:
        if exponents.get(letter.symbol) == letter.exponent:
            raise NonOrientableWordError(
                f"symbol {letter.symbol!r} occurs twice with the same exponent"
            )
        exponents[letter.symbol] = letter.exponent


@dataclass(frozen=True)
class SurfaceWord:
    """Cyclic word describing an orientable polygon gluing."""
    letters: Tuple[Letter, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        _check_pairing(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, index: int) -> Letter:
        return self.letters[index]

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)

    @property
    def symbol_count(self) -> int:
        return len(self.letters) // 2

    def symbols(self) -> List[str]:
        """Symbols in order of first appearance."""
        seen: List[str] = []
        for letter in self.letters:
            if letter.symbol not in seen:
                seen.append(letter.symbol)
        return seen

    def partners(self) -> Tuple[int, ...]:
        """partners()[i] is the position of the other occurrence of letters[i]."""
        first: Dict[str, int] = {}
        result = [0] * len(self.letters)
        for i, letter in enumerate(self.letters):
            if letter.symbol in first:
                j = first[letter.symbol]
                result[i], result[j] = j, i
            else:
                first[letter.symbol] = i
        return tuple(result)

    def rotate(self, k: int) -> "SurfaceWord":
        if not self.letters:
            return self
        k %= len(self.letters)
        return SurfaceWord(self.letters[k:] + self.letters[:k])

    def rotations(self) -> Iterator["SurfaceWord"]:
        for k in range(max(len(self.letters), 1)):
            yield self.rotate(k)

    def canonical(self) -> "SurfaceWord":
        """Lexicographically least rotation."""
        if not self.letters:
            return self
        return min(self.rotations(), key=lambda w: w.letters)

    def mirror(self) -> "SurfaceWord":
        """Reverse the word and invert every letter (same surface, opposite orientation)."""
        return SurfaceWord(tuple(letter.inverse() for letter in reversed(self.letters)))


def parse_word(text: str) -> SurfaceWord:
    return SurfaceWord(parse_letters(text))


def fresh_symbol(letters: Iterable[Letter]) -> str:
    """Next reserved symbol not used in the given letters."""
    used = 0
    for letter in letters:
        if letter.symbol.startswith(FRESH_SYMBOL_PREFIX):
            suffix = letter.symbol[len(FRESH_SYMBOL_PREFIX):]
            if suffix.isdigit():
                used = max(used, int(suffix))
    return f"{FRESH_SYMBOL_PREFIX}{used + 1}"


def sphere_word(symbol: str = "a0") -> SurfaceWord:
    return SurfaceWord((Letter(symbol, 1), Letter(symbol, -1)))


def standard_word(genus: int) -> SurfaceWord:
    """O_p: a0 a0^-1 for the sphere, otherwise a product of commutators a_i b_i a_i^-1 b_i^-1."""
    if genus < 0:
        raise ValueError("genus must be non-negative")
    if genus == 0:
        return sphere_word()
    letters: List[Letter] = []
    for i in range(1, genus + 1):
        a, b = f"a{i}", f"b{i}"
        letters += [Letter(a, 1), Letter(b, 1), Letter(a, -1), Letter(b, -1)]
    return SurfaceWord(tuple(letters))


def _relabel_onto(word: Sequence[Letter], pattern: Sequence[Letter]) -> bool:
    mapping: Dict[str, Tuple[str, int]] = {}
    used = set()
    for letter, target in zip(word, pattern):
        flip = letter.exponent * target.exponent
        known = mapping.get(letter.symbol)
        if known is None:
            if target.symbol in used:
                return False
            mapping[letter.symbol] = (target.symbol, flip)
            used.add(target.symbol)
        elif known != (target.symbol, flip):
            return False
    return True


def matches_pattern(word: SurfaceWord, pattern: SurfaceWord, allow_mirror: bool = True) -> bool:
    """True when word equals pattern up to rotation, renaming and per-symbol inversion."""
    if len(word) != len(pattern):
        return False
    candidates = [word, word.mirror()] if allow_mirror else [word]
    for candidate in candidates:
        for rotated in candidate.rotations():
            if _relabel_onto(rotated.letters, pattern.letters):
                return True
    return False


def insert_handle_letter(
    letters: Sequence[Letter], i: int, j: int, symbol: Optional[str] = None
) -> SurfaceWord:
    """Insert x before position i and x^-1 before position j (i <= j) of the linear word."""
    if not 0 <= i <= j <= len(letters):
        raise ValueError(f"insertion points out of range: {i}, {j}")
    name = symbol or fresh_symbol(letters)
    body = list(letters)
    body.insert(j, Letter(name, -1))
    body.insert(i, Letter(name, 1))
    return SurfaceWord(tuple(body))
