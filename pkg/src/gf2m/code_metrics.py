"""Block-code measurements: Hamming distance, minimum distance, and the
derived detect/correct/rate figures.

Codewords are binary strings ("010...") of one common length n.  Rates are
exact rationals, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .errors import BoundViolation, Gf2mError, LengthMismatch, TooFewWords

__all__ = ["CodeBook", "CodeCapabilities", "hamming_distance", "min_distance",
           "capabilities", "analyze"]


def _check_word(word: str) -> str:
    if not word or set(word) - {"0", "1"}:
        raise Gf2mError(f"codeword must be a nonempty binary string, got {word!r}")
    return word


def hamming_distance(x: str, y: str) -> int:
    """Number of positions where the two words differ."""
    _check_word(x), _check_word(y)
    if len(x) != len(y):
        raise LengthMismatch(f"word lengths differ: {len(x)} vs {len(y)}")
    return (int(x, 2) ^ int(y, 2)).bit_count()


@dataclass(frozen=True)
class CodeBook:
    """A set of distinct n-bit codewords, optionally an (n, k) system."""

    n: int
    words: frozenset[str]
    k: int | None = None

    @staticmethod
    def from_words(words: Iterable[str], k: int | None = None) -> "CodeBook":
        ws = frozenset(_check_word(w) for w in words)
        if not ws:
            raise Gf2mError("empty codebook")
        lengths = {len(w) for w in ws}
        if len(lengths) != 1:
            raise LengthMismatch(f"mixed word lengths {sorted(lengths)}")
        n = lengths.pop()
        if k is None and len(ws).bit_count() == 1:
            k = len(ws).bit_length() - 1  # |words| = 2^k
        return CodeBook(n, ws, k)


def min_distance(book: CodeBook) -> int:
    """Exhaustive pairwise minimum Hamming distance."""
    if len(book.words) < 2:
        raise TooFewWords("minimum distance needs at least two words")
    return min(hamming_distance(x, y)
               for x, y in combinations(sorted(book.words), 2))


@dataclass(frozen=True)
class CodeCapabilities:
    d_min: int
    detect: int
    correct: int
    rate: Fraction
    singleton_max: int


def capabilities(d_min: int, n: int, k: int) -> CodeCapabilities:
    """detect = d-1, correct = floor((d-1)/2), rate = k/n, bound n-k+1."""
    if d_min < 1:
        raise Gf2mError(f"d_min must be >= 1, got {d_min}")
    if not 1 <= k <= n:
        raise Gf2mError(f"need 1 <= k <= n, got k={k}, n={n}")
    singleton_max = n - k + 1
    if d_min > singleton_max:
        raise BoundViolation(
            f"d_min={d_min} exceeds the n-k+1 = {singleton_max} bound")
    return CodeCapabilities(
        d_min=d_min,
        detect=d_min - 1,
        correct=(d_min - 1) // 2,
        rate=Fraction(k, n),
        singleton_max=singleton_max,
    )


def analyze(book: CodeBook) -> dict:
    """Everything the code words determine, as a flat report dict."""
    d = min_distance(book)
    report: dict = {
        "n": book.n,
        "words": len(book.words),
        "k": book.k,
        "d_min": d,
        "detect": d - 1,
        "correct": (d - 1) // 2,
    }
    if book.k is not None:
        caps = capabilities(d, book.n, book.k)
        report["rate"] = caps.rate
        report["singleton_max"] = caps.singleton_max
    return report
