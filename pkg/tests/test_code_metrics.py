"""Hamming distance, minimum distance, and code capability arithmetic."""

from __future__ import annotations

from fractions import Fraction

import pytest

from gf2m.code_metrics import (
    CodeBook,
    analyze,
    capabilities,
    hamming_distance,
    min_distance,
)
from gf2m.errors import BoundViolation, Gf2mError, LengthMismatch, TooFewWords


# -- distance -------------------------------------------------------------------

def test_hamming_distance_counts_differing_positions():
    assert hamming_distance("000", "111") == 3
    assert hamming_distance("10011", "11010") == 2
    assert hamming_distance("1010", "1010") == 0


def test_hamming_distance_validation():
    with pytest.raises(LengthMismatch):
        hamming_distance("00", "000")
    with pytest.raises(Gf2mError):
        hamming_distance("0a0", "000")
    with pytest.raises(Gf2mError):
        hamming_distance("", "")


# -- codebooks ------------------------------------------------------------------

def test_codebook_infers_k_for_power_of_two_sizes():
    book = CodeBook.from_words(["000", "111"])
    assert (book.n, book.k) == (3, 1)
    four = CodeBook.from_words(["00000", "01011", "10101", "11110"])
    assert four.k == 2


def test_codebook_leaves_k_unset_otherwise():
    book = CodeBook.from_words(["000", "011", "101"])
    assert book.k is None


def test_codebook_explicit_k_wins():
    book = CodeBook.from_words(["000", "111"], k=1)
    assert book.k == 1


def test_codebook_validation():
    with pytest.raises(Gf2mError):
        CodeBook.from_words([])
    with pytest.raises(LengthMismatch):
        CodeBook.from_words(["00", "111"])
    with pytest.raises(Gf2mError):
        CodeBook.from_words(["0x1"])


def test_min_distance_needs_two_words():
    with pytest.raises(TooFewWords):
        min_distance(CodeBook.from_words(["1010"]))


def test_min_distance_examples():
    assert min_distance(CodeBook.from_words(["000", "111"])) == 3
    parity = CodeBook.from_words(["000", "011", "101", "110"])
    assert min_distance(parity) == 2


# -- capabilities ------------------------------------------------------------------

def test_triple_repetition_code_report():
    report = analyze(CodeBook.from_words(["000", "111"]))
    assert report["n"] == 3
    assert report["k"] == 1
    assert report["d_min"] == 3
    assert report["detect"] == 2
    assert report["correct"] == 1
    assert report["rate"] == Fraction(1, 3)
    assert report["singleton_max"] == 3


def test_even_parity_code_detects_but_cannot_correct():
    report = analyze(CodeBook.from_words(["000", "011", "101", "110"]))
    assert report["d_min"] == 2
    assert report["detect"] == 1
    assert report["correct"] == 0
    assert report["rate"] == Fraction(2, 3)


def test_capabilities_arithmetic():
    caps = capabilities(5, 15, 7)
    assert caps.detect == 4
    assert caps.correct == 2
    assert caps.rate == Fraction(7, 15)
    assert caps.singleton_max == 9


def test_capabilities_validation():
    with pytest.raises(BoundViolation):
        capabilities(4, 3, 1)  # n - k + 1 = 3 < 4
    with pytest.raises(Gf2mError):
        capabilities(0, 3, 1)
    with pytest.raises(Gf2mError):
        capabilities(1, 3, 0)


def test_analyze_without_k_omits_rate():
    report = analyze(CodeBook.from_words(["000", "011", "101"]))
    assert "rate" not in report
    assert report["k"] is None
    assert report["d_min"] == 2
