"""
Hamming distance and what a block code can catch
================================================

The minimum distance d of a code decides everything: it detects up to
d - 1 bit errors and corrects up to (d - 1) // 2.  This script measures
two tiny codes and checks them against the Singleton bound.
"""

from gf2m import CodeBook, capabilities, hamming_distance, min_distance
from gf2m.code_metrics import analyze

# -- pairwise distances --------------------------------------------------------

print("d(10011, 11001) =", hamming_distance("10011", "11001"))
print("d(0000, 1111)   =", hamming_distance("0000", "1111"))
print()

# -- the triple repetition code: one message bit, three channel bits ------------

rep = CodeBook.from_words(["000", "111"])
print(f"repetition code: n = {rep.n}, k = {rep.k}, "
      f"d_min = {min_distance(rep)}")
report = analyze(rep)
print(f"  rate {report['rate']}, detects {report['detect']}, "
      f"corrects {report['correct']}")
print()

# -- a single parity bit: detects but cannot correct -----------------------------

parity = CodeBook.from_words(["000", "011", "101", "110"])
report = analyze(parity)
print(f"even-parity code: n = {report['n']}, k = {report['k']}, "
      f"d_min = {report['d_min']}")
print(f"  rate {report['rate']}, detects {report['detect']}, "
      f"corrects {report['correct']}")
print()

# -- capabilities straight from (d, n, k), and the Singleton ceiling ---------------

caps = capabilities(3, 7, 4)
print(f"(7,4) code with d = 3: detect {caps.detect}, correct {caps.correct}, "
      f"rate {caps.rate}, Singleton max d = {caps.singleton_max}")

caps = capabilities(5, 7, 3)
print(f"(7,3) code with d = 5: detect {caps.detect}, correct {caps.correct}, "
      f"rate {caps.rate}, Singleton max d = {caps.singleton_max}")
