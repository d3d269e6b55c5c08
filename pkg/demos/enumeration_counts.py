"""Count semigroups two independent ways and watch the totals agree."""

import itertools
from collections import Counter

from posvec import decode, enumerate_vectors, multiplicity_is_modulus, vector_decomposition
from posvec.oracle import enumerate_numerical_sets

# Vectors on a small grid, in lexicographic order, with three filters.
print("all vectors, modulus 3, entries <= 2:")
for vector in enumerate_vectors(3, 2):
    print(" ", vector)

semis = list(enumerate_vectors(4, 3, "semigroups"))
print(f"\nsemigroup vectors on the modulus-4 grid up to 3: {len(semis)} of 27")

mult = list(enumerate_vectors(4, 3, "semigroups_with_multiplicity_n"))
print(f"with least member 4 (first entry > 1): {len(mult)}")

# Ground truth by exhaustion: every numerical set is a subset of gaps.
sets = list(enumerate_numerical_sets(9))
semigroups = [s for s in sets if s.is_semigroup()]
print(f"\nnumerical sets with largest gap <= 9: {len(sets)}")
print(f"of which semigroups: {len(semigroups)}")

by_genus = Counter(s.genus for s in semigroups if s.genus <= 5)
print("semigroups by genus (gap subsets):", dict(sorted(by_genus.items())))

# The same counts, recovered through vectors: each semigroup other than
# the full set appears exactly once with modulus = its multiplicity.
recovered = {decode(()).to_numerical_set()}
cap = 5
for m in range(1, cap + 1):
    ranges = [range(2, cap // m + 2)]
    for i in range(2, m + 1):
        k_cap = (cap - (i - 1)) // (m - i + 1)
        ranges.append(range(1, i * k_cap + 1))
    for vector in itertools.product(*ranges):
        if not multiplicity_is_modulus(vector):
            continue
        if sum(vector_decomposition(vector).quotients) > cap:
            continue
        numset = decode(vector).to_numerical_set()
        if numset.is_semigroup():
            recovered.add(numset)
print(
    "semigroups by genus (via vectors):   ",
    dict(sorted(Counter(s.genus for s in recovered).items())),
)
