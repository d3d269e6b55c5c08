"""Walk through the position-vector codec in both directions."""

from posvec import NumericalSet, apery_positions, decode, encode, position_vector

# A numerical semigroup is the set of all sums of its generators.
S = NumericalSet.from_generators([6, 16, 20, 21, 29])
print("semigroup:", S)  # sporadic members, then the conductor arrow

# Its Apéry set with respect to a member n collects, for each residue
# class mod n, the smallest member in that class.
apery = S.apery_set(6)
print("Apéry set mod 6:", apery)

# Where do those six elements sit when we list the members of S in
# increasing order?  Differences of those indices are the position vector.
vector = encode(apery)
print("position vector:", vector)
print("positions in the enumeration:", apery_positions(vector))

# The vector alone recovers the Apéry set, and with it the whole set.
recovered = decode(vector)
print("decoded Apéry set:", recovered)
print("round trip intact:", recovered.to_numerical_set() == S)

# Any tuple of positive integers decodes to something: the codec is a
# bijection with numerical sets closed under addition by len+1.
for vector in [(1, 1, 1), (2, 2, 4), (7, 3), (40, 1, 2, 900)]:
    apery = decode(vector)
    print(f"{vector} -> {apery} -> back to {encode(apery)}")

# Two semigroups whose generators occupy identical positions still get
# different vectors; the encoding never collides.
print(position_vector(NumericalSet.from_generators([4, 7, 9]), 4))
print(position_vector(NumericalSet.from_generators([4, 6, 9]), 4))
