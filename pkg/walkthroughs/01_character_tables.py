"""
Exact character tables
======================

Build permutation groups, compute their character tables exactly and look
at the cyclotomic values and the Galois action on the irreducibles.
"""
from blockscope import E, compute_character_table, galois_apply, GaloisAut
from blockscope.cli import bundled_corpus
from blockscope.fileio import load_group
from blockscope.permgroup import PermGroup, Permutation

# S3 acting on {0, 1, 2}: a 3-cycle and a transposition
S3 = PermGroup(3, [Permutation([1, 2, 0]), Permutation([1, 0, 2])])
T = compute_character_table(S3)
print(S3.order, "elements,", T.nr_classes, "classes, class sizes", [int(s) for s in T.sizes])
for chi in T:
    print(f"X.{chi.index}", [str(v) for v in chi.values])

# the table has been checked exactly: orthogonality and sum of squared degrees
T.validate()
print("sum of squared degrees", sum(d * d for d in T.degrees))

# larger groups ship with the package, stored as generators
A6 = load_group(bundled_corpus() / "A6.json").group
TA6 = compute_character_table(A6)
print("A6 degrees", TA6.degrees)

# values are exact cyclotomic numbers; A6 has (1 + sqrt 5)/2 on its 5-elements
golden = -(E(5) ** 2 + E(5) ** 3)
print("golden ratio as a cyclotomic:", golden, "~", complex(golden).real)
print("its Galois conjugate under zeta_5 -> zeta_5^2:", galois_apply(GaloisAut(5, 2), golden))

# Galois automorphisms permute the irreducibles; zeta -> zeta^7 moves sqrt 5 to -sqrt 5
# and so swaps the two characters of degree 8
e = TA6.exponent
print("exponent", e, "permutation under zeta -> zeta^7:", TA6.galois_permutation(7))
