"""
p-blocks and p-rational characters
==================================

Split the irreducibles into p-blocks, then compare the principal block with
the local structure of a Sylow normalizer.
"""
from blockscope import (block_distribution, compute_character_table, has_normal_p_complement, normalizer,
                        sylow_subgroup, verify_theorem_D)
from blockscope.blocks import nontrivial_rational_p_prime_principal
from blockscope.cli import bundled_corpus
from blockscope.fileio import load_group


def corpus(name):
    return load_group(bundled_corpus() / f"{name}.json").group


# A4 at p = 3: the three linear characters share a block, the degree-3 character has defect zero
A4 = corpus("sg_12_3")
T = compute_character_table(A4)
part = block_distribution(T, 3)
for b, members in enumerate(part.blocks):
    print(f"B{b}: degrees {[T[i].degree for i in members]}, defect {part.block_data(b).defect}")

# the principal block of A4 holds no nontrivial 3-rational character of degree prime to 3 ...
print("witnesses in A4:", nontrivial_rational_p_prime_principal(T, 3))
# ... and the Sylow 3-normalizer is the Sylow subgroup itself, so it has a normal 3-complement
NP = normalizer(A4, sylow_subgroup(A4, 3))
print("|N(P)| =", NP.order, "normal 3-complement:", has_normal_p_complement(NP, 3))

# A6 at p = 3 sits on the other side of the dichotomy
A6 = corpus("A6")
NP = normalizer(A6, sylow_subgroup(A6, 3))
print("A6: |N(P)| =", NP.order, "normal 3-complement:", has_normal_p_complement(NP, 3))
report = verify_theorem_D(A6, 3, "A6")
print(report.verdict, report.details)
print("first witness:", report.witnesses["character"]["degree"], report.witnesses["character"]["values"])
