"""
A group of order 216 and the sigma test at p = 2
================================================

SmallGroup(216, 158) has a normal subgroup N of index prime to 3 and a
3-rational character of N whose induced character has no 3-rational
constituent.  The second half compares, at p = 2, a Galois automorphism
fixing 2-power roots of unity up to sign with the Sylow 2-normalizer.
"""
from blockscope import reproduce_counterexample_216_158, verify_conjecture_6_2
from blockscope.cli import bundled_corpus
from blockscope.fileio import load_group


def corpus(name):
    return load_group(bundled_corpus() / f"{name}.json").group


report = reproduce_counterexample_216_158(corpus("sg_216_158"), 3, "sg_216_158")
print(report.verdict)
print("|N| =", report.witnesses["N"]["order"], "theta degree", report.witnesses["theta"]["degree"])
print("theta values", report.witnesses["theta"]["values"])
print("constituents of the induced character:", report.witnesses["constituents"])

for name in ("sg_24_12", "S5", "S6"):
    report = verify_conjecture_6_2(corpus(name), name)
    print(name, report.verdict, report.details)
