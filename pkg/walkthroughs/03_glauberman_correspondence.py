"""
Relative Glauberman correspondence
==================================

A p-group P acts on a normal subgroup G of some ambient group with N normal
in G and G/N a p'-group.  The P-invariant irreducibles of G are matched with
the P-invariant irreducibles of C/N, where C/N is the fixed-point subgroup.
"""
from blockscope import compute_character_table, relative_glauberman, theorem_F_extension
from blockscope.cli import bundled_corpus
from blockscope.fileio import load_group, scene_from_file
from blockscope.verify import generate_scenes

scenes = bundled_corpus().parent / "scenes"

# the Frobenius group of order 21: P of order 3 acts fixed-point-freely on C7
scene = scene_from_file(load_group(scenes / "frobenius_21.json"))
result = relative_glauberman(scene)
print("C has order", result.C.order, "mapping", result.mapping())

# A4 acting on V4 relative to N = V4 itself: C is all of V4 and the map is the identity
scene = scene_from_file(load_group(scenes / "a4_on_v4.json"), "relative_over_v4")
result = relative_glauberman(scene)
print("C has order", result.C.order, "mapping", result.mapping())
for pair in result.pairs.values():
    print(f"  X.{pair.source} -> X*.{pair.image}, multiplicity e = {pair.e}")
print("checks", result.checks)

# scenes are generated automatically from any group; here the ones with N < G
G = load_group(bundled_corpus() / "sg_72_41.json").group
relative = [s for s in generate_scenes(G, "sg_72_41") if s.N.order < s.G.order]
for scene in relative[:5]:
    result = relative_glauberman(scene)
    print(scene.name, "|C| =", result.C.order, "pairs", len(result.pairs), "all checks", result.ok)

# canonical p-rational extensions: C3 x S3 over N = C3 x C3, p = 3
gf = load_group(scenes / "c3_x_s3.json")
N = gf.subgroup("N")
ext = theorem_F_extension(gf.group, N, compute_character_table(N).trivial, 3)
print("extension", [str(v) for v in ext.chi.values], "rational extensions in B0:", ext.count_in_principal)
