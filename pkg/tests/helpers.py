"""Group constructors and oracle comparisons shared by the test modules."""
import numpy as np

import oracles
from blockscope.chartab import compute_character_table
from blockscope.fileio import load_group
from blockscope.permgroup import PermGroup, Permutation
from oracles import CORPUS

SCENES = CORPUS.parent / "scenes"


def perm(degree, *cycles):
    return Permutation.from_cycles(degree, [list(c) for c in cycles])


def group(degree, *gens):
    """Each generator is one cycle ``(0, 1, 2)`` or a tuple of cycles ``((0, 1), (2, 3))``."""
    return PermGroup(degree, [perm(degree, *g) if isinstance(g[0], tuple) else perm(degree, g)
                              for g in gens])


def corpus_group(name: str) -> PermGroup:
    return load_group(CORPUS / f"{name}.json").group


def burnside_disagreement(name: str) -> str | None:
    """Compare the engine's table of a corpus group with the floating-point
    Burnside table; return a description of the first difference, or None."""
    _, elements = oracles.load_elements(name)
    cls, rows = oracles.float_character_table(elements)
    T = compute_character_table(corpus_group(name))
    G = T.group
    engine_cls = [sorted(tuple(int(x) for x in G.element_array[i]) for i in T.classes.members(k))
                  for k in range(len(T.classes))]
    if engine_cls != cls:
        return "classes differ"
    engine = [np.array([complex(v) for v in c.values]) for c in T]
    if len(engine) != len(rows):
        return f"{len(engine)} rows, oracle has {len(rows)}"
    unmatched = list(range(len(rows)))
    for i, r in enumerate(engine):
        d = [np.max(np.abs(rows[j] - r)) for j in unmatched]
        j = int(np.argmin(d))
        if d[j] >= 1e-6:
            return f"row {i} has no match"
        unmatched.pop(j)
    return None
