# Homomorphisms between digraphs of partial transformations, and how to build them.
from semiconj import (
    BasicKind,
    PartialMap,
    PartialTransformation,
    WitnessConstraint,
    build_cho_hom,
    build_cycle_hom,
    make_basic,
    search_rp_hom,
    verify_intertwining,
    verify_rp_hom,
)

n = 10
four = make_basic(BasicKind.CYCLE, [0, 1, 2, 3], n)
two = make_basic(BasicKind.CYCLE, [4, 5], n)
three = make_basic(BasicKind.CYCLE, [6, 7, 8], n)

# %% a 4-cycle wraps twice around a 2-cycle; it cannot land on a 3-cycle
phi = build_cycle_hom(four, two)
print(phi.entries, verify_rp_hom(phi, four, two))
print("4 -> 3:", build_cycle_hom(four, three))

# %% the same map seen as an intertwining: alpha phi = phi beta on span(alpha)
print("intertwines:", verify_intertwining(phi, four, two))

# %% trees: the root goes to the root, a taller tree cannot fold into a shorter one
short = make_basic(BasicKind.CHAIN, [0, 1], n)
tall = PartialTransformation.from_mapping({2: 3, 3: 4, 5: 4}, n)
print("short -> tall:", build_cho_hom(short, tall).entries)
print("tall -> short:", build_cho_hom(tall, short))

# %% generic backtracking search, with constraints on the witness
for c in WitnessConstraint:
    found = search_rp_hom(four, two, c)
    print(f"{c.value:16s}", None if found is None else found.entries)

# %% a hand-written map that misses the terminal vertex of the target
bad = PartialMap(n, n, {0: 2, 1: 3})
print("bad map ok?", verify_rp_hom(bad, short, tall))
