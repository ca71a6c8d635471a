# Partial transformations as functional digraphs: components, kinds, ranks.
from semiconj import PartialTransformation, decompose, invariant, rank, sac, to_dot

# %% a map on 10 points: a 2-cycle with a tail, a fixed point, and a tree
alpha = PartialTransformation.from_mapping(
    {0: 1, 1: 0, 2: 0, 3: 3, 4: 6, 5: 6, 6: 7, 8: 9}, 10
)
print("image:", alpha.image)
print("dom:", sorted(alpha.dom), " span:", sorted(alpha.span))

# %% connected components and their kinds
for c in decompose(alpha):
    print(sorted(c.vertices), "->", c.kind)

# %% rank inside the tree component: longest path ending at each vertex
tree = decompose(alpha)[2].restriction
print("ranks:", rank(tree))

# %% the invariant that decides conjugacy in P(n)
print(invariant(alpha))
print("sac of {4, 6, 8, 10, 18}:", sac({4, 6, 8, 10, 18}))

# %% DOT text for graphviz
print(to_dot(alpha))
