# Conjugacy relations on abstract semigroups given by Cayley tables.
import numpy as np

from semiconj import (
    PartialTransformation,
    RelationKind,
    check_axioms,
    classes,
    cyclic_group,
    from_generators,
    group_conjugacy,
    load_table,
    p_set,
    relation,
)

# %% the two-element null semigroup {a, 0}
s = load_table("zero=1\n2\n1 1\n1 1\n")
print("P(a) =", set(p_set(s, 0)), " P(0) =", set(p_set(s, 1)))
print("~o:\n", relation(s, RelationKind.O).astype(int))
print("~c:\n", relation(s, RelationKind.C).astype(int))

# %% Sym(3) from two generators: ~c is the usual conjugacy
sym3 = from_generators([PartialTransformation(3, (1, 2, 0)), PartialTransformation(3, (1, 0, 2))])
print("order", sym3.order, "classes", classes(sym3, RelationKind.C))
print("same as g^-1 a g:", np.array_equal(relation(sym3, RelationKind.C), group_conjugacy(sym3)))

# %% commutative and cancellative: every class is a singleton
print("C5 classes:", classes(cyclic_group(5), RelationKind.C))

# %% the axiom checks on each example
for name, t in [("null", s), ("Sym(3)", sym3), ("C5", cyclic_group(5))]:
    print(name, check_axioms(t).lines())
