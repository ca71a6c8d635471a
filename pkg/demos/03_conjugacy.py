# Deciding conjugacy in P(n), T(n), Sym(n) and (by search only) I(n).
from semiconj import (
    Family,
    PartialTransformation,
    conj_oracle,
    conj_p_finite,
    conj_sym_finite,
    conj_t_finite,
    identity,
    zero,
)

pt = PartialTransformation.from_mapping

# %% same cycle set {2, 3} and same deepest root, very different shapes
n = 12
a = pt({0: 1, 1: 0, 2: 3, 3: 4, 4: 2, 5: 6, 6: 7, 7: 8, 9: 10, 10: 11, 11: 9}, n)
b = pt({0: 1, 1: 0, 2: 3, 3: 4, 4: 2, 5: 6, 6: 7, 7: 8, 9: 8, 10: 6, 11: 7}, n)
v = conj_p_finite(a, b, witness=True)
print(v.conjugate, v.invariants_src, v.invariants_dst)
print("a -> b:", v.witness_forward.entries)
print("b -> a:", v.witness_backward.entries)

# %% the zero map is alone in its class
print("zero vs fixed point:", conj_p_finite(zero(3), pt({0: 0}, 3)).conjugate)

# %% in T(n) only the cycle set matters: identity and a constant map are conjugate
const = PartialTransformation(3, (0, 0, 0))
print("identity ~ constant in T(3):", conj_t_finite(identity(3), const).conjugate)

# %% in Sym(n) this is ordinary conjugacy by cycle type
s1 = PartialTransformation(4, (1, 0, 3, 2))
s2 = PartialTransformation(4, (2, 3, 0, 1))
print("(01)(23) ~ (02)(13):", conj_sym_finite(s1, s2).conjugate)

# %% I(n): no invariant is known, so the decision is by witness search
chain = pt({0: 1}, 2)
fixed = pt({0: 0}, 2)
print("chain ~ fixed point in I(2):", conj_oracle(chain, fixed, Family.IX).conjugate)
