"""The construction zoo: Rees matrices, K_p, synthesis, semidirect products.

Run with: python3 demos/02_constructions.py
"""

import itertools

from eggbox import core, green, constructions as cons

# Rees matrix semigroup over a sandwich matrix: (a,g,b)(a',g',b') = (a, g P(b,a') g', b')
band = cons.rees_matrix(2, core.trivial(), 2, [[0, 0], [0, 0]])
print("M(2, trivial, 2) is the 2x2 rectangular band:", len(band), "elements")

# K_p = M({0,1}, Z/p, {0,1}; [[0,0],[0,1]]): 4p elements, generated by two
# idempotents
k3 = cons.k_p(3)
gens = [k3.index_of("(0,0,1)"), k3.index_of("(1,0,0)")]
print("|K_3| =", len(k3), " generated by the two idempotents:",
      core.generated_subsemigroup(k3, gens) == frozenset(range(len(k3))))

# the synthesis semigroup M(S,T,f) = S + S^1 x T^1 x S^1 glues two semigroups
# through an arbitrary map f: S^1 -> T^1
z2 = core.cyclic_group(2)
syn = cons.synthesis(z2, z2, [0, 1])
print("\nM(Z2, Z2, f) has", len(syn.carrier), "elements; the S-copy is a subsemigroup",
      "and the triple block is an ideal")

# multiplication threads the middle coordinate through f:
i = syn.triple_index(0, 1, 1)
j = syn.triple_index(1, 0, 0)
print("(0,1,1) * (1,0,0) =", syn.carrier.elements[syn.carrier.mul(i, j)])

# every subgroup of M(S,T,f) embeds in S or T; with S and T groups this makes
# the construction a torsion-controlled Rees matrix extension
for e in syn.carrier.idempotents():
    H = green.maximal_subgroup(syn.carrier, e)
    print("maximal subgroup at", syn.carrier.elements[e], "has order", len(H))

# inside M(G, G, g) for G = Z/p sits a copy of K_p with an identity adjoined
for p in (2, 3, 5):
    gadget = cons.bullet_gadget(p)
    kp1 = core.adjoin_identity(cons.k_p(p))
    print(f"bullet gadget p={p}: {len(gadget)} elements, isomorphic to K_{p}^1:",
          core.is_isomorphic(gadget, kp1, bound=32) is not None)

# semidirect products: (s1,t1)(s2,t2) = (s1 * (t1.s2), t1 t2)
z3 = core.cyclic_group(3)
inversion = {0: (0, 1, 2), 1: (0, 2, 1)}
sd = cons.semidirect_product(z3, z2, inversion)
perms = list(itertools.permutations(range(3)))
s3 = core.from_function(perms, lambda f, g: tuple(f[g[i]] for i in range(3)))
print("\nZ/3 x| Z/2 with inversion is S_3:", core.is_isomorphic(sd, s3) is not None)
