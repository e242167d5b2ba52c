"""Translational hulls, kernel actions, and the LM/RM/GGM/WGGM hierarchy.

Run with: python3 demos/03_translational_hull.py
"""

from eggbox import core, hull, constructions as cons

# A bitranslation is a linked pair (lam, rho): lam(st) = lam(s)t,
# (st)rho = s(t)rho, and s lam(t) = (s)rho t. Every element induces an inner
# one, and the hull Omega(S) collects them all.
rb = core.rectangular_band(2, 2)
H = hull.enumerate_hull(rb)
print("|Omega(RB22)| =", len(H), " (= |T2| x |T2|, all self-map pairs of rows and columns)")
inner = {hull.inner_bitranslation(rb, s) for s in range(len(rb))}
print("inner image size:", len(inner), " (the band is far from reductive)")

# for groups, every bitranslation is inner
for n in (2, 3):
    G = core.cyclic_group(n)
    print(f"|Omega(Z/{n})| =", len(hull.enumerate_hull(G)))

# for Rees matrix semigroups the hull has a parametrized form
# (phi, mu, psi, nu) with a link equation; both paths agree
k2 = cons.k_p(2)
assert hull.enumerate_hull(k2) == hull.enumerate_hull_rees(cons.kp_rees(2))
print("\nbrute-force and parametrized hull agree on K_2:",
      len(hull.enumerate_hull(k2)), "bitranslations")

# the kernel representation restricts left/right action to the minimum ideal
u1 = core.u1()
rep = hull.kernel_representation(u1)
print("\nU1 kernel:", rep.kernel, " lambda images:", rep.lambda_of,
      " (both elements act identically: U1 is not WGGM)")

# classification flags and torsion predicates
for name, S in [("U1", u1), ("RB22", rb), ("K2", k2)]:
    print(f"{name}: classify = {hull.classify(S)}")
print("K2 torsion flags:", hull.torsion_checks(k2))
print("RB22 torsion flags:", hull.torsion_checks(rb), " (a rectangular group has none)")

# reductivity = injectivity of the canonical maps into translations
print("\nreductivity of a monoid:", hull.reductivity(core.cyclic_group(4)))
print("reductivity of RB22:", hull.reductivity(rb))
