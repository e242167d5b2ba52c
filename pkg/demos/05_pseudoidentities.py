"""Omega-terms: evaluation, the identity registry, and two word problems.

Run with: python3 demos/05_pseudoidentities.py
"""

from eggbox import core, terms, constructions as cons
from eggbox.terms import GroupSpec, parse_term, term_to_text

# terms are letters, juxtaposition, powers ^k, and omega powers ^w, ^(w-1), ^(w+1)
t = parse_term("(xy)^w x")
print("parsed:", term_to_text(t))

# evaluation in a finite semigroup: x^w is the idempotent power
k2 = cons.k_p(2)
asg = {"x": k2.index_of("(0,0,1)"), "y": k2.index_of("(1,0,0)")}
print("(xy)^w x in K_2:", k2.elements[terms.evaluate(t, k2, asg)], " (K_2 is completely simple)")

# identity checking scans all assignments and reports the first witness
print("\nU1 satisfies x^2 = x:", terms.satisfies_identity(core.u1(), "x^2", "x"))
print("Z/2 fails it:", terms.satisfies_identity(core.cyclic_group(2), "x^2", "x"))

# the registry stores 1-free bases for the classical pseudovarieties
print("\nregistry:", ", ".join(terms.pseudovariety_names()), "plus D<n>, K<n>, Ab<n>")
for name in ("Sl", "B", "J", "DA", "CS", "CR", "G"):
    print(f"  U1 in {name}?", terms.pseudovariety_membership(core.u1(), name)[0])

# the V*D_n word problem criterion: compare i_n, t_n and the encoded identity
res = terms.check_vdn("(ab)^w", "(ab)^w ab", 1, core.cyclic_group(2))
print("\n(ab)^w vs (ab)^w ab at n=1 over Z/2:", res,
      "-> separated by any pseudovariety containing Z/2")

# the encoding of an omega term is again an omega term, over gram letters
enc = terms.debruijn_encode_term("(ab)^w", 1)
print("Phi_1((ab)^w) =", term_to_text(enc))

# the recursive word problem for completely regular semigroups with subgroups
# in H: content, 0- and 1-factorizations, then the characteristic sequence
print("\nfree band (H trivial): aab = ab?", terms.equal_in_crh("aab", "ab", GroupSpec.trivial()))
print("free band: ab = ba?", terms.equal_in_crh("ab", "ba", GroupSpec.trivial()))
print("H = Ab_2: ababab = ab?", terms.equal_in_crh("ababab", "ab", GroupSpec.abelian(2)))
print("H = Ab_2: abab = ab?", terms.equal_in_crh("abab", "ab", GroupSpec.abelian(2)))
print("H = all groups: aaa = a?", terms.equal_in_crh("aaa", "a", GroupSpec.all_groups()))
