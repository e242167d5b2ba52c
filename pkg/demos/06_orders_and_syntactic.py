"""Stable partial orders, orderability, and the DFA-to-syntactic pipeline.

Run with: python3 demos/06_orders_and_syntactic.py
"""

from eggbox import core, order, terms, constructions as cons

# a stable order survives multiplication on both sides; closing a single
# seed pair either yields one or runs into an antisymmetry violation
u1 = core.u1()
rel, violation = order.stable_closure(u1, [(0, 1)])
print("closure of 0 <= 1 on U1:", sorted(rel), " violation:", violation)
rel, violation = order.stable_closure(core.cyclic_group(2), [(0, 1)])
print("closure of 0 <= 1 on Z/2 hits antisymmetry at:", violation)

# orderability: groups never, many aperiodic semigroups easily
print("\nU1 orderable:", order.is_orderable(u1)[0])
print("Z/5 orderable:", order.is_orderable(core.cyclic_group(5))[0])
print("stable orders on U1:", len(order.enumerate_stable_orders(u1)))
print("stable orders on LZ2:", len(order.enumerate_stable_orders(core.left_zero(2))))

# a nontrivial GGM semigroup is unorderable; the report cross-checks that
print("\nK_2 report:", order.unorderability_report(cons.k_p(2)))
print("K_3 report:", order.unorderability_report(cons.k_p(3)))

# inequalities over an ordered semigroup: u <= v under every assignment
os_ = order.ordered(u1, [(0, 1)])
print("\nU1 with 0 <= 1 satisfies xy <= y:", terms.satisfies_inequality(os_, "xy", "y")[0])
print("its dual satisfies y <= xy:", terms.satisfies_inequality(order.order_dual(os_), "y", "xy")[0])

# syntactic ordered semigroups from DFAs: the transition semigroup of the
# minimal automaton, ordered by context inclusion
even_a = order.dfa(["e", "o"], ["a"], {("e", "a"): "o", ("o", "a"): "e"}, "e", ["e"])
os_even, gens = order.syntactic_semigroup(even_a)
print("\n(aa)*: syntactic semigroup size", len(os_even.semigroup),
      " trivial order:", os_even.is_trivial())

starts_a = order.dfa(
    ["q0", "acc", "rej"],
    ["a", "b"],
    {
        ("q0", "a"): "acc", ("q0", "b"): "rej",
        ("acc", "a"): "acc", ("acc", "b"): "acc",
        ("rej", "a"): "rej", ("rej", "b"): "rej",
    },
    "q0",
    ["acc"],
)
os_sa, gens_sa = order.syntactic_semigroup(starts_a)
print("aA*: syntactic semigroup is the 2-element left-zero semigroup:",
      core.is_isomorphic(os_sa.semigroup, core.left_zero(2)) is not None)
print("aA*: the induced order is nontrivial:", not os_sa.is_trivial())

# language concatenation by a letter stays inside the pipeline
odd_a = order.concat_letter(even_a, "a")
os_odd, _ = order.syntactic_semigroup(odd_a)
print("(aa)*a: still the two-element group:",
      core.is_isomorphic(os_odd.semigroup, core.cyclic_group(2)) is not None)
