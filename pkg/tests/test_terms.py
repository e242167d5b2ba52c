import itertools
import random

import pytest

from eggbox import core, constructions as cons, terms, words
from eggbox.terms import (
    Concat,
    GroupSpec,
    Letter,
    OmegaExp,
    Power,
    TermSyntaxError,
    TermTooShortError,
    UnassignedLetterError,
    UnknownPseudovarietyError,
    equal_in_crh,
    parse_term,
    term_to_text,
)
from conftest import small_library


def test_parse_basic():
    t = parse_term("(xy)^w x")
    assert t == Concat((Power(Concat((Letter("x"), Letter("y"))), OmegaExp(0)), Letter("x")))
    assert parse_term("x^(w-1)") == Power(Letter("x"), OmegaExp(-1))
    assert parse_term("x^(w+2)") == Power(Letter("x"), OmegaExp(2))
    assert parse_term("x^3") == Power(Letter("x"), 3)
    assert parse_term("[ab][ba]") == Concat((Letter("ab"), Letter("ba")))


def test_parse_errors():
    with pytest.raises(TermSyntaxError):
        parse_term("x^0")
    with pytest.raises(TermSyntaxError):
        parse_term("x^(w-2)")
    with pytest.raises(TermSyntaxError):
        parse_term("(xy")
    with pytest.raises(TermSyntaxError):
        parse_term("")
    with pytest.raises(TermSyntaxError) as exc:
        parse_term("xy)")
    assert exc.value.pos == 2


def test_printer_round_trip():
    for text in ["(xy)^w x", "x^(w-1)", "x^(w+1) y^4", "xyx", "((xy)^w x)^2", "[ab]([ba][ab])^(w-1)"]:
        t = parse_term(text)
        assert parse_term(term_to_text(t)) == t


def test_evaluate_examples(k2, z3, u1):
    x, y = k2.index_of("(0,0,1)"), k2.index_of("(1,0,0)")
    t = parse_term("(xy)^w x")
    assert terms.evaluate(t, k2, {"x": x, "y": y}) == x
    for g in range(3):
        assert terms.evaluate(parse_term("x^(w+1)"), z3, {"x": g}) == g
    assert terms.evaluate(parse_term("x^w"), u1, {"x": 0}) == 0
    with pytest.raises(UnassignedLetterError):
        terms.evaluate(parse_term("xy"), u1, {"x": 0})


def test_evaluate_omega_minus_one(z6):
    # x^(w-1) x = x^w in every finite semigroup
    for name, S in small_library().items():
        for s in range(len(S)):
            v = terms.evaluate(parse_term("x^(w-1)"), S, {"x": s})
            assert S.mul(v, s) == core.omega_power(S, s), name


def test_satisfies_identity(u1, z2, k2):
    assert terms.satisfies_identity(u1, "x^2", "x") == (True, None)
    ok, witness = terms.satisfies_identity(z2, "x^2", "x")
    assert not ok and witness == {"x": 1}
    assert terms.satisfies_identity(k2, "x(yx)^w", "x")[0]


def test_satisfies_identity_lex_first_witness(z3):
    ok, witness = terms.satisfies_identity(z3, "xy", "yx x")
    assert not ok
    # brute-force oracle for the lexicographically first failure
    expected = None
    for x, y in itertools.product(range(3), repeat=2):
        if (x + y) % 3 != (y + x + x) % 3:
            expected = {"x": x, "y": y}
            break
    assert witness == expected


def test_satisfies_identity_parallel_matches(z3, k2):
    for S, lhs, rhs in [(z3, "xy", "yx x"), (k2, "xy", "yx"), (k2, "x(yx)^w", "x")]:
        assert terms.satisfies_identity(S, lhs, rhs) == terms.satisfies_identity(
            S, lhs, rhs, jobs=2
        )


def test_satisfies_inequality(u1):
    from eggbox import order

    os_ = order.ordered(u1, [(0, 1)])
    assert terms.satisfies_inequality(os_, "xy", "y") == (True, None)
    ok, witness = terms.satisfies_inequality(os_, "y", "xy")
    assert not ok and witness == {"x": 0, "y": 1}
    # with the trivial order, u <= v holds iff u = v holds
    triv = order.trivial_order(u1)
    assert terms.satisfies_inequality(triv, "xy", "yx")[0] == terms.satisfies_identity(
        u1, "xy", "yx"
    )[0]


def test_registry_examples(u1, z2, k2, rb22, n2, lz2):
    member = lambda S, name: terms.pseudovariety_membership(S, name)[0]
    assert member(rb22, "RB") and not member(rb22, "Sl")
    assert member(z2, "G") and member(z2, "Ab2")
    assert member(k2, "CS") and member(k2, "CR") and not member(k2, "G")
    assert member(u1, "Sl") and member(u1, "J") and member(u1, "DA")
    assert member(n2, "N") and member(n2, "A")
    assert member(lz2, "LZ") and member(lz2, "K1")
    with pytest.raises(UnknownPseudovarietyError):
        terms.pseudovariety_membership(u1, "nope")


def test_registry_failure_reports(z2):
    ok, failing = terms.pseudovariety_membership(z2, "B")
    assert not ok
    assert failing["witness"] == {"x": 1}


def test_registry_containments():
    # morally Sl <= B, Sl <= J <= DA <= DS, LZ <= RB <= B, CS <= CR <= DS,
    # G <= CR, N <= A <= DA is false (A not in DA)... keep to listed chains
    chains = [
        ("Sl", "B"),
        ("Sl", "J"),
        ("J", "DA"),
        ("DA", "DO"),
        ("DA", "DS"),
        ("DO", "DS"),
        ("LZ", "RB"),
        ("RZ", "RB"),
        ("RB", "B"),
        ("B", "DA"),
        ("CS", "CR"),
        ("CR", "DS"),
        ("G", "CR"),
        ("LZ", "K"),
        ("RZ", "D"),
        ("K", "LI"),
        ("D", "LI"),
        ("N", "LI"),
        ("Ab2", "G"),
        ("Sl", "DA"),
    ]
    lib = small_library()
    for low, high in chains:
        for name, S in lib.items():
            if len(S) > 8:
                continue
            if terms.pseudovariety_membership(S, low)[0]:
                assert terms.pseudovariety_membership(S, high)[0], (name, low, high)


def test_registry_parametrized(lz2, rz2):
    assert terms.pseudovariety_membership(lz2, "K1")[0]
    assert terms.pseudovariety_membership(rz2, "D1")[0]
    assert terms.pseudovariety_membership(rz2, "D2")[0]  # D1 <= D2
    assert not terms.pseudovariety_membership(lz2, "D1")[0]
    z2 = core.cyclic_group(2)
    assert terms.pseudovariety_membership(z2, "Ab2")[0]
    assert terms.pseudovariety_membership(z2, "Ab4")[0]
    assert not terms.pseudovariety_membership(core.cyclic_group(3), "Ab2")[0]


def test_term_i_t():
    assert str(terms.term_i_t("(ab)^w", 2)[1]) == "ab"
    assert str(terms.term_i_t("(ab)^w c", 3)[0]) == "aba"
    assert str(terms.term_i_t("a^w b", 2)[1]) == "ab"
    # independent of the unfolding depth beyond the bound
    t = parse_term("(ab)^w c (ba)^(w+1)")
    for n in (1, 2, 3):
        base = (str(terms.unfold(t, n + 2)[: n]), )
        for extra in (3, 4, 6):
            w = terms.unfold(t, n + extra)
            assert str(words.i_n(w, n)) == str(terms.term_i_t(t, n)[0])
            assert str(words.t_n(w, n)) == str(terms.term_i_t(t, n)[1])
        del base


def test_debruijn_encode_term_exact_shape():
    enc = terms.debruijn_encode_term("(ab)^w", 1)
    expected = Concat(
        (Letter("ab"), Power(Concat((Letter("ba"), Letter("ab"))), OmegaExp(-1)))
    )
    assert enc == expected


def test_debruijn_encode_term_plain_word_matches_words_module():
    for text, n in [("aba", 1), ("abcab", 2), ("aabb", 1)]:
        enc = terms.debruijn_encode_term(text, n)
        flat = terms.unfold(enc, 1)  # no omega powers present
        assert flat.letters == words.debruijn_encode(text, n).letters


def test_debruijn_encode_term_string_unfolding_for_plain_omega():
    # when the base is already >= n long and the exponent is w or w+k with
    # k >= 0, the encoding co-unfolds letter for letter with the source
    cases = [("(ab)^w", 1), ("(ab)^w", 2), ("(ab)^(w+1)", 1), ("(abc)^(w+2) a", 2)]
    for text, n in cases:
        enc = terms.debruijn_encode_term(text, n)
        for m in (n + 2, n + 4, n + 8):
            got = terms.unfold(enc, m).letters
            want = words.debruijn_encode(terms.unfold(parse_term(text), m), n).letters
            assert got == want, (text, n, m)


def test_debruijn_encode_term_semantic_oracle():
    # ground truth: unfold deep enough that every omega power stabilizes in
    # the probe semigroups (reps = 4! covers sizes <= 4), encode the word,
    # and compare evaluations under every assignment of the gram letters
    cases = [
        ("(ab)^w", 1),
        ("(ab)^(w+1)", 1),
        ("(ab)^(w-1)", 1),
        ("(ab)^(w-1)", 2),
        ("a^w b", 1),
        ("a^w b", 2),
        ("(ab)^w c (ab)^w", 2),
        ("((ab)^w c)^w", 1),
        ("a^(w-1)", 1),
        ("(ab)^w (ba)^(w-1)", 1),
    ]
    reps = 24
    probes = [
        core.u1(),
        core.cyclic_group(2),
        core.cyclic_group(3),
        core.cyclic_group(4),
        core.left_zero(2),
        core.right_zero(2),
    ]
    for text, n in cases:
        enc = terms.debruijn_encode_term(text, n)
        grams_word = words.debruijn_encode(terms.unfold(parse_term(text), reps), n)
        variables = sorted(terms.letters_of(enc) | set(grams_word.letters))
        for T in probes:
            for values in itertools.product(range(len(T)), repeat=len(variables)):
                asg = dict(zip(variables, values))
                got = terms.evaluate(enc, T, asg)
                want = core.evaluate_word(T, asg, grams_word.letters)
                assert got == want, (text, n, T.elements, asg)


def test_debruijn_encode_term_power_law_random():
    rng = random.Random(8)
    for _ in range(100):
        n = rng.randint(1, 3)
        u = "".join(rng.choice("ab") for _ in range(rng.randint(max(1, n), 5)))
        m = rng.randint(2, 5)
        lhs = words.debruijn_encode(u * m, n).letters
        rhs = words.debruijn_encode(u, n).letters + words.debruijn_encode(
            str(words.t_n(u, n)) + u, n
        ).letters * (m - 1)
        assert lhs == rhs


def test_debruijn_encode_term_too_short():
    with pytest.raises(TermTooShortError):
        terms.debruijn_encode_term("ab", 2)


def test_check_vdn(u1, z2):
    res = terms.check_vdn("ab", "ba", 1, u1)
    assert not res.i_t_equal
    res = terms.check_vdn("(ab)^w", "(ab)^w ab", 1, z2)
    assert res.i_t_equal and not res.encoded_identity_holds
    res = terms.check_vdn("(ab)^w a", "(ab)^w a", 2, u1)
    assert res.i_t_equal and res.encoded_identity_holds


def test_equal_in_crh_examples():
    triv = GroupSpec.trivial()
    assert equal_in_crh("ab", "ba", triv) == (False, "zero")
    assert equal_in_crh("aab", "ab", triv) == (True, None)
    assert equal_in_crh("aba", "ab", triv)[0] is False
    assert equal_in_crh("aba", "ab", triv)[1] == "one"
    p = 3
    assert equal_in_crh("a" * (p + 1), "a", GroupSpec.abelian(p)) == (True, None)
    assert equal_in_crh("aa", "a", GroupSpec.abelian(p))[0] is False
    assert equal_in_crh("aa", "a", GroupSpec.all_groups())[0] is False
    with pytest.raises(words.EmptyWordError):
        equal_in_crh("", "a", triv)


def test_equal_in_crh_is_an_equivalence():
    two_letter_words = []
    for length in range(1, 7):
        two_letter_words += ["".join(w) for w in itertools.product("ab", repeat=length)]
    for h in (GroupSpec.trivial(), GroupSpec.abelian(2), GroupSpec.all_groups()):
        keys = {w: terms.crh_class_key(w, h) for w in two_letter_words}
        for u in two_letter_words[:20]:
            for v in two_letter_words[:20]:
                assert equal_in_crh(u, v, h)[0] == (keys[u] == keys[v])


def test_equal_in_crh_free_band_classes():
    # the free band on two generators has six elements
    ws = []
    for length in range(1, 7):
        ws += ["".join(w) for w in itertools.product("ab", repeat=length)]
    classes = {terms.crh_class_key(w, GroupSpec.trivial()) for w in ws}
    assert len(classes) == 6


def band_models():
    u1, lz2, rz2 = core.u1(), core.left_zero(2), core.right_zero(2)
    singles = [u1, lz2, rz2]
    prods = [core.direct_product(a, b) for a, b in itertools.combinations(singles, 2)]
    return singles + prods


def test_equal_in_crh_sound_for_trivial_groups():
    rng = random.Random(10)
    models = band_models()
    for _ in range(150):
        u = "".join(rng.choice("ab") for _ in range(rng.randint(1, 6)))
        v = "".join(rng.choice("ab") for _ in range(rng.randint(1, 6)))
        if not equal_in_crh(u, v, GroupSpec.trivial())[0]:
            continue
        for M in models:
            for ga, gb in itertools.product(range(len(M)), repeat=2):
                gm = {"a": ga, "b": gb}
                assert core.evaluate_word(M, gm, u) == core.evaluate_word(M, gm, v)


def test_equal_in_crh_sound_for_ab2():
    rng = random.Random(11)
    models = band_models() + [cons.k_p(2), core.direct_product(core.u1(), cons.k_p(2))]
    for _ in range(100):
        u = "".join(rng.choice("ab") for _ in range(rng.randint(1, 6)))
        v = "".join(rng.choice("ab") for _ in range(rng.randint(1, 6)))
        if not equal_in_crh(u, v, GroupSpec.abelian(2))[0]:
            continue
        for M in models:
            for ga, gb in itertools.product(range(len(M)), repeat=2):
                gm = {"a": ga, "b": gb}
                assert core.evaluate_word(M, gm, u) == core.evaluate_word(M, gm, v)


def test_group_spec_validation():
    with pytest.raises(ValueError):
        GroupSpec.abelian(1)
    with pytest.raises(ValueError):
        GroupSpec("bogus")
    assert GroupSpec.from_text("ab:3") == GroupSpec.abelian(3)
    assert GroupSpec.from_text("trivial") == GroupSpec.trivial()
    assert GroupSpec.from_text("groups") == GroupSpec.all_groups()


def test_identity_stable_under_products():
    pool = [core.u1(), core.cyclic_group(2), core.left_zero(2)]
    idents = [("x^2", "x"), ("xy", "yx"), ("xy", "x"), ("x^(w+1)", "x")]
    for S, T in itertools.product(pool, repeat=2):
        P = core.direct_product(S, T)
        for lhs, rhs in idents:
            both = terms.satisfies_identity(S, lhs, rhs)[0] and terms.satisfies_identity(T, lhs, rhs)[0]
            assert terms.satisfies_identity(P, lhs, rhs)[0] == both


def test_satisfies_identity_symmetric():
    pool = [core.u1(), core.cyclic_group(2), core.left_zero(2)]
    for S in pool:
        for lhs, rhs in [("xy", "yx"), ("x^2", "x"), ("xy", "x")]:
            assert (
                terms.satisfies_identity(S, lhs, rhs)[0]
                == terms.satisfies_identity(S, rhs, lhs)[0]
            )


def crh_closure(letters, h):
    """Class representatives closed under concatenation."""
    reps = {terms.crh_class_key(a, h): a for a in letters}
    while True:
        new = {}
        items = list(reps.values())
        for u in items:
            for v in items:
                k = terms.crh_class_key(u + v, h)
                if k not in reps and k not in new:
                    new[k] = u + v
        if not new:
            return reps
        reps.update(new)


def test_free_band_on_three_generators_has_159_elements():
    # Green-Rees: |FB(1)| = 1, |FB(2)| = 6, |FB(3)| = 159
    triv = GroupSpec.trivial()
    assert len(crh_closure("a", triv)) == 1
    assert len(crh_closure("ab", triv)) == 6
    assert len(crh_closure("abc", triv)) == 159


def test_free_object_for_ab2_on_two_generators():
    # the free completely regular semigroup with exponent-2 subgroups on
    # {a,b}: four single-letter classes plus a 4 x 4 kernel with maximal
    # subgroups of order 8, i.e. 4 + 4*4*8 = 132 elements
    reps = crh_closure("ab", GroupSpec.abelian(2))
    assert len(reps) == 132
    singles = [k for k in reps if k[0] == "pow"]
    full = [k for k in reps if k[0] == "word"]
    assert len(singles) == 4 and len(full) == 128


def test_single_letter_free_object_mod_3():
    reps = crh_closure("a", GroupSpec.abelian(3))
    assert len(reps) == 3
