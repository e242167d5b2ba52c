"""Word combinatorics: factorizations, characteristic sequences, encodings.

Run with: python3 demos/04_words_and_encodings.py
"""

from eggbox import words

w = "acaba"

# content and the basic factorizations: w = prefix . marker . remainder with
# content(prefix) plus the marker giving the whole content
f = words.left_basic_factorization(w)
print(f"left basic factorization of {w}: ({f.prefix!s}, {f.marker}, {f.remainder!s})")
g = words.right_basic_factorization(w)
print(f"right basic factorization:       ({g.prefix!s}, {g.marker}, {g.remainder!s})")

# iterating the 0-function walks the first occurrences right to left
order = []
v = w
while v:
    prefix, marker = words.zero_funcs(v)
    order.append(marker)
    v = str(prefix)
print("first-occurrence order of letters:", order[::-1])

# scattered subwords and greedy occurrences
print("\n'ab' embeds in 'aabb' at positions", words.greedy_subword("aabb", "ab")[0],
      "with remainder", str(words.greedy_subword("aabb", "ab")[1]))

# the characteristic sequence lists maximal factors missing exactly one letter
for u in ("aabba", "abcab"):
    chi = [(str(f), s, e) for f, s, e in words.characteristic_sequence(u)]
    print(f"chi({u}) =", chi)

# the de Bruijn encoding reads off the (n+1)-gram factors; output letters are
# the grams themselves
print("\nPhi_1(abab) =", str(words.debruijn_encode("abab", 1)))
print("Phi_2(abcab) =", str(words.debruijn_encode("abcab", 2)))
print("valid gram path:", words.valid_debruijn_encoding(words.debruijn_encode("abcab", 2), 2))

# two constructive lemmas, each self-checking by an occurrence scan:
# stretch_word makes the only occurrence of s in x r s the suffix one
r = words.stretch_word("b", [], "baa")
print("\nstretch: x='b', s='baa' -> r =", str(r))
r = words.stretch_word("b", ["bbabab"], "baa")
print("stretch avoiding 'bbabab' -> r =", str(r))

# connect_word extends w so that aw occurs exactly once (as a suffix) and bw
# not at all
t = words.connect_word("ab", "a", "b")
print("connect: w='ab' -> t =", str(t), " (wt =", "ab" + str(t) + ")")
