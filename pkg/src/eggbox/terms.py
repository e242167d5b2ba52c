"""Omega-terms: parsing, evaluation, identity checking, and word problems.

An omega-term is built from letters, concatenation, integer powers (>= 1)
and powers of the form w+k with k >= -1. Evaluation sends x^w to the unique
idempotent power and x^(w-1) to the group inverse of x x^w.
"""

from __future__ import annotations

import itertools
import multiprocessing
import re
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, NamedTuple, Optional, Sequence, Union

from .core import FiniteSemigroup, omega_minus_one, omega_power
from .words import (
    Word,
    EmptyWordError,
    characteristic_sequence,
    coerce,
    content,
    i_n,
    left_basic_factorization,
    right_basic_factorization,
    t_n,
)


class TermSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} (at position {pos})")


class UnassignedLetterError(ValueError):
    pass


class UnknownPseudovarietyError(ValueError):
    pass


class TermTooShortError(ValueError):
    pass


@dataclass(frozen=True)
class OmegaExp:
    """Exponent w+k; k = 0 is the omega power itself, k = -1 its inverse."""

    k: int = 0

    def __post_init__(self):
        if self.k < -1:
            raise ValueError("omega exponents below w-1 are not supported")


@dataclass(frozen=True)
class Letter:
    ch: str


@dataclass(frozen=True)
class Concat:
    parts: tuple  # length >= 2, no nested Concat

    def __post_init__(self):
        if len(self.parts) < 2 or any(isinstance(p, Concat) for p in self.parts):
            raise ValueError("Concat needs >= 2 parts with no nesting; use concat()")


@dataclass(frozen=True)
class Power:
    base: "Term"
    exp: Union[int, OmegaExp]

    def __post_init__(self):
        if isinstance(self.exp, int) and self.exp < 1:
            raise ValueError("integer powers must be >= 1")


Term = Union[Letter, Concat, Power]


def concat(parts: Sequence[Term]) -> Term:
    flat: list[Term] = []
    for p in parts:
        if isinstance(p, Concat):
            flat.extend(p.parts)
        else:
            flat.append(p)
    if not flat:
        raise ValueError("cannot concatenate zero terms")
    if len(flat) == 1:
        return flat[0]
    return Concat(tuple(flat))


def letters_of(term: Term) -> frozenset[str]:
    if isinstance(term, Letter):
        return frozenset((term.ch,))
    if isinstance(term, Power):
        return letters_of(term.base)
    out: frozenset[str] = frozenset()
    for p in term.parts:
        out |= letters_of(p)
    return out


# --- parsing and printing ----------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise TermSyntaxError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def parse(self) -> Term:
        t = self.parse_concat()
        self.skip_ws()
        if self.pos != len(self.text):
            raise TermSyntaxError("unexpected trailing input", self.pos)
        return t

    def parse_concat(self) -> Term:
        factors = []
        while True:
            c = self.peek()
            if (c.isalpha() and c.islower()) or c == "(" or c == "[":
                factors.append(self.parse_factor())
            else:
                break
        if not factors:
            raise TermSyntaxError("expected a term", self.pos)
        return concat(factors)

    def parse_factor(self) -> Term:
        t = self.parse_atom()
        while self.peek() == "^":
            self.pos += 1
            t = Power(t, self.parse_exponent())
        return t

    def parse_atom(self) -> Term:
        c = self.peek()
        if c == "(":
            self.pos += 1
            t = self.parse_concat()
            self.expect(")")
            return t
        if c == "[":
            self.pos += 1
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] != "]":
                self.pos += 1
            if self.pos == len(self.text) or self.pos == start:
                raise TermSyntaxError("unterminated composite letter", start)
            ch = self.text[start : self.pos]
            self.pos += 1
            return Letter(ch)
        if c.isalpha() and c.islower():
            self.pos += 1
            return Letter(c)
        raise TermSyntaxError("expected a letter or parenthesis", self.pos)

    def parse_exponent(self) -> Union[int, OmegaExp]:
        c = self.peek()
        if c == "w":
            self.pos += 1
            return OmegaExp(0)
        if c == "(":
            self.pos += 1
            if self.peek() != "w":
                raise TermSyntaxError("expected 'w' in omega exponent", self.pos)
            self.pos += 1
            sign = self.peek()
            if sign not in "+-":
                raise TermSyntaxError("expected '+' or '-' after 'w'", self.pos)
            self.pos += 1
            k = self.parse_int()
            self.expect(")")
            k = k if sign == "+" else -k
            if k < -1:
                raise TermSyntaxError("exponents below w-1 are not supported", self.pos)
            return OmegaExp(k)
        if c.isdigit():
            k = self.parse_int()
            if k < 1:
                raise TermSyntaxError("integer powers must be >= 1", self.pos)
            return k
        raise TermSyntaxError("expected an exponent", self.pos)

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise TermSyntaxError("expected an integer", start)
        return int(self.text[start : self.pos])


def parse_term(text: str) -> Term:
    """Parse a term: letters a-z, juxtaposition, parentheses, suffixes
    ^w, ^(w-1), ^(w+k), ^k. Composite letters go in brackets: [ab]."""
    return _Parser(text).parse()


def _atom_text(t: Term) -> str:
    txt = term_to_text(t)
    if isinstance(t, Letter):
        return txt
    if isinstance(t, Power) and isinstance(t.base, Letter):
        return txt
    return f"({txt})"


def term_to_text(t: Term) -> str:
    if isinstance(t, Letter):
        return t.ch if len(t.ch) == 1 else f"[{t.ch}]"
    if isinstance(t, Power):
        e = t.exp
        if isinstance(e, OmegaExp):
            etxt = "w" if e.k == 0 else f"(w{e.k:+d})"
        else:
            etxt = str(e)
        base = term_to_text(t.base)
        if not isinstance(t.base, Letter):
            base = f"({base})"
        return f"{base}^{etxt}"
    return " ".join(
        term_to_text(p) if isinstance(p, (Letter, Power)) and not isinstance(p, Concat)
        else f"({term_to_text(p)})"
        for p in t.parts
    )


# --- evaluation and satisfaction ----------------------------------------------

def evaluate(term: Term, S: FiniteSemigroup, assignment: Mapping[str, int]) -> int:
    if isinstance(term, Letter):
        if term.ch not in assignment:
            raise UnassignedLetterError(f"letter {term.ch!r} is unassigned")
        return assignment[term.ch]
    if isinstance(term, Concat):
        acc = evaluate(term.parts[0], S, assignment)
        for p in term.parts[1:]:
            acc = S.table[acc][evaluate(p, S, assignment)]
        return acc
    v = evaluate(term.base, S, assignment)
    e = term.exp
    if isinstance(e, int):
        return S.power(v, e)
    if e.k == -1:
        return omega_minus_one(S, v)
    acc = omega_power(S, v)
    for _ in range(e.k):
        acc = S.table[acc][v]
    return acc


def _scan_block(args):
    S, lhs, rhs, variables, first_values, rest = args
    for first in first_values:
        for tail in itertools.product(range(len(S)), repeat=rest):
            assignment = dict(zip(variables, (first,) + tail))
            if evaluate(lhs, S, assignment) != evaluate(rhs, S, assignment):
                return (first,) + tail
    return None


def satisfies_identity(
    S: FiniteSemigroup, lhs: Term, rhs: Term, jobs: int = 1
) -> tuple[bool, Optional[dict[str, int]]]:
    """Check lhs = rhs under every assignment of letters to elements of S.

    On failure returns the lexicographically first witness assignment
    (letters sorted, values in index order), also when the scan is split
    across worker processes.
    """
    if isinstance(lhs, str):
        lhs = parse_term(lhs)
    if isinstance(rhs, str):
        rhs = parse_term(rhs)
    variables = sorted(letters_of(lhs) | letters_of(rhs))
    n = len(S)
    rest = len(variables) - 1
    if jobs > 1 and n > 1:
        chunks = [list(range(n))[i::jobs] for i in range(jobs)]
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            hits = pool.map(
                _scan_block,
                [(S, lhs, rhs, variables, chunk, rest) for chunk in chunks if chunk],
            )
        hits = [h for h in hits if h is not None]
        if not hits:
            return True, None
        best = min(hits)
        return False, dict(zip(variables, best))
    hit = _scan_block((S, lhs, rhs, variables, range(n), rest))
    if hit is None:
        return True, None
    return False, dict(zip(variables, hit))


def satisfies_inequality(
    ordered_semigroup, lhs: Term, rhs: Term, jobs: int = 1
) -> tuple[bool, Optional[dict[str, int]]]:
    """Check lhs <= rhs for every assignment, over a stable partial order."""
    if isinstance(lhs, str):
        lhs = parse_term(lhs)
    if isinstance(rhs, str):
        rhs = parse_term(rhs)
    S = ordered_semigroup.semigroup
    leq = ordered_semigroup.leq
    variables = sorted(letters_of(lhs) | letters_of(rhs))
    for values in itertools.product(range(len(S)), repeat=len(variables)):
        assignment = dict(zip(variables, values))
        if (evaluate(lhs, S, assignment), evaluate(rhs, S, assignment)) not in leq:
            return False, assignment
    return True, None


# --- the identity registry ----------------------------------------------------

# Bases are stored 1-free: G, Ab_n and N are rewritten so satisfaction
# quantifies over S rather than S^1.
_FIXED_BASES: dict[str, list[tuple[str, str]]] = {
    "S": [("x", "x")],
    "I": [("x", "y")],
    "Sl": [("x^2", "x"), ("xy", "yx")],
    "N": [("x^w y", "x^w"), ("y x^w", "x^w"), ("x^w", "y^w")],
    "D": [("x y^w", "y^w")],
    "K": [("x^w y", "x^w")],
    "LI": [("x^w y x^w", "x^w")],
    "LSl": [
        ("x^w y x^w y x^w", "x^w y x^w"),
        ("x^w y x^w z x^w", "x^w z x^w y x^w"),
    ],
    "LZ": [("xy", "x")],
    "RZ": [("xy", "y")],
    "RB": [("x^2", "x"), ("xyx", "x")],
    "B": [("x^2", "x")],
    "A": [("x^(w+1)", "x^w")],
    "G": [("x^w y", "y"), ("y x^w", "y")],
    "ReG": [("x y^w x^w", "x")],
    "CS": [("x(yx)^w", "x")],
    "CR": [("x^(w+1)", "x")],
    "J": [("(xy)^w", "(xy)^w x"), ("(xy)^w", "(yx)^w")],
    "DA": [("((xy)^w x)^2", "(xy)^w x")],
    "DO": [("(xy)^w (yx)^w (xy)^w", "(xy)^w")],
    "DS": [("((xy)^w x)^(w+1)", "(xy)^w x")],
}

_VAR_POOL = "abcdefghijklmnopqrstuv"


def pseudovariety_names() -> list[str]:
    return sorted(_FIXED_BASES)


def pseudovariety_basis(name: str) -> list[tuple[Term, Term]]:
    """The stored identity basis for a registry name.

    Fixed names as in pseudovariety_names(); parametrized families are
    D<n>, K<n>, Ab<n>.
    """
    if name in _FIXED_BASES:
        pairs = _FIXED_BASES[name]
        return [(parse_term(l), parse_term(r)) for l, r in pairs]
    m = re.fullmatch(r"D(\d+)", name)
    if m:
        ns = int(m.group(1))
        if not 1 <= ns <= len(_VAR_POOL):
            raise UnknownPseudovarietyError(f"unsupported degree in {name!r}")
        ys = _VAR_POOL[:ns]
        return [(parse_term("x" + ys), parse_term(ys))]
    m = re.fullmatch(r"K(\d+)", name)
    if m:
        ns = int(m.group(1))
        if not 1 <= ns <= len(_VAR_POOL):
            raise UnknownPseudovarietyError(f"unsupported degree in {name!r}")
        xs = _VAR_POOL[:ns]
        return [(parse_term(xs + "y"), parse_term(xs))]
    m = re.fullmatch(r"Ab(\d+)", name)
    if m:
        ns = int(m.group(1))
        if ns < 1:
            raise UnknownPseudovarietyError(f"unsupported exponent in {name!r}")
        return [
            (parse_term(f"x^{ns} y" if ns > 1 else "x y"), parse_term("y")),
            (parse_term("xy"), parse_term("yx")),
        ]
    raise UnknownPseudovarietyError(f"unknown pseudovariety {name!r}")


def pseudovariety_membership(S: FiniteSemigroup, name: str, jobs: int = 1):
    """Does S satisfy every identity in the named basis?

    Returns (bool, failing) where failing is None or a dict with the failing
    identity and the witness assignment.
    """
    for lhs, rhs in pseudovariety_basis(name):
        holds, witness = satisfies_identity(S, lhs, rhs, jobs=jobs)
        if not holds:
            return False, {
                "lhs": term_to_text(lhs),
                "rhs": term_to_text(rhs),
                "witness": witness,
            }
    return True, None


# --- i_n / t_n and the de Bruijn encoding on terms -----------------------------

def unfold(term: Term, omega_reps: int) -> Word:
    """Finite unfolding with every w+k exponent replaced by omega_reps+k."""
    if isinstance(term, Letter):
        return Word((term.ch,))
    if isinstance(term, Concat):
        out: tuple[str, ...] = ()
        for p in term.parts:
            out += unfold(p, omega_reps).letters
        return Word(out)
    base = unfold(term.base, omega_reps).letters
    e = term.exp
    reps = e if isinstance(e, int) else omega_reps + e.k
    return Word(base * reps)


def term_i_t(term: Term, n: int) -> tuple[Word, Word]:
    """(i_n, t_n) of the term, via a sufficiently deep unfolding."""
    if isinstance(term, str):
        term = parse_term(term)
    if n < 1:
        raise ValueError("n must be >= 1")
    w = unfold(term, n + 2)
    return i_n(w, n), t_n(w, n)


def _minlen(term: Term) -> int:
    if isinstance(term, Letter):
        return 1
    if isinstance(term, Concat):
        return sum(_minlen(p) for p in term.parts)
    e = term.exp
    reps = e if isinstance(e, int) else max(1, 1 + e.k)
    return reps * _minlen(term.base)


def _gram(letters: tuple[str, ...]) -> Letter:
    return Letter("".join(letters))


def _encode(ctx: tuple[str, ...], term: Term, n: int):
    """Phi_n(ctx . term) as (term-over-grams or None, new length-n tail)."""
    if isinstance(term, Letter):
        w = ctx + (term.ch,)
        tail = w[-n:] if len(w) > n else w
        if len(w) == n + 1:
            return _gram(w), tail
        return None, tail
    if isinstance(term, Concat):
        pieces = []
        for p in term.parts:
            ph, ctx = _encode(ctx, p, n)
            if ph is not None:
                pieces.append(ph)
        return (concat(pieces) if pieces else None), ctx
    e = term.exp
    if isinstance(e, int):
        pieces = []
        for _ in range(e):
            ph, ctx = _encode(ctx, term.base, n)
            if ph is not None:
                pieces.append(ph)
        return (concat(pieces) if pieces else None), ctx
    # omega power: raise the base so its unfolded length is at least n,
    # then use Phi_n(c u^w) = Phi_n(c u) Phi_n(t_n(u) u)^(w-1) and its shifts.
    k = e.k
    base = term.base
    j = max(1, -(-n // _minlen(base)))
    U = base if j == 1 else Power(base, j)
    head, tail_u = _encode(ctx, U, n)
    block, tail_check = _encode(tail_u, U, n)
    assert block is not None and tail_check == tail_u
    pieces = [head] if head is not None else []
    if j == 1 and k >= 0:
        pieces.append(Power(block, OmegaExp(k - 1)))
        return concat(pieces), tail_u
    if k >= 0:
        # base^(w+k) = U^w base^k
        pieces.append(Power(block, OmegaExp(-1)))
        trailing = k
    else:
        # base^(w-1) = U^(w-1) base^(j-1); the block exponent w-2 is
        # realized as (BB)^(w-1), an equality valid in every finite semigroup
        pieces.append(Power(concat([block, block]), OmegaExp(-1)))
        trailing = j - 1
    ctx2 = tail_u
    for _ in range(trailing):
        ph, ctx2 = _encode(ctx2, base, n)
        if ph is not None:
            pieces.append(ph)
    return concat(pieces), ctx2


def debruijn_encode_term(term: Term, n: int) -> Term:
    """Phi_n of a term, as a term over (n+1)-gram letters.

    For plain words this agrees with words.debruijn_encode; terms whose
    unfolding is no longer than n have an empty encoding and raise
    TermTooShortError.
    """
    if isinstance(term, str):
        term = parse_term(term)
    if n < 1:
        raise ValueError("n must be >= 1")
    phi, _ = _encode((), term, n)
    if phi is None:
        raise TermTooShortError("term unfolds to length <= n")
    return phi


class VdnResult(NamedTuple):
    i_t_equal: bool
    encoded_identity_holds: bool


def check_vdn(u: Term, v: Term, n: int, T: FiniteSemigroup, jobs: int = 1) -> VdnResult:
    """The two finite conditions of the V*D_n word-problem criterion.

    i_t_equal: i_n and t_n of the two terms agree. encoded_identity_holds:
    T satisfies Phi_n(u) = Phi_n(v) over the occurring gram letters. A False
    second slot witnesses u != v over V*D_n for every V containing T.
    """
    if isinstance(u, str):
        u = parse_term(u)
    if isinstance(v, str):
        v = parse_term(v)
    iu, tu = term_i_t(u, n)
    iv, tv = term_i_t(v, n)
    pu = debruijn_encode_term(u, n)
    pv = debruijn_encode_term(v, n)
    holds, _ = satisfies_identity(T, pu, pv, jobs=jobs)
    return VdnResult(iu.letters == iv.letters and tu.letters == tv.letters, holds)


# --- the recursive CR meet H-bar word problem -----------------------------------

@dataclass(frozen=True)
class GroupSpec:
    """The group parameter of the completely regular word problem."""

    kind: str  # "trivial" | "abelian" | "groups"
    n: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("trivial", "abelian", "groups"):
            raise ValueError(f"unknown group spec kind {self.kind!r}")
        if self.kind == "abelian" and (self.n is None or self.n < 2):
            raise ValueError("abelian group spec needs modulus n >= 2")
        if self.kind != "abelian" and self.n is not None:
            raise ValueError("modulus only applies to the abelian kind")

    @classmethod
    def trivial(cls) -> "GroupSpec":
        return cls("trivial")

    @classmethod
    def abelian(cls, n: int) -> "GroupSpec":
        return cls("abelian", n)

    @classmethod
    def all_groups(cls) -> "GroupSpec":
        return cls("groups")

    @classmethod
    def from_text(cls, text: str) -> "GroupSpec":
        if text == "trivial":
            return cls.trivial()
        if text == "groups":
            return cls.all_groups()
        m = re.fullmatch(r"ab:(\d+)", text)
        if m:
            return cls.abelian(int(m.group(1)))
        raise ValueError(f"cannot parse group spec {text!r}")


_crh_memo: dict = {}


def _crh_key(letters: tuple[str, ...], h: GroupSpec):
    """Canonical class key: two words are equal over CR meet H-bar exactly
    when their keys coincide."""
    memo_key = (letters, h)
    if memo_key in _crh_memo:
        return _crh_memo[memo_key]
    if not letters:
        result = ("eps",)
    else:
        c = frozenset(letters)
        if len(c) == 1:
            a = letters[0]
            j = len(letters)
            if h.kind == "trivial":
                result = ("pow", a)
            elif h.kind == "abelian":
                result = ("pow", a, j % h.n)
            else:
                result = ("pow", a, j)
        else:
            w = Word(letters)
            zero_key = _crh_key(left_basic_factorization(w).prefix.letters, h)
            one_key = _crh_key(right_basic_factorization(w).remainder.letters, h)
            ids = tuple(
                _crh_key(factor.letters, h)
                for factor, _, _ in characteristic_sequence(w)
            )
            if h.kind == "trivial":
                chi_part = None
            elif h.kind == "abelian":
                counts = Counter(ids)
                chi_part = frozenset(
                    (i, cnt % h.n) for i, cnt in counts.items() if cnt % h.n != 0
                )
            else:
                chi_part = ids
            result = ("word", c, zero_key, one_key, chi_part)
    _crh_memo[memo_key] = result
    return result


def equal_in_crh(u, v, h: GroupSpec) -> tuple[bool, Optional[str]]:
    """Recursive equality of two finite words over the completely regular
    semigroups whose subgroups lie in h.

    Returns (equal, first failing condition), the condition being one of
    "content", "zero", "one", "h".
    """
    u, v = coerce(u), coerce(v)
    if not u or not v:
        raise EmptyWordError("the word problem needs nonempty words")
    if content(u) != content(v):
        return False, "content"
    if _crh_key(left_basic_factorization(u).prefix.letters, h) != _crh_key(
        left_basic_factorization(v).prefix.letters, h
    ):
        return False, "zero"
    if _crh_key(right_basic_factorization(u).remainder.letters, h) != _crh_key(
        right_basic_factorization(v).remainder.letters, h
    ):
        return False, "one"
    if _crh_key(u.letters, h) != _crh_key(v.letters, h):
        return False, "h"
    return True, None


def crh_class_key(u, h: GroupSpec):
    """The canonical key of a word; equal keys mean equal over CR meet H-bar."""
    return _crh_key(coerce(u).letters, h)
