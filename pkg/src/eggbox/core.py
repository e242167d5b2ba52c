"""Finite semigroups as Cayley tables.

Elements are referenced by index into a fixed ordering; labels are for I/O
only, so all algebra stays integer-only. Instances are immutable after
construction and safe to share.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional


class SemigroupError(ValueError):
    """Malformed semigroup data."""


class NonAssociativeError(SemigroupError):
    def __init__(self, i: int, j: int, k: int):
        self.witness = (i, j, k)
        super().__init__(f"not associative at ({i},{j},{k}): (i*j)*k != i*(j*k)")


class OutOfRangeError(SemigroupError):
    pass


class GeneratorsDoNotGenerateError(SemigroupError):
    pass


class UnknownLetterError(SemigroupError):
    pass


class SizeMismatchError(SemigroupError):
    pass


class BoundExceededError(SemigroupError):
    pass


class NotClosedError(SemigroupError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    """A finite semigroup given by its multiplication table.

    Construct untrusted data through :func:`validate`; the raw constructor
    trusts its arguments (used by the construction helpers, whose tables are
    associative by design).
    """

    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    generators: Optional[dict[str, int]] = None
    identity: Optional[int] = None

    def __len__(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def prod(self, indices: Iterable[int]) -> int:
        it = iter(indices)
        acc = next(it)
        for x in it:
            acc = self.table[acc][x]
        return acc

    def power(self, i: int, k: int) -> int:
        if k < 1:
            raise ValueError("power exponent must be >= 1")
        acc = i
        for _ in range(k - 1):
            acc = self.table[acc][i]
        return acc

    def index_of(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise SemigroupError(f"no element labeled {label!r}") from None

    def is_idempotent(self, i: int) -> bool:
        return self.table[i][i] == i

    def idempotents(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self)) if self.table[i][i] == i)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self.elements == other.elements and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.elements, self.table))

    def __repr__(self) -> str:
        return f"FiniteSemigroup(n={len(self)})"


def _find_identity(table: tuple[tuple[int, ...], ...]) -> Optional[int]:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x == table[x][e] for x in range(n)):
            return e
    return None


def validate(
    elements: Iterable[str],
    table: Iterable[Iterable[int]],
    generators: Optional[Mapping[str, int]] = None,
) -> FiniteSemigroup:
    """Check a raw table and build a FiniteSemigroup.

    Associativity is verified by the full O(n^3) scan; the first failing
    triple (i,j,k) is reported. If generators are given, their closure must
    be the whole carrier.
    """
    elems = tuple(str(e) for e in elements)
    n = len(elems)
    if n == 0:
        raise SemigroupError("empty carrier")
    if len(set(elems)) != n:
        raise SemigroupError("duplicate element labels")
    tab = tuple(tuple(int(v) for v in row) for row in table)
    if len(tab) != n or any(len(row) != n for row in tab):
        raise SemigroupError(f"table must be {n}x{n}")
    for i in range(n):
        for j in range(n):
            if not 0 <= tab[i][j] < n:
                raise OutOfRangeError(f"table[{i}][{j}] = {tab[i][j]} not in 0..{n - 1}")
    for i in range(n):
        row_i = tab[i]
        for j in range(n):
            t_ij = row_i[j]
            row_ij = tab[t_ij]
            row_j = tab[j]
            for k in range(n):
                if row_ij[k] != row_i[row_j[k]]:
                    raise NonAssociativeError(i, j, k)
    gens = dict(generators) if generators is not None else None
    semi = FiniteSemigroup(elems, tab, gens, _find_identity(tab))
    if gens is not None:
        for name, idx in gens.items():
            if not 0 <= idx < n:
                raise OutOfRangeError(f"generator {name!r} -> {idx} out of range")
        if generated_subsemigroup(semi, gens.values()) != frozenset(range(n)):
            raise GeneratorsDoNotGenerateError("generators do not generate the semigroup")
    return semi


def generated_subsemigroup(S: FiniteSemigroup, subset: Iterable[int]) -> frozenset[int]:
    """Least subset of S closed under the table and containing `subset`."""
    closed = set(subset)
    if not closed:
        raise SemigroupError("subset must be nonempty")
    frontier = list(closed)
    while frontier:
        new = []
        for x in frontier:
            for y in list(closed):
                for z in (S.table[x][y], S.table[y][x]):
                    if z not in closed:
                        closed.add(z)
                        new.append(z)
        frontier = new
    return frozenset(closed)


def subsemigroup(S: FiniteSemigroup, indices: Iterable[int]) -> FiniteSemigroup:
    """Restrict S to a subset that must already be closed under the table."""
    keep = sorted(set(indices))
    pos = {x: i for i, x in enumerate(keep)}
    for x in keep:
        for y in keep:
            if S.table[x][y] not in pos:
                raise NotClosedError(f"subset not closed: {x}*{y} escapes")
    tab = tuple(tuple(pos[S.table[x][y]] for y in keep) for x in keep)
    return FiniteSemigroup(tuple(S.elements[x] for x in keep), tab, None, _find_identity(tab))


def _cycle_of(S: FiniteSemigroup, s: int) -> tuple[dict[int, int], int]:
    """Powers of s up to the first repeat.

    Returns (seen, rep) where seen maps s^e -> e for e = 1..L (all distinct)
    and rep = s^(L+1), the first repeated power.
    """
    seen: dict[int, int] = {}
    x, e = s, 1
    while x not in seen:
        seen[x] = e
        x = S.table[x][s]
        e += 1
    return seen, x


def cycle_index_period(S: FiniteSemigroup, s: int) -> tuple[int, int]:
    """Index (tail length) and period of the power sequence of s."""
    seen, rep = _cycle_of(S, s)
    tail = seen[rep]
    period = len(seen) + 1 - tail
    return tail, period


def omega_power(S: FiniteSemigroup, s: int) -> int:
    """The unique idempotent in the cyclic subsemigroup generated by s."""
    seen, rep = _cycle_of(S, s)
    tail = seen[rep]
    period = len(seen) + 1 - tail
    m = period * ((tail + period - 1) // period)
    for elem, exp in seen.items():
        if exp == m:
            return elem
    raise AssertionError("omega power not found")


def omega_minus_one(S: FiniteSemigroup, s: int) -> int:
    """Inverse of s*s^w in the maximal subgroup containing s^w."""
    e = omega_power(S, s)
    t = S.table[s][e]
    powers = [t]
    while powers[-1] != e:
        powers.append(S.table[powers[-1]][t])
    return powers[-2] if len(powers) >= 2 else e


def adjoin_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    """S^1: S itself when S is a monoid, else S with a fresh neutral element."""
    if S.identity is not None:
        return S
    return adjoin_new_identity(S)


def adjoin_new_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    """S^I: always adds a fresh neutral element, even if S has one."""
    n = len(S)
    label = "1"
    while label in S.elements:
        label += "'"
    tab = tuple(tuple(S.table[i]) + (i,) for i in range(n)) + (tuple(range(n + 1)),)
    return FiniteSemigroup(S.elements + (label,), tab, None, n)


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> FiniteSemigroup:
    pairs = [(i, j) for i in range(len(S)) for j in range(len(T))]
    pos = {p: k for k, p in enumerate(pairs)}
    tab = tuple(
        tuple(pos[(S.table[i][x], T.table[j][y])] for (x, y) in pairs) for (i, j) in pairs
    )
    labels = tuple(f"({S.elements[i]},{T.elements[j]})" for (i, j) in pairs)
    ident = None
    if S.identity is not None and T.identity is not None:
        ident = pos[(S.identity, T.identity)]
    return FiniteSemigroup(labels, tab, None, ident)


def evaluate_word(S: FiniteSemigroup, gen_map: Mapping[str, int], word) -> int:
    """Left-to-right product of the generator images of `word`.

    `word` is a string (one letter per character) or an iterable of letter
    strings.
    """
    letters = list(word) if not isinstance(word, str) else list(word)
    if not letters:
        raise SemigroupError("cannot evaluate the empty word")
    acc = None
    for a in letters:
        if a not in gen_map:
            raise UnknownLetterError(f"letter {a!r} has no image")
        img = gen_map[a]
        acc = img if acc is None else S.table[acc][img]
    return acc


# --- isomorphism search -----------------------------------------------------

def _wl_classes(S: FiniteSemigroup) -> list[int]:
    """Stable element partition refined by table interaction (1-dim WL style)."""
    n = len(S)
    sig = []
    for x in range(n):
        tail, period = cycle_index_period(S, x)
        sig.append((tail, period, S.is_idempotent(x)))
    ids = _compress(sig)
    while True:
        new_sig = []
        for x in range(n):
            inter = sorted(
                (ids[y], ids[S.table[x][y]], ids[S.table[y][x]]) for y in range(n)
            )
            new_sig.append((ids[x], tuple(inter)))
        new_ids = _compress(new_sig)
        if new_ids == ids:
            return ids
        ids = new_ids


def _compress(sig: list) -> list[int]:
    order = {}
    for s in sorted(set(sig), key=repr):
        order[s] = len(order)
    return [order[s] for s in sig]


def small_generating_set(S: FiniteSemigroup) -> list[int]:
    """A reasonably small generating set, deterministic for a given table."""
    n = len(S)
    products = {S.table[i][j] for i in range(n) for j in range(n)}
    gens = sorted(x for x in range(n) if x not in products)
    closed = set(generated_subsemigroup(S, gens)) if gens else set()
    for x in range(n):
        if x not in closed:
            gens.append(x)
            closed = set(generated_subsemigroup(S, gens))
    for g in list(gens):
        rest = [h for h in gens if h != g]
        if rest and generated_subsemigroup(S, rest) == frozenset(range(n)):
            gens = rest
    return gens


def _extend_iso(S: FiniteSemigroup, T: FiniteSemigroup, seed: dict[int, int]):
    phi = dict(seed)
    frontier = list(phi)
    while frontier:
        new = []
        for a in list(phi):
            for b in frontier:
                for x, y in ((a, b), (b, a)):
                    xy = S.table[x][y]
                    im = T.table[phi[x]][phi[y]]
                    if xy in phi:
                        if phi[xy] != im:
                            return None
                    else:
                        phi[xy] = im
                        new.append(xy)
        frontier = new
    if len(phi) != len(S) or len(set(phi.values())) != len(S):
        return None
    for a in range(len(S)):
        row = S.table[a]
        pa = phi[a]
        for b in range(len(S)):
            if phi[row[b]] != T.table[pa][phi[b]]:
                return None
    return tuple(phi[i] for i in range(len(S)))


def is_isomorphic(
    S: FiniteSemigroup, T: FiniteSemigroup, bound: int = 16
) -> Optional[tuple[int, ...]]:
    """A table-preserving bijection S -> T (as an index tuple), or None.

    Best-effort test utility: invariant pruning first, then backtracking on a
    generating set. Raises SizeMismatchError / BoundExceededError rather than
    guessing.
    """
    if len(S) != len(T):
        raise SizeMismatchError(f"|S|={len(S)} but |T|={len(T)}")
    if len(S) > bound:
        raise BoundExceededError(f"|S|={len(S)} exceeds bound {bound}")
    cs, ct = _wl_classes(S), _wl_classes(T)
    if sorted(cs) != sorted(ct):
        return None
    gens = small_generating_set(S)
    candidates = [[t for t in range(len(T)) if ct[t] == cs[g]] for g in gens]
    for choice in itertools.product(*candidates):
        if len(set(choice)) != len(choice):
            continue
        phi = _extend_iso(S, T, dict(zip(gens, choice)))
        if phi is not None:
            return phi
    return None


# --- stock semigroups -------------------------------------------------------

def from_function(values, op, labels=None) -> FiniteSemigroup:
    """Build a semigroup from abstract values and a binary operation on them."""
    vals = list(values)
    pos = {v: i for i, v in enumerate(vals)}
    tab = tuple(tuple(pos[op(x, y)] for y in vals) for x in vals)
    elems = tuple(labels) if labels is not None else tuple(str(v) for v in vals)
    return FiniteSemigroup(elems, tab, None, _find_identity(tab))


def trivial() -> FiniteSemigroup:
    return FiniteSemigroup(("e",), ((0,),), None, 0)


def u1() -> FiniteSemigroup:
    """The two-element semilattice {0,1} under min."""
    return from_function([0, 1], min)


def cyclic_group(n: int) -> FiniteSemigroup:
    if n < 1:
        raise SemigroupError("cyclic group order must be >= 1")
    return from_function(range(n), lambda a, b: (a + b) % n)


def left_zero(n: int) -> FiniteSemigroup:
    return from_function([f"l{i}" for i in range(n)], lambda a, b: a)


def right_zero(n: int) -> FiniteSemigroup:
    return from_function([f"r{i}" for i in range(n)], lambda a, b: b)


def rectangular_band(height: int, width: int) -> FiniteSemigroup:
    vals = [(i, j) for i in range(height) for j in range(width)]
    return from_function(vals, lambda p, q: (p[0], q[1]), [f"({i},{j})" for i, j in vals])


def null_semigroup(n: int = 2) -> FiniteSemigroup:
    """n elements a1..a_{n-1} and 0, with every product equal to 0."""
    labels = [f"a{i}" for i in range(1, n)] + ["0"]
    zero = n - 1
    tab = tuple(tuple(zero for _ in range(n)) for _ in range(n))
    return FiniteSemigroup(tuple(labels), tab, None, None)


def full_transformation_monoid(n: int, act_on_right: bool = False) -> FiniteSemigroup:
    """All self-maps of {0..n-1}; composition f*g = f o g, or g o f when
    act_on_right is set (maps written on the right)."""
    maps = list(itertools.product(range(n), repeat=n))
    if act_on_right:
        op = lambda f, g: tuple(g[f[x]] for x in range(n))
    else:
        op = lambda f, g: tuple(f[g[x]] for x in range(n))
    return from_function(maps, op, ["".join(map(str, m)) for m in maps])


def opposite(S: FiniteSemigroup) -> FiniteSemigroup:
    tab = tuple(tuple(S.table[j][i] for j in range(len(S))) for i in range(len(S)))
    return FiniteSemigroup(S.elements, tab, S.generators, S.identity)


# --- JSON wire format --------------------------------------------------------

def to_dict(S: FiniteSemigroup, order=None) -> dict:
    """Semigroup JSON object; `order` optionally adds stable-order pairs."""
    obj: dict = {"elements": list(S.elements), "table": [list(r) for r in S.table]}
    if S.generators:
        obj["generators"] = dict(S.generators)
    if S.identity is not None:
        obj["identity"] = S.identity
    if order is not None:
        obj["order"] = sorted([list(p) for p in order])
    return obj


def from_dict(obj: Mapping) -> FiniteSemigroup:
    if not isinstance(obj, Mapping) or "elements" not in obj or "table" not in obj:
        raise SemigroupError("semigroup JSON needs 'elements' and 'table'")
    S = validate(obj["elements"], obj["table"], obj.get("generators"))
    if "identity" in obj and obj["identity"] is not None and S.identity != obj["identity"]:
        raise SemigroupError(f"declared identity {obj['identity']} is not neutral")
    return S
