"""Green's relations, kernels, Rees coordinates, and structural predicates.

On finite semigroups D = J, so only R, L, J, H are computed. Class ids are
assigned in order of least member, which keeps everything deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import (
    FiniteSemigroup,
    SemigroupError,
    adjoin_identity,
    omega_power,
    subsemigroup,
    from_dict as semigroup_from_dict,
    to_dict as semigroup_to_dict,
)


class NotCompletelySimpleError(SemigroupError):
    pass


class NotIdempotentError(SemigroupError):
    pass


@dataclass(frozen=True)
class GreenStructure:
    r_class: tuple[int, ...]
    l_class: tuple[int, ...]
    j_class: tuple[int, ...]
    h_class: tuple[int, ...]
    j_order: frozenset[tuple[int, int]]  # (lower, higher) pairs of J-class ids
    kernel_class: int
    regular: tuple[bool, ...]  # indexed by J-class id

    def classes(self, kind: str) -> list[list[int]]:
        assign = {"R": self.r_class, "L": self.l_class, "J": self.j_class, "H": self.h_class}[kind]
        out: dict[int, list[int]] = {}
        for x, c in enumerate(assign):
            out.setdefault(c, []).append(x)
        return [out[c] for c in sorted(out)]


@dataclass(frozen=True)
class ReesMatrixSemigroup:
    """Coordinatized completely simple semigroup M(A, G, B; P).

    sandwich is a b_size x a_size matrix of group element indices; when
    produced by rees_coordinatize, the first row and column hold the group
    identity.
    """

    a_size: int
    b_size: int
    group: FiniteSemigroup
    sandwich: tuple[tuple[int, ...], ...]


def _ideals(S: FiniteSemigroup):
    n = len(S)
    rng = range(n)
    right = [frozenset({s} | {S.table[s][x] for x in rng}) for s in rng]
    left = [frozenset({s} | {S.table[x][s] for x in rng}) for s in rng]
    two = []
    for s in rng:
        ideal = {s}
        ideal.update(S.table[s][x] for x in rng)
        ideal.update(S.table[x][s] for x in rng)
        for x in rng:
            xs = S.table[x][s]
            ideal.update(S.table[xs][y] for y in rng)
        two.append(frozenset(ideal))
    return right, left, two


def _classify_by(ideals) -> tuple[int, ...]:
    ids: dict[frozenset, int] = {}
    out = []
    for ideal in ideals:
        if ideal not in ids:
            ids[ideal] = len(ids)
        out.append(ids[ideal])
    return tuple(out)


def green_structure(S: FiniteSemigroup) -> GreenStructure:
    n = len(S)
    right, left, two = _ideals(S)
    r = _classify_by(right)
    l = _classify_by(left)
    j = _classify_by(two)
    h = _classify_by(list(zip(r, l)))

    n_j = max(j) + 1
    rep = [None] * n_j
    for x in range(n):
        if rep[j[x]] is None:
            rep[j[x]] = x
    order = frozenset(
        (a, b) for a in range(n_j) for b in range(n_j) if two[rep[a]] <= two[rep[b]]
    )
    minima = [c for c in range(n_j) if all((c, d) in order for d in range(n_j))]
    assert len(minima) == 1, "finite semigroup must have a unique minimum ideal"
    regular = [False] * n_j
    for e in S.idempotents():
        regular[j[e]] = True
    return GreenStructure(r, l, j, h, order, minima[0], tuple(regular))


def kernel(S: FiniteSemigroup) -> frozenset[int]:
    """The minimum ideal: elements of the least J-class."""
    gs = green_structure(S)
    return frozenset(x for x in range(len(S)) if gs.j_class[x] == gs.kernel_class)


def is_completely_simple(S: FiniteSemigroup) -> bool:
    """Does S satisfy x(yx)^w = x for all assignments?"""
    n = len(S)
    for x in range(n):
        for y in range(n):
            e = omega_power(S, S.table[y][x])
            if S.table[x][e] != x:
                return False
    return True


def maximal_subgroup(S: FiniteSemigroup, e: int) -> FiniteSemigroup:
    """The H-class of an idempotent e, as a group with identity e."""
    if not S.is_idempotent(e):
        raise NotIdempotentError(f"element {e} is not idempotent")
    gs = green_structure(S)
    members = [x for x in range(len(S)) if gs.h_class[x] == gs.h_class[e]]
    return subsemigroup(S, members)


def _group_inverse(G: FiniteSemigroup, g: int) -> int:
    e = G.identity
    for x in range(len(G)):
        if G.table[g][x] == e and G.table[x][g] == e:
            return x
    raise SemigroupError(f"element {g} has no inverse")


def rees_coordinatize(S: FiniteSemigroup) -> tuple[ReesMatrixSemigroup, tuple[tuple[int, int, int], ...]]:
    """Rees coordinates of a completely simple semigroup.

    Picks the idempotent e of least index; A and B list the R- and L-classes
    with e's classes first; G is the H-class of e. The sandwich matrix is
    normalized so that the row and column through e hold the identity.
    Returns the coordinate system and, for each element of S, its (a, g, b)
    triple.
    """
    if not is_completely_simple(S):
        raise NotCompletelySimpleError("semigroup is not completely simple")
    gs = green_structure(S)
    n = len(S)
    e = min(S.idempotents())

    def ordered_classes(assign, cls_e):
        seen = [cls_e]
        for x in range(n):
            if assign[x] not in seen:
                seen.append(assign[x])
        return seen

    a_classes = ordered_classes(gs.r_class, gs.r_class[e])
    b_classes = ordered_classes(gs.l_class, gs.l_class[e])
    a_of = {c: i for i, c in enumerate(a_classes)}
    b_of = {c: i for i, c in enumerate(b_classes)}

    h_members = sorted(x for x in range(n) if gs.h_class[x] == gs.h_class[e])
    G = subsemigroup(S, h_members)
    g_of = {x: i for i, x in enumerate(h_members)}

    def pick(r_cls, l_cls):
        return min(
            x for x in range(n) if gs.r_class[x] == r_cls and gs.l_class[x] == l_cls
        )

    # r_a in R_a meet L_e, normalized so that e*r_a = e; q_b dual.
    r_reps = []
    for cls in a_classes:
        r = pick(cls, gs.l_class[e])
        h = S.table[e][r]  # lies in H_e
        hinv = h_members[_group_inverse(G, g_of[h])]
        r_reps.append(S.table[r][hinv])
    q_reps = []
    for cls in b_classes:
        q = pick(gs.r_class[e], cls)
        h = S.table[q][e]
        hinv = h_members[_group_inverse(G, g_of[h])]
        q_reps.append(S.table[hinv][q])

    sandwich = tuple(
        tuple(g_of[S.table[q][r]] for r in r_reps) for q in q_reps
    )
    coords = []
    for s in range(n):
        a = a_of[gs.r_class[s]]
        b = b_of[gs.l_class[s]]
        g_found = None
        for g in range(len(G)):
            if S.table[S.table[r_reps[a]][h_members[g]]][q_reps[b]] == s:
                g_found = g
                break
        assert g_found is not None, "Rees coordinates must cover every element"
        coords.append((a, g_found, b))
    rm = ReesMatrixSemigroup(len(a_classes), len(b_classes), G, sandwich)
    return rm, tuple(coords)


def is_equidivisible(S: FiniteSemigroup):
    """Exhaustive check of equidivisibility; returns (bool, counterexample).

    The counterexample, when present, is a quadruple (s, t, u, v) of indices
    with s*t = u*v but no w in S^1 completing either s*w = u, w*v = t or
    u*w = s, v = w*t.
    """
    S1 = adjoin_identity(S)
    n = len(S)
    for s in range(n):
        for t in range(n):
            st = S.table[s][t]
            for u in range(n):
                for v in range(n):
                    if S.table[u][v] != st:
                        continue
                    ok = False
                    for w in range(len(S1)):
                        if S1.table[s][w] == u and S1.table[w][v] == t:
                            ok = True
                            break
                        if S1.table[u][w] == s and S1.table[w][t] == v:
                            ok = True
                            break
                    if not ok:
                        return False, (s, t, u, v)
    return True, None


def letter_cancelative(S: FiniteSemigroup, gen_map: Mapping[str, int]) -> dict:
    """Right/left letter cancellativity over the images of gen_map.

    Right: for every generator image a, sa = ta implies s = t; left is dual.
    Witnesses are (letter, s, t) triples. The images must generate S.
    """
    from .core import GeneratorsDoNotGenerateError, generated_subsemigroup

    if generated_subsemigroup(S, gen_map.values()) != frozenset(range(len(S))):
        raise GeneratorsDoNotGenerateError("letter images must generate the semigroup")
    out = {"right": True, "left": True, "right_witness": None, "left_witness": None}
    n = len(S)
    for letter, a in gen_map.items():
        for s in range(n):
            for t in range(s + 1, n):
                if out["right"] and S.table[s][a] == S.table[t][a]:
                    out["right"] = False
                    out["right_witness"] = (letter, s, t)
                if out["left"] and S.table[a][s] == S.table[a][t]:
                    out["left"] = False
                    out["left_witness"] = (letter, s, t)
    return out


# --- Rees JSON ---------------------------------------------------------------

def rees_to_dict(rm: ReesMatrixSemigroup) -> dict:
    return {
        "a": rm.a_size,
        "b": rm.b_size,
        "group": semigroup_to_dict(rm.group),
        "sandwich": [list(row) for row in rm.sandwich],
    }


def rees_from_dict(obj: Mapping) -> ReesMatrixSemigroup:
    for key in ("a", "b", "group", "sandwich"):
        if key not in obj:
            raise SemigroupError(f"Rees JSON needs {key!r}")
    group = semigroup_from_dict(obj["group"])
    sandwich = tuple(tuple(int(v) for v in row) for row in obj["sandwich"])
    return ReesMatrixSemigroup(int(obj["a"]), int(obj["b"]), group, sandwich)
