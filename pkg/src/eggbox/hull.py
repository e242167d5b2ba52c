"""Translations, bitranslations, the translational hull, and kernel actions.

A left translation satisfies lam(st) = lam(s)t, a right translation
(st)rho = s(t)rho, and a linked pair additionally s lam(t) = (s)rho t.
Composition in the hull is (lam1 o lam2, rho2 o rho1), which makes
s -> (lam_s, rho_s) a homomorphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    FiniteSemigroup,
    BoundExceededError,
    SemigroupError,
    omega_power,
    small_generating_set,
    _find_identity,
)
from .green import (
    ReesMatrixSemigroup,
    NotCompletelySimpleError,
    is_completely_simple,
    kernel,
)
from .constructions import realize


@dataclass(frozen=True, order=True)
class Bitranslation:
    lam: tuple[int, ...]
    rho: tuple[int, ...]


def inner_bitranslation(S: FiniteSemigroup, s: int) -> Bitranslation:
    n = len(S)
    return Bitranslation(
        tuple(S.table[s][u] for u in range(n)),
        tuple(S.table[u][s] for u in range(n)),
    )


def _factor_with_prefix(S: FiniteSemigroup, gens: list[int]) -> dict[int, tuple[int, int]]:
    """For each non-generator s, some (g, w) with s = g*w and g a generator."""
    n = len(S)
    out = {}
    gen_set = set(gens)
    for s in range(n):
        if s in gen_set:
            continue
        for g in gens:
            found = False
            for w in range(n):
                if S.table[g][w] == s:
                    out[s] = (g, w)
                    found = True
                    break
            if found:
                break
        else:
            raise SemigroupError(f"element {s} not reachable with a generator prefix")
    return out


def left_translations(S: FiniteSemigroup) -> list[tuple[int, ...]]:
    """All maps lam with lam(st) = lam(s)t.

    A left translation is determined by its values on a generating set,
    since lam(g*w) = lam(g)*w; candidates are enumerated on generators and
    verified against the full law.
    """
    n = len(S)
    gens = small_generating_set(S)
    fact = _factor_with_prefix(S, gens)
    found = []
    for assign in itertools.product(range(n), repeat=len(gens)):
        lam = [0] * n
        for g, v in zip(gens, assign):
            lam[g] = v
        for s, (g, w) in fact.items():
            lam[s] = S.table[lam[g]][w]
        ok = True
        for s in range(n):
            row = S.table[s]
            ls = lam[s]
            for t in range(n):
                if lam[row[t]] != S.table[ls][t]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(tuple(lam))
    return found


def right_translations(S: FiniteSemigroup) -> list[tuple[int, ...]]:
    n = len(S)
    gens = small_generating_set(S)
    gen_set = set(gens)
    fact = {}
    for s in range(n):
        if s in gen_set:
            continue
        done = False
        for g in gens:
            for w in range(n):
                if S.table[w][g] == s:
                    fact[s] = (w, g)
                    done = True
                    break
            if done:
                break
        else:
            raise SemigroupError(f"element {s} not reachable with a generator suffix")
    found = []
    for assign in itertools.product(range(n), repeat=len(gens)):
        rho = [0] * n
        for g, v in zip(gens, assign):
            rho[g] = v
        for s, (w, g) in fact.items():
            rho[s] = S.table[w][rho[g]]
        ok = True
        for s in range(n):
            for t in range(n):
                if rho[S.table[s][t]] != S.table[s][rho[t]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(tuple(rho))
    return found


def _linked(S: FiniteSemigroup, lam: tuple[int, ...], rho: tuple[int, ...]) -> bool:
    n = len(S)
    for s in range(n):
        row = S.table[s]
        rs = rho[s]
        for t in range(n):
            if row[lam[t]] != S.table[rs][t]:
                return False
    return True


def enumerate_hull(S, bound: int = 8) -> frozenset[Bitranslation]:
    """All bitranslations of S, by brute force over translation candidates.

    A ReesMatrixSemigroup argument is routed to the parametrized
    enumeration, which has no size bound.
    """
    if isinstance(S, ReesMatrixSemigroup):
        return enumerate_hull_rees(S)
    if len(S) > bound:
        raise BoundExceededError(f"|S|={len(S)} exceeds brute-force bound {bound}")
    lams = left_translations(S)
    rhos = right_translations(S)
    return frozenset(
        Bitranslation(lam, rho) for lam in lams for rho in rhos if _linked(S, lam, rho)
    )


def enumerate_hull_rees(rm: ReesMatrixSemigroup) -> frozenset[Bitranslation]:
    """Bitranslations of a Rees matrix semigroup via the parametrized form.

    Left translations are (a,g,b) -> (phi(a), mu(a)g, b) and right
    translations (a,g,b) -> (a, g nu(b), psi(b)); a pair is linked exactly
    when nu(b) P(psi(b), a) = P(b, phi(a)) mu(a) for all a, b.
    """
    A, B, G, P = rm.a_size, rm.b_size, rm.group, rm.sandwich
    ng = len(G)
    S = realize(rm)
    n = len(S)

    def idx(a: int, g: int, b: int) -> int:
        return (a * ng + g) * B + b

    lefts = []
    for phi in itertools.product(range(A), repeat=A):
        for mu in itertools.product(range(ng), repeat=A):
            lam = [0] * n
            for a in range(A):
                for g in range(ng):
                    for b in range(B):
                        lam[idx(a, g, b)] = idx(phi[a], G.table[mu[a]][g], b)
            lefts.append((phi, mu, tuple(lam)))
    rights = []
    for psi in itertools.product(range(B), repeat=B):
        for nu in itertools.product(range(ng), repeat=B):
            rho = [0] * n
            for a in range(A):
                for g in range(ng):
                    for b in range(B):
                        rho[idx(a, g, b)] = idx(a, G.table[g][nu[b]], psi[b])
            rights.append((psi, nu, tuple(rho)))

    out = set()
    for phi, mu, lam in lefts:
        for psi, nu, rho in rights:
            if all(
                G.table[nu[b]][P[psi[b]][a]] == G.table[P[b][phi[a]]][mu[a]]
                for a in range(A)
                for b in range(B)
            ):
                out.add(Bitranslation(lam, rho))
    return frozenset(out)


def compose(x: Bitranslation, y: Bitranslation) -> Bitranslation:
    n = len(x.lam)
    return Bitranslation(
        tuple(x.lam[y.lam[i]] for i in range(n)),
        tuple(y.rho[x.rho[i]] for i in range(n)),
    )


def hull_monoid(hull) -> tuple[FiniteSemigroup, list[Bitranslation]]:
    """The hull as an abstract monoid under pair composition.

    Returns the table (elements sorted for determinism) together with the
    ordering used. Raises if the given set is not closed.
    """
    items = sorted(hull)
    pos = {bt: i for i, bt in enumerate(items)}
    tab = []
    for x in items:
        row = []
        for y in items:
            z = compose(x, y)
            if z not in pos:
                raise SemigroupError("set of bitranslations is not closed under composition")
            row.append(pos[z])
        tab.append(tuple(row))
    labels = tuple(f"b{i}" for i in range(len(items)))
    return FiniteSemigroup(labels, tuple(tab), None, _find_identity(tuple(tab))), items


@dataclass(frozen=True)
class KernelRepresentation:
    """Left and right action of every element on the minimum ideal."""

    kernel: tuple[int, ...]
    lambda_of: tuple[tuple[int, ...], ...]  # element -> self-map of kernel positions
    rho_of: tuple[tuple[int, ...], ...]


def kernel_representation(S: FiniteSemigroup) -> KernelRepresentation:
    ker = tuple(sorted(kernel(S)))
    pos = {k: i for i, k in enumerate(ker)}
    n = len(S)
    lam = tuple(tuple(pos[S.table[s][k]] for k in ker) for s in range(n))
    rho = tuple(tuple(pos[S.table[k][s]] for k in ker) for s in range(n))
    for s in range(n):  # homomorphism property, cheap at desk scale
        for t in range(n):
            st = S.table[s][t]
            if any(lam[st][i] != lam[s][lam[t][i]] for i in range(len(ker))):
                raise AssertionError("kernel representation is not a homomorphism")
            if any(rho[st][i] != rho[t][rho[s][i]] for i in range(len(ker))):
                raise AssertionError("kernel representation is not a homomorphism")
    return KernelRepresentation(ker, lam, rho)


def classify(S: FiniteSemigroup) -> dict:
    """LM / RM / GGM / WGGM flags of the action of S on its kernel."""
    rep = kernel_representation(S)
    n = len(S)
    lm = len(set(rep.lambda_of)) == n
    rm = len(set(rep.rho_of)) == n
    ker = set(rep.kernel)
    wggm = True
    for u in range(n):
        for v in range(u + 1, n):
            apart = rep.lambda_of[u] != rep.lambda_of[v] and rep.rho_of[u] != rep.rho_of[v]
            if not (apart or (u in ker and v in ker)):
                wggm = False
                break
        if not wggm:
            break
    return {"lm": lm, "rm": rm, "ggm": lm and rm, "wggm": wggm}


def reductivity(S: FiniteSemigroup) -> dict:
    """Injectivity of the canonical maps into translations of S itself."""
    n = len(S)
    lams = [tuple(S.table[s][u] for u in range(n)) for s in range(n)]
    rhos = [tuple(S.table[u][s] for u in range(n)) for s in range(n)]
    right_red = len(set(lams)) == n
    left_red = len(set(rhos)) == n
    weak = len(set(zip(lams, rhos))) == n
    return {
        "right_reductive": right_red,
        "left_reductive": left_red,
        "weakly_reductive": weak,
    }


def torsion_checks(S: FiniteSemigroup) -> dict:
    """Torsion predicates of a completely simple semigroup.

    has_torsion: S is not a rectangular group, i.e. fails x y^w x^w = x.
    full_torsion: at least two R- and two L-classes, and ef idempotent
    forces ef in {e, f}.
    plenty_left: for distinct R-equivalent idempotents e, f there is an
    idempotent g in the L-class of e with fg != e; plenty_right is dual.
    """
    if not is_completely_simple(S):
        raise NotCompletelySimpleError("torsion predicates need a completely simple semigroup")
    n = len(S)
    idem = S.idempotents()
    omega = [omega_power(S, x) for x in range(n)]

    has_torsion = False
    for x in range(n):
        if has_torsion:
            break
        row = S.table[x]
        xw = omega[x]
        for y in range(n):
            if S.table[row[omega[y]]][xw] != x:
                has_torsion = True
                break

    # for idempotents, e R f iff ef = f and fe = e (L dual); in a completely
    # simple semigroup every element is R- and L-equivalent to its omega
    # power, so class counts over idempotents are class counts over S
    def r_eq(e, f):
        return S.table[e][f] == f and S.table[f][e] == e

    def l_eq(e, f):
        return S.table[e][f] == e and S.table[f][e] == f

    n_r = sum(1 for i, e in enumerate(idem) if not any(r_eq(e, f) for f in idem[:i]))
    n_l = sum(1 for i, e in enumerate(idem) if not any(l_eq(e, f) for f in idem[:i]))

    full = n_r >= 2 and n_l >= 2
    if full:
        for e in idem:
            for f in idem:
                ef = S.table[e][f]
                if S.is_idempotent(ef) and ef not in (e, f):
                    full = False
                    break
            if not full:
                break

    plenty_left = True
    for e in idem:
        for f in idem:
            if e == f or not r_eq(e, f):
                continue
            if not any(S.table[f][g] != e for g in idem if l_eq(g, e)):
                plenty_left = False
                break
        if not plenty_left:
            break

    plenty_right = True
    for e in idem:
        for f in idem:
            if e == f or not l_eq(e, f):
                continue
            if not any(S.table[g][f] != e for g in idem if r_eq(g, e)):
                plenty_right = False
                break
        if not plenty_right:
            break

    return {
        "has_torsion": has_torsion,
        "full_torsion": full,
        "plenty_left": plenty_left,
        "plenty_right": plenty_right,
    }
