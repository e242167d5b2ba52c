import itertools

import pytest

from eggbox import core, constructions


@pytest.fixture
def u1():
    return core.u1()


@pytest.fixture
def z2():
    return core.cyclic_group(2)


@pytest.fixture
def z3():
    return core.cyclic_group(3)


@pytest.fixture
def z6():
    return core.cyclic_group(6)


@pytest.fixture
def lz2():
    return core.left_zero(2)


@pytest.fixture
def rz2():
    return core.right_zero(2)


@pytest.fixture
def rb22():
    return core.rectangular_band(2, 2)


@pytest.fixture
def n2():
    return core.null_semigroup(2)


@pytest.fixture
def k2():
    return constructions.k_p(2)


@pytest.fixture
def k3():
    return constructions.k_p(3)


def s3_table():
    perms = list(itertools.permutations(range(3)))
    return core.from_function(perms, lambda f, g: tuple(f[g[i]] for i in range(3)))


def group_subsemigroups(S):
    """All subsemigroups of S that are groups (they live in maximal subgroups)."""
    from eggbox import green

    out = []
    for e in S.idempotents():
        H = green.maximal_subgroup(S, e)
        members = list(range(len(H)))
        for r in range(1, len(members) + 1):
            for subset in itertools.combinations(members, r):
                if H.identity not in subset:
                    continue
                if all(H.mul(x, y) in subset for x in subset for y in subset):
                    out.append(core.subsemigroup(H, subset))
    return out


def small_library():
    """Concrete semigroups exercised by cross-cutting property tests."""
    return {
        "trivial": core.trivial(),
        "U1": core.u1(),
        "Z2": core.cyclic_group(2),
        "Z3": core.cyclic_group(3),
        "Z4": core.cyclic_group(4),
        "Z6": core.cyclic_group(6),
        "LZ2": core.left_zero(2),
        "RZ2": core.right_zero(2),
        "RB22": core.rectangular_band(2, 2),
        "N2": core.null_semigroup(2),
        "N3": core.null_semigroup(3),
        "K2": constructions.k_p(2),
        "U1xU1": core.direct_product(core.u1(), core.u1()),
        "U1xZ2": core.direct_product(core.u1(), core.cyclic_group(2)),
        "S3": s3_table(),
    }
