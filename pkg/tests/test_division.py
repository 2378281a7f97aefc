import itertools
import random

import pytest

from involutive.division import (
    DivisionKind,
    axiom_check,
    cone_member,
    cumulated_multiples,
    full_mask,
    janet_table,
    separation,
    separation_table,
)
from involutive.monomial import Ordering, lcm
from involutive.sampling import random_instance

K = DivisionKind
X, Y = 0b01, 0b10
INDUCED = [K.IND_LEX, K.IND_DEGLEX, K.IND_DEGREVLEX]
SET_DEPENDENT = [K.THOMAS, K.JANET, K.DIV1] + INDUCED


def test_thomas_example():
    U = [(2, 1), (1, 3)]
    assert separation(K.THOMAS, (2, 1), U) == X
    assert separation(K.THOMAS, (1, 3), U) == Y


def test_pommaret_examples():
    assert separation(K.POMMARET, (0, 0, 0)) == 0b111
    # class of x1^2 x2 is x2: x2 and x3 multiplicative
    assert separation(K.POMMARET, (2, 1, 0)) == 0b110
    assert separation(K.POMMARET, (1, 0, 0)) == 0b111


def test_division2_examples():
    assert separation(K.DIV2, (2, 3, 3)) == 0b110
    assert separation(K.DIV2, (0, 0, 0)) == 0b111


def test_janet_example():
    U = [(2, 1), (1, 3), (0, 2)]
    assert [separation(K.JANET, u, U) for u in U] == [X | Y, Y, Y]
    assert separation_table(K.JANET, U) == [X | Y, Y, Y]


def test_division1_example():
    U = [(2, 1), (0, 2)]
    assert separation(K.DIV1, (2, 1), U) == X
    assert separation(K.DIV1, (0, 2), U) == Y


def test_induced_lex_example():
    U = [(2, 1), (0, 3)]
    assert separation(K.IND_LEX, (2, 1), U) == X
    assert separation(K.IND_LEX, (0, 3), U) == X | Y


def test_separation_requires_membership():
    with pytest.raises(ValueError):
        separation(K.JANET, (1, 1), [(2, 0)])
    # global divisions ignore the set
    assert separation(K.POMMARET, (1, 1), [(2, 0)]) == Y


def test_table_examples():
    assert separation_table(K.JANET, [(2, 0), (1, 1), (0, 1)]) == [X | Y, Y, Y]
    for kind in [K.THOMAS, K.JANET, K.DIV1] + INDUCED:
        assert separation_table(kind, [(3, 1, 2)]) == [0b111]
    assert separation_table(K.POMMARET, [(3, 1, 2)]) == [0b100]
    assert separation_table(K.DIV2, [(3, 1, 2)]) == [0b001]


def test_cumulated_multiples_example():
    U = [(2, 1), (1, 3), (0, 2)]
    assert cumulated_multiples(U, Ordering.LEX) == [(2, 3), (1, 3), (0, 2)]
    assert cumulated_multiples([(1, 4)], Ordering.LEX) == [(1, 4)]
    with pytest.raises(ValueError):
        cumulated_multiples(list(reversed(U)), Ordering.LEX)


def test_cone_member_examples():
    assert cone_member((2, 1), (2, 0), X | Y)
    assert not cone_member((1, 1), (0, 1), Y)
    for sep in range(4):
        assert cone_member((3, 2), (3, 2), sep)
    with pytest.raises(ValueError):
        cone_member((1, 1), (1,), 1)


def _random_sets(seed, count, max_vars=5, max_size=12, max_deg=6):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_instance(rng, max_vars, max_size, max_deg)


@pytest.mark.parametrize("kind", list(K))
def test_table_equals_elementwise_definition(kind):
    for n, U in _random_sets(11, 150):
        assert separation_table(kind, U) == [separation(kind, u, U) for u in U]


def test_janet_fast_path_on_larger_sets():
    for n, U in _random_sets(12, 300, max_size=15, max_deg=7):
        fast = janet_table(U)
        assert all(fast[u] == separation(K.JANET, u, U) for u in U)


def test_partition_is_complete():
    for n, U in _random_sets(13, 50):
        for kind in K:
            for s in separation_table(kind, U):
                assert 0 <= s <= full_mask(n)


def test_thomas_is_max_degree_rule():
    for n, U in _random_sets(14, 100):
        for u, s in zip(U, separation_table(K.THOMAS, U)):
            for i in range(n):
                assert bool(s >> i & 1) == (u[i] == max(v[i] for v in U))


@pytest.mark.parametrize("kind", [K.POMMARET, K.DIV2])
def test_global_divisions_ignore_the_set(kind):
    rng = random.Random(15)
    for n, U in _random_sets(15, 100):
        V = rng.sample(U, rng.randint(1, len(U)))
        for u in V:
            assert separation(kind, u, U) == separation(kind, u, V)


@pytest.mark.parametrize("kind", SET_DEPENDENT)
def test_shrinking_the_set_never_removes_multiplicative_variables(kind):
    rng = random.Random(16)
    for n, U in _random_sets(16, 100):
        V = rng.sample(U, rng.randint(1, len(U)))
        for u, s in zip(V, separation_table(kind, V)):
            assert separation(kind, u, U) & ~s == 0


def _brute_cone_meet(u, su, v, sv, bound):
    n = len(u)
    for w in itertools.product(range(bound + 1), repeat=n):
        if sum(w) <= bound and cone_member(w, u, su) and cone_member(w, v, sv):
            return True
    return False


def test_lcm_decides_cone_intersection():
    rng = random.Random(17)
    for _ in range(400):
        n = rng.randint(1, 3)
        u = tuple(rng.randint(0, 2) for _ in range(n))
        v = tuple(rng.randint(0, 2) for _ in range(n))
        su, sv = rng.randrange(1 << n), rng.randrange(1 << n)
        w = lcm(u, v)
        by_lcm = cone_member(w, u, su) and cone_member(w, v, sv)
        assert by_lcm == _brute_cone_meet(u, su, v, sv, sum(w) + 2)


def test_axioms_hold_for_every_division():
    for kind in K:
        for n, U in _random_sets(18, 60):
            rep = axiom_check(kind, U, subset_samples=8, rng=random.Random(0))
            assert rep.passed, (kind, U, rep)


def test_pommaret_condition_d_is_vacuous():
    rep = axiom_check(K.POMMARET, [(2, 0), (1, 1), (0, 3)])
    assert rep.passed and rep.checked["d"] == "vacuous"
    assert rep.to_dict()["pass"] is True


def test_exhaustive_subset_mode():
    rep = axiom_check(K.JANET, [(2, 1), (1, 3), (0, 2), (3, 0)], exhaustive=True)
    assert rep.passed
    with pytest.raises(ValueError):
        axiom_check(K.JANET, [(i, 11 - i) for i in range(11)], exhaustive=True)


def test_broken_strategy_is_caught():
    def everything(V):
        return [full_mask(len(V[0]))] * len(V)

    rep = axiom_check(everything, [(1, 0), (0, 1)])
    assert not rep.passed
    assert rep.failed_condition == "b"
    assert set(rep.witness) == {(1, 0), (0, 1)}
    assert rep.to_dict()["witness"] is not None


def test_division_names():
    assert [k.value for k in K] == ["thomas", "janet", "pommaret", "div1", "div2",
                                    "ind-lex", "ind-deglex", "ind-degrevlex"]
    assert K.parse("Janet") is K.JANET
    with pytest.raises(ValueError):
        K.parse("riquier")
    assert K.induced(Ordering.DEGLEX) is K.IND_DEGLEX
    assert K.JANET.default_order is Ordering.LEX
    assert K.IND_DEGLEX.default_order is Ordering.DEGLEX
    assert K.THOMAS.default_order is Ordering.DEGREVLEX
