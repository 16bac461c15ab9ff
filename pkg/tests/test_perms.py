import math
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triblock.perms import (
    CapExceeded,
    GenSet,
    closure,
    compose,
    direct_product,
    from_cycles,
    identity,
    inverse,
    is_identity,
    reduce_generators,
)


class TestAlgebra:
    def test_identity_compose(self):
        p = from_cycles(4, [(0, 2, 3)])
        assert compose(identity(4), p) == p
        assert compose(p, identity(4)) == p

    def test_two_cycle_self_inverse(self):
        p = from_cycles(3, [(0, 1)])
        assert inverse(p) == p
        assert is_identity(compose(p, p))

    def test_three_cycle_squared(self):
        p = from_cycles(3, [(0, 1, 2)])
        assert compose(p, p) == from_cycles(3, [(0, 2, 1)])

    def test_compose_inverse_is_identity(self):
        p = from_cycles(6, [(0, 3), (1, 4, 5)])
        assert is_identity(compose(p, inverse(p)))

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            compose(identity(3), identity(4))

    @settings(max_examples=60, deadline=None)
    @given(st.permutations(list(range(6))), st.permutations(list(range(6))))
    def test_compose_is_application_order(self, a, b):
        a, b = tuple(a), tuple(b)
        c = compose(a, b)
        for x in range(6):
            assert c[x] == a[b[x]]


class TestDirectProduct:
    def test_disjoint_union(self):
        assert direct_product({3: 5}, {2: 8, 1: 9}) == {3: 5, 2: 8, 1: 9}

    def test_value_collision_is_none(self):
        assert direct_product({3: 5}, {2: 5}) is None

    def test_support_overlap_raises(self):
        with pytest.raises(ValueError):
            direct_product({3: 5}, {3: 6})

    def test_restriction_recovers_operands(self):
        a, b = {1: 4, 5: 2}, {3: 0}
        merged = direct_product(a, b)
        assert {k: merged[k] for k in a} == a
        assert {k: merged[k] for k in b} == b


class TestClosure:
    def test_empty_genset(self):
        assert closure(GenSet(n=3), cap=10) == {identity(3)}

    def test_cyclic_three(self):
        got = closure(GenSet(n=3, generators=(from_cycles(3, [(0, 1, 2)]),)), cap=10)
        assert len(got) == 3

    def test_cap_exceeded(self):
        gens = GenSet(n=3, generators=(from_cycles(3, [(0, 1)]), from_cycles(3, [(0, 1, 2)])))
        with pytest.raises(CapExceeded):
            closure(gens, cap=5)


class TestReduceGenerators:
    def test_identity_only(self):
        out = reduce_generators([identity(4)], 4)
        assert out.generators == ()

    def test_s3_from_two_generators(self):
        out = reduce_generators([from_cycles(3, [(0, 1)]), from_cycles(3, [(0, 1, 2)])], 3)
        assert len(out.generators) <= 2
        assert closure(out, cap=10) == set(permutations(range(3)))

    def test_duplicates_collapse(self):
        swap = from_cycles(3, [(0, 1)])
        out = reduce_generators([swap, swap], 3)
        assert len(out.generators) == 1
        assert len(closure(out, cap=10)) == 2

    def test_mixed_sizes_rejected(self):
        with pytest.raises(ValueError):
            reduce_generators([identity(3), identity(4)], 4)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
    def test_symmetric_group_bounds(self, n):
        gens = [from_cycles(n, [(0, 1)]), from_cycles(n, [tuple(range(n))])]
        out = reduce_generators(gens, n)
        assert len(out.generators) <= n - 1
        assert len(out.generators) <= math.log2(math.factorial(n))
        assert len(closure(out, cap=6000)) == math.factorial(n)

    def test_dihedral_group(self):
        rot = from_cycles(5, [(0, 1, 2, 3, 4)])
        flip = from_cycles(5, [(1, 4), (2, 3)])
        out = reduce_generators([rot, flip, compose(rot, flip)], 5)
        assert len(out.generators) <= 4
        assert len(closure(out, cap=100)) == 10

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(min_value=1, max_value=6).flatmap(
            lambda n: st.lists(
                st.permutations(list(range(n))), min_size=0, max_size=5
            ).map(lambda ps: (n, [tuple(p) for p in ps]))
        )
    )
    def test_reduction_preserves_generated_group(self, case):
        n, perms = case
        out = reduce_generators(perms, n)
        assert len(out.generators) <= max(0, n - 1)
        before = closure(GenSet(n=n, generators=tuple(set(perms))), cap=720)
        after = closure(out, cap=720)
        assert before == after
