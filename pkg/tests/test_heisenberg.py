"""The mod-n Heisenberg group: law, closed forms, embedding problems."""

import itertools

import pytest

from abelcentral import heisenberg
from abelcentral.errors import DomainError, ModulusError
from abelcentral.finfield import KummerCharacter, make_field
from abelcentral.heisenberg import (
    EmbeddingProblem,
    HeisElem,
    commutator_sum,
    enumerate_homs_check,
    heis_comm_pow,
    heis_mul,
    identity,
    order_of,
    pointwise_embedding_check,
    solve_embedding_cyclic,
    to_table_group,
)


class TestGroupLaw:
    def test_displayed_law(self):
        assert heis_mul(HeisElem(3, 1, 0, 0), HeisElem(3, 0, 1, 0)) == HeisElem(3, 1, 1, 1)
        assert heis_mul(HeisElem(3, 0, 1, 0), HeisElem(3, 1, 0, 0)) == HeisElem(3, 1, 1, 0)

    def test_identity_and_inverse(self):
        for n in (2, 3, 4, 5):
            e = identity(n)
            for a, b, c in itertools.product(range(n), repeat=3):
                u = HeisElem(n, a, b, c)
                assert heis_mul(u, e) == u
                assert heis_mul(e, u) == u
                assert heis_mul(u, u.inv()).is_identity()

    def test_associativity_exhaustive_small(self):
        for n in (2, 3):
            elems = [HeisElem(n, *t) for t in itertools.product(range(n), repeat=3)]
            for u in elems:
                for v in elems:
                    uv = heis_mul(u, v)
                    for w in elems:
                        assert heis_mul(uv, w) == heis_mul(u, heis_mul(v, w))

    def test_modulus_mismatch(self):
        with pytest.raises(ModulusError):
            heis_mul(HeisElem(2, 0, 0, 0), HeisElem(3, 0, 0, 0))


class TestClosedForms:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_all_pairs(self, n):
        # heis_comm_pow cross-checks against the literal law internally and
        # raises on any disagreement; this exercises every pair.
        for t1 in itertools.product(range(n), repeat=3):
            for t2 in itertools.product(range(n), repeat=3):
                heis_comm_pow(HeisElem(n, *t1), HeisElem(n, *t2))

    def test_known_values(self):
        assert heis_comm_pow(HeisElem(3, 1, 0, 0), HeisElem(3, 0, 1, 0)) == (1, 0)
        assert heis_comm_pow(HeisElem(2, 1, 1, 0), HeisElem(2, 0, 0, 0))[1] == 1
        assert heis_comm_pow(HeisElem(3, 1, 1, 0), HeisElem(3, 0, 0, 0))[1] == 0

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_exponent_divides_n_squared(self, n):
        assert heisenberg.exponent_divides_n2(n)

    def test_order_four_element(self):
        assert order_of(HeisElem(2, 1, 1, 0)) == 4


class TestTableExport:
    @pytest.mark.parametrize("n", [2, 3])
    def test_table_matches_law(self, n):
        g = to_table_group(n)
        assert g.order == n ** 3
        elems = [HeisElem(n, *t) for t in itertools.product(range(n), repeat=3)]
        for i, u in enumerate(elems):
            for j, v in enumerate(elems):
                w = heis_mul(u, v)
                assert g.table[i, j] == (w.a * n + w.b) * n + w.c

    def test_exponent_three_for_n3(self):
        assert to_table_group(3).exponent() == 3

    def test_labels(self):
        g = to_table_group(2)
        assert g.labels[0] == "h(0,0;0)"
        assert g.labels[(1 * 2 + 1) * 2 + 0] == "h(1,1;0)"


class TestEmbeddingProblems:
    def test_nonzero_required(self):
        k = make_field(7, n=3)
        with pytest.raises(DomainError):
            EmbeddingProblem(k, 0, 1)

    def test_trivial_characters(self):
        k = make_field(7, n=3)
        sols = solve_embedding_cyclic(EmbeddingProblem(k, 1, 1))
        assert [s for s in sols if s.a == 0 and s.b == 0] == sols

    def test_generator_solution(self):
        k = make_field(7, n=3)
        sols = solve_embedding_cyclic(EmbeddingProblem(k, 3, 1))
        assert all(s.a == 1 and s.b == 0 for s in sols)
        assert order_of(sols[0]) == 3

    def test_all_central_coordinates(self):
        k = make_field(7, n=3)
        sols = solve_embedding_cyclic(EmbeddingProblem(k, 3, 3))
        assert sorted(s.c for s in sols) == [0, 1, 2]


class TestHomEnumeration:
    def test_empty_family(self):
        k = make_field(13, n=3)
        assert enumerate_homs_check([], k)

    def test_single_diagonal_pair(self):
        k = make_field(13, n=3)
        s = KummerCharacter(k, 3, 1)
        assert enumerate_homs_check([(s, s)], k)

    def test_agrees_with_pointwise_check(self):
        k = make_field(13, n=3)
        chars = [KummerCharacter(k, 3, c) for c in range(3)]
        for s in chars:
            for t in chars:
                fam = [(s, t)]
                flag = enumerate_homs_check(fam, k)
                ptw, _ = pointwise_embedding_check(fam, k)
                assert flag == ptw

    def test_commutator_sum_central_only(self):
        k = make_field(17, n=4)
        s = KummerCharacter(k, 4, 1)
        t = KummerCharacter(k, 4, 3)
        img = HeisElem(4, 1, 2, 3)
        # Images of powers of one generator always commute.
        assert commutator_sum([(s, t), (t, s)], img) == 0
