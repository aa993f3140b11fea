"""Finite field arithmetic, discrete logs, characters, and embeddings."""

import pytest

from abelcentral.errors import DomainError, HypothesisError
from abelcentral.finfield import (
    KummerCharacter,
    char_eval,
    characters,
    embed_field,
    is_irreducible,
    make_field,
    omega,
    restrict_character,
)


class TestIrreducibility:
    @pytest.mark.parametrize("poly,p,expected", [
        ((1, 1), 2, True),        # x + 1
        ((1, 1, 1), 2, True),     # x^2 + x + 1
        ((1, 0, 1), 2, False),    # x^2 + 1 = (x+1)^2 over F_2
        ((2, 0, 1), 5, True),     # x^2 + 2 over F_5
        ((1, 0, 1), 7, True),     # x^2 + 1 over F_7
        ((6, 0, 1), 7, False),    # x^2 - 1
    ])
    def test_known(self, poly, p, expected):
        assert is_irreducible(poly, p) == expected


class TestPrimeField:
    def test_generator_and_dlogs(self):
        k = make_field(7, n=3)
        assert k.generator == 3
        assert k.dlog(3) == 1
        assert k.dlog(1) == 0
        assert k.dlog(6) == 3

    def test_field_axioms_exhaustive(self):
        k = make_field(11, n=2)
        for a in range(11):
            for b in range(11):
                assert k.add(a, b) == (a + b) % 11
                assert k.mul(a, b) == (a * b) % 11
        for a in range(1, 11):
            assert k.mul(a, k.inv(a)) == 1

    def test_mu_n_hypothesis(self):
        with pytest.raises(HypothesisError):
            make_field(7, n=4)

    def test_dlog_of_zero(self):
        k = make_field(5, n=2)
        with pytest.raises(DomainError):
            k.dlog(0)


class TestExtensionField:
    def test_canonical_poly(self):
        k = make_field(5, k=2, n=2)
        assert k.poly == (2, 0, 1)

    def test_dlog_homomorphism(self):
        k = make_field(5, k=2, n=2)
        q = k.q
        for a in k.units():
            for b in k.units():
                assert (k.dlog(a) + k.dlog(b)) % (q - 1) == k.dlog(k.mul(a, b))

    def test_exp_dlog_roundtrip(self):
        k = make_field(3, k=3, n=2)
        for x in k.units():
            assert k.exp(k.dlog(x)) == x

    def test_one_minus(self):
        k = make_field(7, k=2, n=3)
        for x in k.elements():
            assert k.add(k.one_minus(x), x) == 1


class TestOmega:
    @pytest.mark.parametrize("p,n,expected", [(7, 3, 2), (13, 4, 8), (7, 6, 3)])
    def test_values(self, p, n, expected):
        k = make_field(p, n=n)
        assert omega(k, n).element == expected

    def test_primitivity(self):
        k = make_field(13, n=6)
        w = omega(k, 6)
        orders = {k.pow(w.element, i) for i in range(1, 6)}
        assert 1 not in orders
        assert k.pow(w.element, 6) == 1

    def test_index_must_be_unit(self):
        k = make_field(13, n=4)
        with pytest.raises(DomainError):
            omega(k, 4, index=2)


class TestCharacters:
    def test_character_space_size(self):
        k = make_field(7, n=3)
        assert len(characters(k)) == 3

    def test_homomorphism_exhaustive(self):
        k = make_field(13, n=4)
        for f in characters(k):
            for a in k.units():
                for b in k.units():
                    assert (f(a) + f(b)) % 4 == f(k.mul(a, b))

    def test_zero_rejected(self):
        k = make_field(5, n=2)
        with pytest.raises(DomainError):
            char_eval(KummerCharacter(k, 2, 1), 0)

    def test_linearity(self):
        k = make_field(7, n=6)
        f = KummerCharacter(k, 6, 2)
        g = KummerCharacter(k, 6, 5)
        for x in k.units():
            assert (f + g)(x) == (f(x) + g(x)) % 6
            assert f.scale(4)(x) == (4 * f(x)) % 6


class TestEmbedding:
    @pytest.mark.parametrize("p,n", [(7, 3), (5, 2), (13, 4)])
    def test_additive_and_multiplicative(self, p, n):
        sub = make_field(p, n=n)
        sup = make_field(p, k=2, n=n)
        emb = embed_field(sub, sup)
        for a in range(p):
            for b in range(p):
                assert emb(sub.add(a, b)) == sup.add(emb(a), emb(b))
                assert emb(sub.mul(a, b)) == sup.mul(emb(a), emb(b))

    def test_fixes_prime_subfield(self):
        sub = make_field(7, n=3)
        sup = make_field(7, k=2, n=3)
        emb = embed_field(sub, sup)
        for a in range(7):
            assert emb(a) == a

    def test_preimage_roundtrip(self):
        sub = make_field(5, n=2)
        sup = make_field(5, k=2, n=2)
        emb = embed_field(sub, sup)
        for x in sub.units():
            assert emb.preimage(emb(x)) == x

    def test_restrict_character_property(self):
        # The defining property: restricted(x) = f(embed(x)) for all x.
        sub = make_field(7, n=3)
        sup = make_field(7, k=2, n=3)
        emb = embed_field(sub, sup)
        for f in characters(sup):
            r = restrict_character(emb, f)
            for x in sub.units():
                assert r(x) == f(emb(x))
