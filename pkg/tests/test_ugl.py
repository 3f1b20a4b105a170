import random
from fractions import Fraction

import pytest

from gltlab.field import QQ, FieldGF
from gltlab.ugl import (UElement, centralizer_membership, filtration_basis,
                        gelfand, straighten, straighten_word)


class TestStraightening:
    def test_defining_bracket(self):
        # E_12 E_21 - E_21 E_12 = E_11 - E_22
        lhs = straighten([(1, 2), (2, 1)], 2) - straighten([(2, 1), (1, 2)], 2)
        rhs = UElement.gen(2, 1, 1) - UElement.gen(2, 2, 2)
        assert lhs == rhs

    def test_sorted_words_fixed(self):
        w = ((1, 1), (1, 2), (2, 2))
        assert straighten_word(w) == {w: Fraction(1)}

    def test_ring_homomorphism_on_random_words(self):
        rng = random.Random(3)
        gens = [(a, b) for a in (1, 2, 3) for b in (1, 2, 3)]
        for _ in range(20):
            w1 = tuple(rng.choice(gens) for _ in range(rng.randint(0, 3)))
            w2 = tuple(rng.choice(gens) for _ in range(rng.randint(0, 3)))
            lhs = UElement.from_word(3, w1) * UElement.from_word(3, w2)
            assert lhs == UElement.from_word(3, w1 + w2)

    def test_degree_filtration(self):
        x = straighten([(2, 1), (1, 2), (2, 1)], 2)
        assert x.degree() == 3
        assert x.top_part().degree() == 3
        assert (x - x.top_part()).degree() < 3

    def test_generator_range_checked(self):
        with pytest.raises(ValueError):
            straighten([(1, 3)], 2)


class TestGelfand:
    def test_k1(self):
        assert gelfand(1, 2) == UElement.gen(2, 1, 1) + UElement.gen(2, 2, 2)

    def test_centrality(self):
        for m_size in (2, 3):
            for k in (1, 2, 3):
                g = gelfand(k, m_size)
                for a in range(1, m_size + 1):
                    for b in range(1, m_size + 1):
                        e = UElement.gen(m_size, a, b)
                        assert g.commutator(e).is_zero()

    def test_pairwise_commuting(self):
        g2, g3 = gelfand(2, 2), gelfand(3, 2)
        assert g2.commutator(g3).is_zero()

    def test_bad_degree(self):
        with pytest.raises(ValueError):
            gelfand(0, 2)


class TestCentralizerMembership:
    def test_block_membership(self):
        # E_11 commutes with the block {2,3} inside gl_3.
        assert centralizer_membership(UElement.gen(3, 1, 1), [2, 3])
        assert not centralizer_membership(UElement.gen(3, 1, 2), [2, 3])


class TestText:
    def test_roundtrip(self):
        x = straighten([(2, 1), (1, 2)], 2).scale(Fraction(3, 2))
        assert UElement.from_text(2, x.to_text()) == x

    def test_zero_and_unit(self):
        assert UElement.from_text(2, "0").is_zero()
        assert UElement.from_text(2, "1*1") == UElement.one(2)

    def test_golden(self):
        x = UElement.from_text(2, "1*E[1,2]E[2,1] + -1/2*E[1,1]")
        assert x.terms[((1, 2), (2, 1))] == 1
        assert x.terms[((1, 1),)] == Fraction(-1, 2)


class TestPrimeFieldCoefficients:
    def test_straighten_mod_5(self):
        f = FieldGF(5)
        x = straighten([(2, 1), (1, 2)], 2, f)
        assert x.terms[((1, 1),)] == f.from_int(-1)

    def test_fields_not_mixed(self):
        with pytest.raises(ValueError):
            UElement.one(2, QQ) + UElement.one(2, FieldGF(5))


class TestFiltration:
    def test_counts(self):
        assert len(filtration_basis(2, 2)) == 15
        assert len(filtration_basis(2, 3)) == 55
