"""Boolean-function layer: terms, truth tables, realizations, bit orders."""

import itertools

import numpy as np
import pytest

from zccs import (
    BIT_ORDERS,
    GBF,
    Literal,
    PhaseSequence,
    Term,
    bits_to_index,
    eval_gbf,
    get_default_bit_order,
    index_to_bits,
    psi,
    psi_prefix,
    psi_suffix,
    resolve_bit_order,
    set_default_bit_order,
    substitute_complement,
    truth_table,
    z,
    zbar,
)


class TestLiteralsAndTerms:
    def test_literal_helpers(self):
        assert z(3) == Literal(3, False)
        assert zbar(3) == Literal(3, True)
        assert z(3).complement() == zbar(3)
        assert zbar(3).complement() == z(3)

    def test_literal_rejects_negative_index(self):
        with pytest.raises(ValueError):
            Literal(-1, False)

    def test_term_sorts_and_dedupes_literals(self):
        t = Term(1, (z(2), z(0), z(2)))
        assert t.literals == (z(0), z(2))
        assert t.degree == 2

    def test_term_with_contradictory_literals_is_zero(self):
        assert Term(1, (z(0), zbar(0))).is_always_zero()
        assert not Term(1, (z(0), zbar(1))).is_always_zero()

    def test_term_evaluate(self):
        t = Term(3, (z(0), zbar(2)))
        assert t.evaluate((1, 0, 0)) == 3
        assert t.evaluate((1, 0, 1)) == 0
        assert t.evaluate((0, 1, 0)) == 0


class TestGBFNormalization:
    def test_like_terms_combine_mod_q(self):
        f = GBF(2, 4, (Term(3, (z(0),)), Term(3, (z(0),))))
        assert f.terms == (Term(2, (z(0),)),)

    def test_zero_coefficient_terms_vanish(self):
        f = GBF(2, 2, (Term(1, (z(0),)), Term(1, (z(0),))))
        assert f.terms == ()
        assert f == GBF.zero(2, 2)

    def test_always_zero_products_vanish(self):
        f = GBF(1, 2, (Term(1, (z(0), zbar(0))),))
        assert f.terms == ()

    def test_terms_sorted_by_degree_then_literals(self):
        f = GBF(3, 2, (Term(1, (z(1), z(2))), Term(1, (z(0),)), Term(1, ())))
        degrees = [t.degree for t in f.terms]
        assert degrees == sorted(degrees)

    def test_variable_range_enforced(self):
        with pytest.raises(ValueError):
            GBF(2, 2, (Term(1, (z(2),)),))

    def test_modulus_and_arity_bounds(self):
        with pytest.raises(ValueError):
            GBF(0, 2, ())
        with pytest.raises(ValueError):
            GBF(1, 1, ())  # modulus below 2

    def test_add_requires_matching_shape(self):
        with pytest.raises(ValueError):
            GBF.zero(2, 2) + GBF.zero(3, 2)
        with pytest.raises(ValueError):
            GBF.zero(2, 2) + GBF.zero(2, 4)

    def test_add_and_scale(self):
        f = GBF(2, 4, (Term(1, (z(0),)),))
        g = GBF(2, 4, (Term(2, (z(0),)), Term(1, (z(1),))))
        assert (f + g).evaluate((1, 1)) == (3 + 1) % 4
        assert f.scale(3).evaluate((1, 0)) == 3

    def test_degree(self):
        assert GBF.zero(3, 2).degree == 0
        f = GBF(3, 2, (Term(1, (z(0), z(1), z(2))),))
        assert f.degree == 3


class TestEvaluation:
    def test_eval_matches_manual_arithmetic(self):
        # f = 2 z0 z1 + z2 + 3 over Z_4
        f = GBF(3, 4, (Term(2, (z(0), z(1))), Term(1, (z(2),)), Term(3, ())))
        for point in itertools.product((0, 1), repeat=3):
            expected = (2 * point[0] * point[1] + point[2] + 3) % 4
            assert eval_gbf(f, point) == expected
            assert f.evaluate(point) == expected

    def test_eval_rejects_wrong_arity(self):
        with pytest.raises(ValueError):
            GBF.zero(3, 2).evaluate((0, 1))


class TestBitOrders:
    def test_default_is_lsb(self):
        assert get_default_bit_order() == "lsb"

    def test_set_and_restore_default(self):
        set_default_bit_order("msb")
        try:
            assert get_default_bit_order() == "msb"
            assert resolve_bit_order(None) == "msb"
        finally:
            set_default_bit_order("lsb")
        assert resolve_bit_order(None) == "lsb"

    def test_unknown_order_rejected(self):
        with pytest.raises(ValueError):
            set_default_bit_order("middle")
        with pytest.raises(ValueError):
            index_to_bits(0, 2, "middle")

    def test_round_trip_both_orders(self):
        for order in BIT_ORDERS:
            for m in (1, 3, 5):
                for r in range(1 << m):
                    bits = index_to_bits(r, m, order)
                    assert len(bits) == m
                    assert bits_to_index(bits, order) == r

    def test_orders_are_mutual_reversals(self):
        for r in range(16):
            assert index_to_bits(r, 4, "lsb") == tuple(reversed(index_to_bits(r, 4, "msb")))

    def test_lsb_bit_positions(self):
        assert index_to_bits(6, 4, "lsb") == (0, 1, 1, 0)
        assert index_to_bits(6, 4, "msb") == (0, 1, 1, 0)[::-1]

    def test_out_of_range_index(self):
        with pytest.raises(ValueError):
            index_to_bits(8, 3)
        with pytest.raises(ValueError):
            index_to_bits(-1, 3)


class TestTruthTable:
    @pytest.mark.parametrize("order", BIT_ORDERS)
    def test_table_matches_pointwise_eval(self, order):
        f = GBF(4, 4, (Term(2, (z(0), z(3))), Term(1, (zbar(2),)), Term(3, (z(1),))))
        table = truth_table(f, order)
        assert table.dtype == np.int64
        for r in range(16):
            assert table[r] == eval_gbf(f, index_to_bits(r, 4, order))

    def test_orders_differ_for_asymmetric_function(self):
        f = GBF(3, 2, (Term(1, (z(0),)),))
        assert not np.array_equal(truth_table(f, "lsb"), truth_table(f, "msb"))


class TestPhaseSequence:
    def test_validation(self):
        with pytest.raises(ValueError):
            PhaseSequence(2, ())
        with pytest.raises(ValueError):
            PhaseSequence(2, (0, 2))
        with pytest.raises(ValueError):
            PhaseSequence(0, (0,))

    def test_binary_values_are_signs(self):
        s = PhaseSequence(2, (0, 1, 0))
        assert s.values().tolist() == [1, -1, 1]

    def test_quaternary_values_are_gaussian_integers(self):
        s = PhaseSequence(4, (0, 1, 2, 3))
        assert s.values().tolist() == [1, 1j, -1, -1j]

    def test_generic_modulus_uses_unit_circle(self):
        s = PhaseSequence(8, (1,))
        assert abs(s.values()[0] - np.exp(2j * np.pi / 8)) < 1e-12

    def test_conjugate_negates_phases(self):
        s = PhaseSequence(4, (0, 1, 2, 3))
        assert s.conjugate().phases == (0, 3, 2, 1)
        assert np.allclose(s.conjugate().values(), s.values().conj())

    def test_negate_shifts_by_half(self):
        s = PhaseSequence(4, (0, 1, 2, 3))
        assert s.negate().phases == (2, 3, 0, 1)
        with pytest.raises(ValueError):
            PhaseSequence(3, (0,)).negate()


class TestRealizations:
    def test_full_length(self):
        f = GBF(3, 2, (Term(1, (z(0), z(1))),))
        assert len(psi(f)) == 8

    def test_prefix_suffix_partition(self):
        f = GBF(4, 4, (Term(2, (z(0), z(1))), Term(1, (z(3),))))
        full = psi(f).phases
        for j in (1, 5, 8, 16):
            assert psi_prefix(f, j).phases == full[:j]
            assert psi_suffix(f, j).phases == full[16 - j:]

    def test_cut_bounds(self):
        f = GBF.zero(3, 2)
        for bad in (0, 9):
            with pytest.raises(ValueError):
                psi_prefix(f, bad)
            with pytest.raises(ValueError):
                psi_suffix(f, bad)


class TestComplementSubstitution:
    def test_pointwise_identity(self):
        f = GBF(3, 4, (Term(2, (z(0), z(1))), Term(3, (zbar(2),)), Term(1, ())))
        g = substitute_complement(f)
        for point in itertools.product((0, 1), repeat=3):
            flipped = tuple(1 - b for b in point)
            assert eval_gbf(g, point) == eval_gbf(f, flipped)

    def test_involution(self):
        f = GBF(3, 2, (Term(1, (z(0), zbar(1))), Term(1, (z(2),))))
        assert substitute_complement(substitute_complement(f)) == f

    def test_constants_untouched(self):
        f = GBF.constant(2, 4, 3)
        assert substitute_complement(f) == f
