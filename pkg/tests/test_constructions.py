"""Construction layer: parameter objects, seed functions, generators."""

import itertools

import numpy as np
import pytest

from zccs import (
    GBF,
    CodeSet,
    Lemma1Params,
    Lemma2Params,
    NotAPathError,
    PhaseSequence,
    Term,
    Theorem1Params,
    Theorem2Params,
    build_f_an,
    build_g,
    build_g_an,
    build_h_an,
    build_s_an,
    eval_gbf,
    lemma1_ccc,
    lemma2_ccc,
    psi_prefix,
    theorem1_zccs,
    theorem2_zccs,
    theorem3_zccs,
    truth_table,
    verify_zccs,
    z,
)

from conftest import quadratic_gbf


def tiny_params(**overrides):
    """Smallest admissible binary seed: one low variable, empty graph."""
    defaults = dict(m1=5, quadratic=GBF(1, 2, ()), d_vec=(0,), d=0, deleted=(), beta1=None)
    defaults.update(overrides)
    return Lemma1Params(**defaults)


class TestLemma1Params:
    def test_minimum_arity(self):
        with pytest.raises(ValueError):
            tiny_params(m1=4, quadratic=GBF(1, 2, ()))

    def test_quadratic_shape_checked(self):
        with pytest.raises(ValueError):
            tiny_params(quadratic=GBF(2, 2, ()))  # wrong variable count
        with pytest.raises(ValueError):
            tiny_params(quadratic=GBF(1, 4, ()))  # wrong modulus

    def test_quadratic_must_be_homogeneous(self):
        with pytest.raises(ValueError):
            Lemma1Params(6, GBF(2, 2, (Term(1, (z(0),)),)), (0, 0))

    def test_binary_coefficient_checks(self):
        with pytest.raises(ValueError):
            tiny_params(d_vec=(2,))
        with pytest.raises(ValueError):
            tiny_params(d=3)
        with pytest.raises(ValueError):
            tiny_params(d_vec=(0, 0))  # wrong length

    def test_beta1_must_be_an_end(self):
        q = quadratic_gbf(3, [(0, 1), (1, 2)])
        with pytest.raises(ValueError):
            Lemma1Params(7, q, (0, 0, 0), beta1=1)  # interior vertex

    def test_non_path_inputs_rejected(self):
        triangle = quadratic_gbf(3, [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(NotAPathError):
            Lemma1Params(7, triangle, (0, 0, 0))

    def test_deleting_everything_rejected(self):
        q = quadratic_gbf(2, [(0, 1)])
        with pytest.raises(NotAPathError) as info:
            Lemma1Params(6, q, (0, 0), deleted=(0, 1))
        assert info.value.reason == NotAPathError.EMPTY

    def test_default_beta1_is_smallest_end(self):
        p = Lemma1Params(7, quadratic_gbf(3, [(1, 2), (0, 1)]), (0, 0, 0))
        assert p.beta1 == 0

    def test_pair_end_is_opposite_end(self):
        q = quadratic_gbf(3, [(0, 1), (1, 2)])
        assert Lemma1Params(7, q, (0, 0, 0), beta1=0).pair_end == 2
        assert Lemma1Params(7, q, (0, 0, 0), beta1=2).pair_end == 0

    def test_pair_end_on_trivial_path(self):
        p = tiny_params()
        assert p.beta1 == 0
        assert p.pair_end == 0

    def test_derived_quantities(self):
        p = Lemma1Params(8, quadratic_gbf(4, [(2, 3)]), (0,) * 4, deleted=(0, 1))

        assert p.k == 2
        assert p.gamma == 160
        assert p.path.path_order == (2, 3)


class TestSeedFunction:
    """Closed-form checks of build_g on the three structured index regions.

    Writing v1..v4 for the top four variables (descending), the patch terms
    reduce to simple offsets once (v1, v2, v3) is pinned:
      (1, 0, 0): both patches collapse to z_beta1
      (0, 1, 1): alpha gives the constant 1, beta gives z_beta1
      (0, 0, 0): both vanish
    """

    @pytest.mark.parametrize("m1", [5, 6, 8])
    def test_region_identities(self, m1):
        nv = m1 - 4
        edges = [(i, i + 1) for i in range(nv - 1)]
        p = Lemma1Params(m1, quadratic_gbf(nv, edges), tuple(i % 2 for i in range(nv)), d=1)
        g = build_g(p)
        v1, v2, v3 = m1 - 1, m1 - 2, m1 - 3

        def base_part(point):
            total = p.d + eval_gbf(p.quadratic, point[:nv])
            total += sum(di * zi for di, zi in zip(p.d_vec, point))
            return total

        for point in itertools.product((0, 1), repeat=m1):
            got = eval_gbf(g, point)
            pinned = (point[v1], point[v2], point[v3])
            if pinned == (1, 0, 0):
                assert got == (base_part(point) + point[p.beta1]) % 2
            elif pinned == (0, 1, 1):
                assert got == (base_part(point) + 1 + point[p.beta1]) % 2
            elif pinned == (0, 0, 0):
                assert got == base_part(point) % 2

    def test_seed_depends_on_beta1(self):
        q = quadratic_gbf(2, [(0, 1)])
        g0 = build_g(Lemma1Params(6, q, (0, 0), beta1=0))
        g1 = build_g(Lemma1Params(6, q, (0, 0), beta1=1))
        assert g0 != g1


class TestRowFunctions:
    def test_zero_labels_leave_seed_unchanged(self):
        p = tiny_params()
        g = build_g(p)
        assert build_g_an(g, p, (0,), 0) == g

    def test_unit_label_toggles_pair_end(self):
        q = quadratic_gbf(2, [(0, 1)])
        p = Lemma1Params(6, q, (0, 0), beta1=0)
        g = build_g(p)
        offset = build_g_an(g, p, (1,), 0) + g  # mod-2 difference
        assert offset == GBF(6, 2, (Term(1, (z(p.pair_end),)),))

    def test_mod2_cancellation_of_matching_labels(self):
        q = quadratic_gbf(2, [(0, 1)])
        p = Lemma1Params(7, quadratic_gbf(3, [(1, 2)]), (0, 0, 0), deleted=(0,), beta1=1)
        g = build_g(p)
        # a_0 = n_0 = 1 cancels; only the tail label remains
        assert build_g_an(g, p, (1, 1), 1) == build_g_an(g, p, (0, 1), 0)

    def test_partner_uses_complemented_offsets(self):
        p = Lemma1Params(7, quadratic_gbf(3, [(1, 2)]), (0, 0, 0), deleted=(0,), beta1=1)
        g = build_g(p)
        s = build_s_an(g, p, (1, 1), 0)
        # direct reconstruction from the definition
        from zccs import substitute_complement, zbar

        want = substitute_complement(g) + GBF(
            7, 2, (Term(1, (zbar(0),)), Term(0, (z(p.pair_end),)))
        )
        assert s == want

    def test_label_validation(self):
        p = tiny_params()
        g = build_g(p)
        with pytest.raises(ValueError):
            build_g_an(g, p, (0, 1), 0)  # wrong arity
        with pytest.raises(ValueError):
            build_g_an(g, p, (2,), 0)  # not a bit
        with pytest.raises(ValueError):
            build_g_an(g, p, (0,), 1)  # n out of range for k=0


class TestBlockParams:
    def test_block_count_constraints(self):
        base = tiny_params()
        with pytest.raises(ValueError):
            Theorem1Params(base, l=1, r=3)  # odd
        with pytest.raises(ValueError):
            Theorem1Params(base, l=1, r=4)  # exceeds 2^l
        with pytest.raises(ValueError):
            Theorem1Params(base, l=0, r=2)

    def test_explicit_labels_validated(self):
        base = tiny_params()
        with pytest.raises(ValueError):
            Theorem1Params(base, l=2, r=2, s_r=((0, 0), (0, 0)))  # duplicate
        with pytest.raises(ValueError):
            Theorem1Params(base, l=2, r=2, s_r=((0,), (1,)))  # wrong length
        with pytest.raises(ValueError):
            Theorem1Params(base, l=2, r=4, s_r=((0, 0), (0, 1)))  # wrong count

    def test_default_labels_follow_bit_order(self):
        t = Theorem1Params(tiny_params(), l=2, r=2)
        assert t.resolved_s_r("lsb") == ((0, 0), (1, 0))
        assert t.resolved_s_r("msb") == ((0, 0), (0, 1))

    def test_explicit_labels_win(self):
        t = Theorem1Params(tiny_params(), l=2, r=2, s_r=((1, 1), (0, 0)))
        assert t.resolved_s_r("lsb") == ((1, 1), (0, 0))


class TestBinaryGenerators:
    def test_ccc_dimensions_and_roundness(self):
        p = Lemma1Params(7, quadratic_gbf(3, [(1, 2)]), (1, 0, 1), deleted=(0,))
        cs = lemma1_ccc(p)
        assert cs.dims == (4, 4, 80, 80)
        assert cs.q == 2
        assert all(len(code) == 4 for code in cs.codes)

    def test_determinism(self):
        p = Lemma1Params(6, quadratic_gbf(2, [(0, 1)]), (1, 0))
        assert lemma1_ccc(p) == lemma1_ccc(p)
        t = Theorem1Params(p, l=1, r=2)
        assert theorem1_zccs(t) == theorem1_zccs(t)

    def test_first_row_is_plain_seed_prefix(self):
        p = Lemma1Params(6, quadratic_gbf(2, [(0, 1)]), (0, 1), beta1=1)
        cs = lemma1_ccc(p)
        g = build_g(p)
        assert cs.codes[0][0] == psi_prefix(g, p.gamma)

    def test_row_order_is_lexicographic_in_labels(self):
        p = Lemma1Params(7, quadratic_gbf(3, [(0, 1)]), (0, 0, 0), deleted=(2,))
        cs = lemma1_ccc(p)
        g = build_g(p)
        labels = list(itertools.product((0, 1), repeat=2))
        for row, a_vec in enumerate(labels):
            want = truth_table(build_g_an(g, p, a_vec, 0), "lsb")[: p.gamma]
            assert cs.codes[0][row].phases == tuple(int(v) for v in want)

    def test_all_zero_block_label_repeats_the_seed_code(self):
        base = Lemma1Params(6, quadratic_gbf(2, [(0, 1)]), (1, 1))
        ccc = lemma1_ccc(base)
        chained = theorem1_zccs(Theorem1Params(base, l=1, r=2))
        gamma = base.gamma
        # front code 0 carries label (0,): both blocks are unflipped copies
        for row in range(2):
            phases = chained.codes[0][row].phases
            assert phases[:gamma] == ccc.codes[0][row].phases
            assert phases[gamma:] == ccc.codes[0][row].phases

    def test_chained_dimensions_and_order(self):
        base = Lemma1Params(6, quadratic_gbf(2, [(0, 1)]), (0, 0), deleted=())
        cs = theorem1_zccs(Theorem1Params(base, l=2, r=4))
        assert cs.dims == (8, 2, 160, 40)
        prov = cs.provenance
        assert prov["construction"] == "thm1"
        assert prov["parameters"]["R"] == 4
        assert len(prov["parameters"]["s_r"]) == 4

    def test_three_block_pattern(self):
        p = Lemma1Params(5, GBF(1, 2, ()), (1,))
        cs = theorem3_zccs(p)
        assert cs.dims == (2, 2, 60, 40)
        gamma = p.gamma
        for code in cs.codes:
            for seq in code:
                first, second, third = (
                    seq.phases[:gamma],
                    seq.phases[gamma : 2 * gamma],
                    seq.phases[2 * gamma :],
                )
                assert second == first
                assert third == tuple((v + 1) % 2 for v in first)

    def test_bad_block_labels_break_verification_at_zero_shift(self):
        # labels differing only where every block parity agrees leave the
        # zero-shift cross sum at full strength; the verifier must say so
        base = Lemma1Params(6, quadratic_gbf(2, [(0, 1)]), (0, 0))
        t = Theorem1Params(base, l=2, r=2, s_r=((0, 0), (0, 1)))
        report = verify_zccs(theorem1_zccs(t, bit_order="lsb"))
        assert not report.zccs_ok
        assert any(v.tau == 0 and v.i != v.j for v in report.violations)

    def test_default_labels_verify(self):
        base = Lemma1Params(6, quadratic_gbf(2, [(0, 1)]), (0, 0))
        for l, r in ((1, 2), (2, 2), (2, 4)):
            report = verify_zccs(theorem1_zccs(Theorem1Params(base, l=l, r=r)))
            assert report.zccs_ok, (l, r)


class TestQaryParamsAndGenerators:
    def test_modulus_must_be_even(self):
        with pytest.raises(ValueError):
            Lemma2Params(3, 2, GBF(2, 3, ()))

    def test_function_shape_checked(self):
        with pytest.raises(ValueError):
            Lemma2Params(4, 2, GBF(3, 4, ()))
        with pytest.raises(ValueError):
            Lemma2Params(4, 2, GBF(2, 2, ()))

    def test_edge_weights_must_be_half_modulus(self):
        f = GBF(2, 4, (Term(1, (z(0), z(1))),))
        with pytest.raises(NotAPathError) as info:
            Lemma2Params(4, 2, f)
        assert info.value.reason == NotAPathError.WEIGHT

    def test_weight_one_suffices_for_binary(self):
        f = GBF(2, 2, (Term(1, (z(0), z(1))),))
        assert Lemma2Params(2, 2, f).beta1 == 0

    def test_row_offsets_scale_with_half_modulus(self):
        f = GBF(2, 4, (Term(2, (z(0), z(1))),))
        p = Lemma2Params(4, 2, f, beta1=0)
        fa = build_f_an(p, (1,), 0)
        assert fa == f + GBF(2, 4, (Term(2, (z(0),)),))
        # partner with a=1 drops its tail term entirely
        ha = build_h_an(p, (1,), 0)
        from zccs import substitute_complement

        assert ha == substitute_complement(f)

    def test_full_length_ccc_dimensions(self):
        f = GBF(3, 4, (Term(2, (z(0), z(1))), Term(2, (z(1), z(2))), Term(1, ())))
        cs = lemma2_ccc(Lemma2Params(4, 3, f))
        assert cs.dims == (2, 2, 8, 8)
        assert cs.q == 4
        assert cs.provenance["construction"] == "lemma2"

    def test_chained_qary_dimensions_and_block_signs(self):
        f = GBF(2, 4, (Term(2, (z(0), z(1))),))
        base = Lemma2Params(4, 2, f, beta1=0)
        cs = theorem2_zccs(Theorem2Params(base, l=1, r=2))
        assert cs.dims == (4, 2, 8, 4)
        plain = lemma2_ccc(base)
        length = 4
        # label (1,): second block is negated, phase shift by q/2
        flipped = cs.codes[1][0].phases
        assert flipped[:length] == plain.codes[0][0].phases
        assert flipped[length:] == tuple((p + 2) % 4 for p in plain.codes[0][0].phases)

    def test_provenance_round_trip_fields(self):
        f = GBF(2, 4, (Term(2, (z(0), z(1))), Term(3, (z(0),))))
        cs = lemma2_ccc(Lemma2Params(4, 2, f, beta1=1))
        params = cs.provenance["parameters"]
        assert params["q"] == 4 and params["m2"] == 2 and params["beta1"] == 1
        assert any(t["literals"] == [[0, False]] for t in params["f_terms"])


class TestCodeSetValidation:
    def test_dimension_mismatches_rejected(self):
        seq = PhaseSequence(2, (0, 1))
        with pytest.raises(ValueError):
            CodeSet(2, 2, 1, 2, 2, ((seq,),))  # one code, claims two
        with pytest.raises(ValueError):
            CodeSet(2, 1, 2, 2, 2, ((seq,),))  # one row, claims two
        with pytest.raises(ValueError):
            CodeSet(2, 1, 1, 3, 3, ((seq,),))  # wrong length
        with pytest.raises(ValueError):
            CodeSet(2, 1, 1, 2, 5, ((seq,),))  # zone beyond length
        with pytest.raises(ValueError):
            CodeSet(4, 1, 1, 2, 2, ((seq,),))  # modulus mismatch

    def test_dims_property(self):
        seq = PhaseSequence(2, (0, 1))
        cs = CodeSet(2, 1, 1, 2, 1, ((seq,),))
        assert cs.dims == (1, 1, 2, 1)


class TestBitOrderPropagation:
    def test_explicit_matches_default(self):
        p = Lemma1Params(6, quadratic_gbf(2, [(0, 1)]), (1, 0))
        assert lemma1_ccc(p, bit_order="lsb") == lemma1_ccc(p)

    def test_orders_give_different_sets(self):
        p = Lemma1Params(6, quadratic_gbf(2, [(0, 1)]), (1, 0))
        a = lemma1_ccc(p, bit_order="lsb")
        b = lemma1_ccc(p, bit_order="msb")
        assert a != b
        assert b.provenance["bit_order"] == "msb"
