import itertools

import pytest

from foliage.braid import (
    BoundaryWord,
    BraidWord,
    DeltaBlock,
    Letter,
    NotApplicable,
    apply_band_relation,
    canonical_form,
    commutes,
    conjugation_orbit,
    delta_conjugate,
    delta_expand,
    delta_letters,
    exponent_sum,
    fixed_points,
    free_reduce,
    induced_permutation,
    invert_word,
    is_good_word,
    letter,
    parse_boundary_word,
    parse_word,
    perm_cycles,
    relation_rewrites,
    rotate_conjugate,
    word,
)

# The running 15-letter example with (P, N) = (11, 5).
EW_11_5 = parse_word(
    11,
    "(7,6) (10,9) (11,10) (11,4) (8,4) -(7,3) -(8,7) -(6,2) -(7,6) "
    "(6,5) (5,1) (7,2) (8,3) -(11,4) -(11,10)",
)


def cycles_nontrivial(perm):
    return {c for c in perm_cycles(perm) if len(c) > 1}


class TestInducedPermutation:
    def test_reference_word(self):
        perm = induced_permutation(EW_11_5)
        assert cycles_nontrivial(perm) == {(1, 5, 6, 8, 10, 9)}
        assert fixed_points(perm) == (2, 3, 4, 7, 11)

    def test_empty_word_is_identity(self):
        assert induced_permutation(BraidWord(4)) == (0, 1, 2, 3, 4)

    def test_two_transpositions(self):
        assert induced_permutation(word(3, [(2, 1), (3, 1)])) == (0, 2, 3, 1)

    def test_homomorphism(self):
        u = word(5, [(3, 1), (5, 2), (4, 3, -1)])
        v = word(5, [(2, 1), (5, 4)])
        uv = BraidWord(5, u.letters + v.letters)
        pu, pv = induced_permutation(u), induced_permutation(v)
        assert induced_permutation(uv) == (0,) + tuple(pv[pu[k]] for k in range(1, 6))


class TestGoodWords:
    def test_fan_word_is_good(self):
        assert is_good_word(word(4, [(2, 1), (3, 1), (4, 1)]))

    def test_squared_letter_is_not_good(self):
        assert not is_good_word(word(3, [(2, 1), (2, 1)]))

    def test_wrong_length_is_not_good(self):
        assert not is_good_word(word(4, [(2, 1), (3, 1), (4, 3), (4, 3)]))

    @pytest.mark.parametrize("k", range(4))
    def test_invariant_under_easy_conjugation(self, k):
        w = word(4, [(2, 1), (3, 1, -1), (4, 2)])
        assert is_good_word(delta_conjugate(w, k))
        assert is_good_word(rotate_conjugate(w, k))
        assert is_good_word(invert_word(w))


class TestEasyConjugation:
    def test_delta_shift_with_wraparound(self):
        assert delta_conjugate(word(3, [(2, 1), (3, 1)]), 1) == word(3, [(3, 2), (2, 1)])

    def test_delta_shift_trivial_cases(self):
        w = word(5, [(4, 2), (5, 1, -1), (3, 2)])
        assert delta_conjugate(w, 0) == w
        assert delta_conjugate(w, 5) == w

    def test_delta_shift_conjugates_permutation(self):
        w = word(5, [(4, 2), (5, 1, -1), (3, 2)])
        n = w.n
        for k in range(n):
            shifted = induced_permutation(delta_conjugate(w, k))
            base = induced_permutation(w)
            expect = [0] * (n + 1)
            for a in range(1, n + 1):
                a_shift = (a + k - 1) % n + 1
                expect[a_shift] = (base[a] + k - 1) % n + 1
            assert shifted == tuple(expect)

    def test_rotation(self):
        w = word(5, [(2, 1), (3, 2), (4, 3)])
        assert rotate_conjugate(w, 0) == w
        assert rotate_conjugate(w, 3) == w
        assert rotate_conjugate(w, 1) == word(5, [(3, 2), (4, 3), (2, 1)])


class TestCanonicalForm:
    def test_orbit_of_fan_word(self):
        w = word(3, [(2, 1), (3, 1)])
        orbit = set(conjugation_orbit(w))
        assert len(orbit) == 6
        forms = {canonical_form(v) for v in orbit}
        assert len(forms) == 1

    def test_idempotent(self):
        w = word(4, [(4, 2), (2, 1, -1), (3, 1)])
        assert canonical_form(canonical_form(w)) == canonical_form(w)

    def test_orbit_invariance(self):
        w = word(4, [(4, 2), (2, 1, -1), (3, 1)])
        for k in range(4):
            assert canonical_form(delta_conjugate(w, k)) == canonical_form(w)
        for r in range(3):
            assert canonical_form(rotate_conjugate(w, r)) == canonical_form(w)

    def test_sign_order_positive_first(self):
        a = word(2, [(2, 1)])
        b = word(2, [(2, 1, -1)])
        assert a.key() < b.key()


class TestInversion:
    def test_empty(self):
        assert invert_word(BraidWord(3)) == BraidWord(3)

    def test_single_letter(self):
        assert invert_word(word(3, [(2, 1)])) == word(3, [(2, 1, -1)])

    def test_reference_word_inverse_permutation(self):
        perm = induced_permutation(invert_word(EW_11_5))
        assert cycles_nontrivial(perm) == {(1, 9, 10, 8, 6, 5)}


class TestFreeReduce:
    def test_adjacent_pair(self):
        assert free_reduce(word(3, [(2, 1), (2, 1, -1)])) == BraidWord(3)

    def test_reduced_word_unchanged(self):
        w = word(4, [(2, 1), (3, 1), (4, 1)])
        assert free_reduce(w) == w

    def test_nested_pairs(self):
        w = word(3, [(3, 1), (2, 1), (2, 1, -1), (3, 1, -1)])
        assert free_reduce(w) == BraidWord(3)

    def test_preserves_permutation(self):
        w = word(4, [(4, 2), (3, 1), (3, 1, -1), (2, 1)])
        assert induced_permutation(free_reduce(w)) == induced_permutation(w)


class TestBandRelations:
    def test_commutation_disjoint(self):
        w = word(4, [(2, 1), (4, 3)])
        assert apply_band_relation(w, 0, "commute") == word(4, [(4, 3), (2, 1)])

    def test_commutation_rejects_interlocking(self):
        w = word(4, [(3, 1), (4, 2)])
        with pytest.raises(NotApplicable):
            apply_band_relation(w, 0, "commute")

    def test_commutation_accepts_nested(self):
        assert commutes(letter(4, 1), letter(3, 2))

    def test_mixed_sign_rewrite(self):
        w1 = parse_word(6, "(6,5) (5,4) -(4,2) (3,1) (5,3)")
        w2 = parse_word(6, "(6,5) -(5,2) (5,4) (3,1) (5,3)")
        assert apply_band_relation(w1, 1, "fwd") == w2
        assert apply_band_relation(w2, 1, "fwd") == w1

    def test_triple_cycle(self):
        a = word(3, [(3, 2), (2, 1)])
        b = apply_band_relation(a, 0, "fwd")
        c = apply_band_relation(b, 0, "fwd")
        assert b == word(3, [(2, 1), (3, 1)])
        assert c == word(3, [(3, 1), (3, 2)])
        assert apply_band_relation(c, 0, "fwd") == a
        assert apply_band_relation(a, 0, "bwd") == c

    def test_preserves_permutation_and_exponent_sum(self):
        for cls_word in [
            word(5, [(4, 3), (3, 1)]),
            word(5, [(4, 3, -1), (3, 1, -1)]),
            word(5, [(4, 3), (3, 1, -1)]),
            word(5, [(4, 1, -1), (3, 1)]),
        ]:
            for variant in ("fwd", "bwd"):
                try:
                    out = apply_band_relation(cls_word, 0, variant)
                except NotApplicable:
                    continue
                assert induced_permutation(out) == induced_permutation(cls_word)
                assert exponent_sum(out) == exponent_sum(cls_word)

    def test_all_relation_classes_against_burau(self):
        # Verify the hard-coded relation table with the (faithful on three
        # strands) unreduced Burau representation over Z[t, 1/t].
        sympy = pytest.importorskip("sympy")
        t = sympy.Symbol("t")

        def sigma(idx):
            m = sympy.eye(3)
            m[idx - 1, idx - 1] = 1 - t
            m[idx - 1, idx] = t
            m[idx, idx - 1] = 1
            m[idx, idx] = 0
            return sympy.Matrix(m)

        mats = {
            (2, 1): sigma(1),
            (3, 2): sigma(2),
            (3, 1): sigma(2) * sigma(1) * sigma(2).inv(),
        }

        def mat(l):
            m = mats[(l.i, l.j)]
            return m if l.sign > 0 else m.inv()

        all_letters = [letter(i, j, s) for (i, j) in mats for s in (1, -1)]
        for a, b in itertools.product(all_letters, repeat=2):
            lhs = sympy.simplify(mat(a) * mat(b))
            for (c, d) in relation_rewrites(a, b):
                rhs = sympy.simplify(mat(c) * mat(d))
                assert sympy.simplify(lhs - rhs) == sympy.zeros(3, 3), (a, b, c, d)


class TestDeltaBlocks:
    def test_minimal_block(self):
        assert delta_letters(4, 3) == (Letter(4, 3, 1),)

    def test_descending_cycle(self):
        assert delta_letters(4, 2) == (Letter(4, 3, 1), Letter(3, 2, 1))

    @pytest.mark.parametrize("p,q", [(3, 1), (5, 2), (6, 5)])
    def test_block_permutation_is_cycle(self, p, q):
        w = BraidWord(p, delta_letters(p, q))
        assert cycles_nontrivial(induced_permutation(w)) == {tuple(range(q, p + 1))}

    def test_expand_inverse_block(self):
        bw = BoundaryWord(5, (DeltaBlock(4, 2, -1),))
        assert delta_expand(bw) == word(5, [(3, 2, -1), (4, 3, -1)])

    def test_parse_round_trip(self):
        text = "(6,5) d(6,2) (5,2) d(4,2) (5,4) (4,1) -d(5,2) -d(6,2)"
        assert str(parse_boundary_word(6, text)) == text

    @pytest.mark.parametrize(
        "left,right",
        [
            # commuting and shifting identities for descending cycles
            ("d(6,5) d(3,2)", "d(3,2) d(6,5)"),
            ("d(6,2) d(5,3)", "d(4,2) d(6,2)"),
            ("(4,3) d(6,2)", "d(6,2) (5,4)"),
        ],
    )
    def test_delta_identities_on_permutations(self, left, right):
        lw = delta_expand(parse_boundary_word(7, left))
        rw = delta_expand(parse_boundary_word(7, right))
        assert induced_permutation(lw) == induced_permutation(rw)
