import random
from fractions import Fraction

import pytest

from weylcyc import (
    CRational,
    DrinfeldTuple,
    FundamentalFactor,
    IrreducibilityStatus,
    LieType,
    MonicPoly,
    TensorWord,
    cartan_data,
    derive_s_from_t,
    is_cyclic,
    is_irreducible,
    left_dual,
    s_set,
    shift_word,
    t_set_C,
    tuple_of_word,
    weyl_factorize,
)
from weylcyc.selftest import random_tuple


def cr(re, im=0):
    return CRational(Fraction(re), Fraction(im))


def word(type_str, *factors):
    lt = LieType.parse(type_str)
    return TensorWord(lt, tuple(FundamentalFactor(n, cr(a, b)) for n, a, b in factors))


def f(*args):
    return Fraction(*args)


class TestSSetTables:
    def test_type_a_example(self):
        d = cartan_data(LieType("A", 3))
        assert s_set(d, 1, 2).values == {f(3, 2)}

    def test_type_a_general(self):
        d = cartan_data(LieType("A", 4))
        # |bn-bm|/2 + k, k up to the symmetric min
        assert s_set(d, 2, 3).values == {f(3, 2), f(5, 2)}
        assert s_set(d, 1, 4).values == {f(5, 2)}
        assert s_set(d, 2, 2).values == {1, 2}

    def test_type_b_last_node(self):
        for l in range(2, 9):
            d = cartan_data(LieType("B", l))
            assert s_set(d, l, l).values == {f(2 * k + 1) for k in range(l)}

    def test_type_b_cases(self):
        d = cartan_data(LieType("B", 4))
        assert s_set(d, 1, 2).values == {3, 6}
        assert s_set(d, 4, 2).values == {4, 6}
        # overlapping arithmetic strings l-bm+r and l-bm+1+r merge
        assert s_set(d, 2, 4).values == {2, 3, 4}

    def test_type_c_cases(self):
        d = cartan_data(LieType("C", 3))
        assert s_set(d, 1, 1).values == {1, 4}
        assert s_set(d, 3, 3).values == {2, 3, 4}
        assert s_set(d, 3, 1).values == {f(3, 2), f(5, 2)}
        assert s_set(d, 1, 3).values == {f(7, 2)}

    def test_type_c_last_node_range(self):
        for l in range(2, 9):
            d = cartan_data(LieType("C", l))
            assert s_set(d, l, l).values == set(map(Fraction, range(2, l + 2)))

    def test_type_d_spin_pairs(self):
        for l in range(3, 9):
            d = cartan_data(LieType("D", l))
            lbar = 0 if l % 2 == 0 else 1
            mixed = set(map(Fraction, range(2, l - 2 + lbar + 1, 2)))
            same = set(map(Fraction, range(1, l - 1 - lbar + 1, 2)))
            assert s_set(d, l - 1, l).values == mixed
            assert s_set(d, l, l - 1).values == mixed
            assert s_set(d, l, l).values == same
            assert s_set(d, l - 1, l - 1).values == same

    def test_type_d_half_integers_kept(self):
        d = cartan_data(LieType("D", 4))
        # (l-1-b)/2 is half-integral for b = 2
        assert s_set(d, 4, 2).values == {f(3, 2), f(5, 2)}
        assert s_set(d, 2, 3).values == s_set(d, 2, 4).values == {f(3, 2), f(5, 2)}

    def test_positivity_all_types(self):
        for family, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3)):
            for l in range(lo, 9):
                d = cartan_data(LieType(family, l))
                for bm in range(1, l + 1):
                    for bn in range(1, l + 1):
                        assert all(v > 0 for v in s_set(d, bm, bn).values)

    def test_type_a_symmetries(self):
        for l in range(1, 9):
            d = cartan_data(LieType("A", l))
            for bm in range(1, l + 1):
                for bn in range(1, l + 1):
                    s = s_set(d, bm, bn).values
                    assert s == s_set(d, bn, bm).values
                    assert s == s_set(d, l - bn + 1, l - bm + 1).values

    def test_node_range_checked(self):
        d = cartan_data(LieType("A", 2))
        with pytest.raises(ValueError):
            s_set(d, 0, 1)
        with pytest.raises(ValueError):
            s_set(d, 1, 3)


class TestTSets:
    def test_t_last_last(self):
        d = cartan_data(LieType("C", 4))
        assert t_set_C(d, 4, 4).offsets == {(f(1, 2), f(k)) for k in range(4)}

    def test_t_i_last_is_half_scaled(self):
        d = cartan_data(LieType("C", 5))
        i = 3
        expected = {(f(1, 2), f(5 - i + 1, 2) + r) for r in range(i)}
        assert t_set_C(d, i, 5).offsets == expected

    def test_t_1_1(self):
        d = cartan_data(LieType("C", 3))
        assert t_set_C(d, 1, 1).offsets == {(f(1), f(0)), (f(1), f(3))}

    def test_requires_type_c(self):
        d = cartan_data(LieType("B", 3))
        with pytest.raises(ValueError):
            t_set_C(d, 1, 1)
        with pytest.raises(ValueError):
            derive_s_from_t(d, 1, 1)

    def test_derivation_c3_example(self):
        d = cartan_data(LieType("C", 3))
        assert derive_s_from_t(d, 1, 1).values == {1, 4}

    def test_derivation_last_column_matches_table(self):
        for l in range(2, 9):
            d = cartan_data(LieType("C", l))
            for bm in range(1, l):
                expected = {f(l - bm + 1, 2) + 2 + r for r in range(bm)}
                assert derive_s_from_t(d, bm, l).values == expected

    def test_derivation_equals_table_everywhere(self):
        for l in range(2, 9):
            d = cartan_data(LieType("C", l))
            for bm in range(1, l + 1):
                for bn in range(1, l + 1):
                    assert derive_s_from_t(d, bm, bn).values == s_set(d, bm, bn).values


class TestCyclicity:
    def test_descending_pair_is_cyclic(self):
        report = is_cyclic(word("A1", (1, 1, 0), (1, 0, 0)))
        assert report.cyclic_guaranteed and not report.violations

    def test_ascending_unit_gap_violates(self):
        report = is_cyclic(word("A1", (1, 0, 0), (1, 1, 0)))
        assert not report.cyclic_guaranteed
        v = report.violations[0]
        assert (v.m, v.n, v.diff, v.member) == (1, 2, cr(1), Fraction(1))

    def test_single_factor_trivially_cyclic(self):
        assert is_cyclic(word("C3", (2, 5, 0))).cyclic_guaranteed

    def test_complex_difference_never_violates(self):
        report = is_cyclic(word("A1", (1, 0, 0), (1, 1, 1)))
        assert report.cyclic_guaranteed


class TestIrreducibility:
    def test_gap_two_guaranteed(self):
        verdict = is_irreducible(word("A1", (1, 0, 0), (1, 2, 0)))
        assert verdict.status is IrreducibilityStatus.IRREDUCIBLE_GUARANTEED

    def test_unit_gap_reducible_in_type_a(self):
        for order in [((1, 0, 0), (1, 1, 0)), ((1, 1, 0), (1, 0, 0))]:
            verdict = is_irreducible(word("A1", *order))
            assert verdict.status is IrreducibilityStatus.REDUCIBLE_PROVEN
            assert verdict.evidence

    def test_non_type_a_gives_not_guaranteed(self):
        verdict = is_irreducible(word("C3", (1, 0, 0), (1, 4, 0)))
        assert verdict.status is IrreducibilityStatus.NOT_GUARANTEED


class TestLeftDual:
    def test_rank_one_shift(self):
        a = f(5, 3)
        dual = left_dual(word("A1", (1, a, 0)))
        assert dual.factors == (FundamentalFactor(1, cr(a - 1)),)

    def test_double_dual(self):
        w = word("D5", (1, 0, 0), (4, 2, 1), (5, -1, 0))
        dd = left_dual(left_dual(w))
        kap = cartan_data(w.type).kappa
        assert [g.node for g in dd.factors] == [g.node for g in w.factors]
        assert all(
            g.param == g0.param - cr(2 * kap) for g, g0 in zip(dd.factors, w.factors)
        )

    def test_a2_example(self):
        dual = left_dual(word("A2", (1, 0, 0), (2, 1, 0)))
        assert dual.factors == (
            FundamentalFactor(1, cr(f(-1, 2))),
            FundamentalFactor(2, cr(f(-3, 2))),
        )


class TestFactorization:
    def test_sort_by_real_part(self):
        t = DrinfeldTuple(
            LieType("A", 2),
            (MonicPoly.from_roots([3]), MonicPoly.from_roots([1, 5])),
        )
        w = weyl_factorize(t)
        assert [(g.node, g.param) for g in w.factors] == [(2, cr(5)), (1, cr(3)), (2, cr(1))]

    def test_rank_one_descending(self):
        roots = [f(7, 2), f(7, 2), 1, -2]
        t = DrinfeldTuple(LieType("A", 1), (MonicPoly.from_roots(roots),))
        w = weyl_factorize(t)
        assert [g.param.re for g in w.factors] == sorted(map(Fraction, roots), reverse=True)

    def test_empty_component_is_fine(self):
        t = DrinfeldTuple(
            LieType("A", 2), (MonicPoly.one(), MonicPoly.from_roots([0]))
        )
        w = weyl_factorize(t)
        assert len(w) == 1 and w.factors[0].node == 2

    def test_zero_degree_rejected(self):
        with pytest.raises(ValueError):
            weyl_factorize(DrinfeldTuple(LieType("A", 2), (MonicPoly.one(), MonicPoly.one())))

    def test_tie_break_deterministic(self):
        t = DrinfeldTuple(
            LieType("B", 2),
            (MonicPoly((cr(0, 1), cr(0, -1), cr(0))), MonicPoly((cr(0),))),
        )
        w = weyl_factorize(t)
        assert [(g.node, g.param) for g in w.factors] == [
            (1, cr(0, 1)),
            (1, cr(0)),
            (2, cr(0)),
            (1, cr(0, -1)),
        ]

    def test_factorization_is_cyclic_random(self):
        rng = random.Random(99)
        for family, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3)):
            for _ in range(25):
                lt = LieType(family, rng.randint(lo, 8))
                w = weyl_factorize(random_tuple(rng, lt))
                assert is_cyclic(w).cyclic_guaranteed
                assert tuple_of_word(w) == tuple_of_word(w)  # determinism sanity

    def test_word_tuple_round_trip(self):
        rng = random.Random(5)
        for _ in range(20):
            t = random_tuple(rng, LieType("C", 3))
            if t.total_degree:
                assert tuple_of_word(weyl_factorize(t)) == t


class TestShiftInvariance:
    def test_verdicts_invariant_under_global_shift(self):
        words = [
            word("A1", (1, 0, 0), (1, 1, 0)),
            word("A3", (1, 0, 0), (2, f(3, 2), 0), (3, -1, 0)),
            word("C2", (2, 0, 0), (1, 3, 0)),
            word("D4", (3, 0, 0), (4, 2, 0)),
        ]
        shifts = [cr(f(7, 3)), cr(f(1, 2), 2), cr(0, -1)]
        for w in words:
            base_cyc = is_cyclic(w)
            base_irr = is_irreducible(w)
            for c in shifts:
                shifted = shift_word(w, c)
                assert is_cyclic(shifted).cyclic_guaranteed == base_cyc.cyclic_guaranteed
                assert is_irreducible(shifted).status == base_irr.status
